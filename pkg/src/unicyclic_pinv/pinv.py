"""Closed-form (pseudo)inverses of unicyclic incidence matrices.

Rows of every inverse are indexed by edges and columns by vertices.  All
constructions read the cached distances and branch data of a
:class:`~unicyclic_pinv.graph_core.UnicyclicDecomposition` and fill the result
one row at a time, O(n^2) overall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_arith import RationalMatrix, identity, mat_mul, mat_transpose
from .graph_core import GraphClass, UnicyclicDecomposition

__all__ = [
    "CombinatorialPinv",
    "CycleParityError",
    "even_unicyclic_pinv",
    "odd_unicyclic_inverse",
    "combinatorial_pinv",
    "cycle_row_numerators",
    "predicted_MH",
    "predicted_HM",
    "qplus_splus",
]

EVEN_PROVENANCE = "even-unicyclic Moore-Penrose formula (edge/vertex case split, canonical endpoint = smaller label)"
ODD_PROVENANCE = "odd-unicyclic inverse formula"


class CycleParityError(ValueError):
    """The formula requested does not match the parity of the graph's cycle."""


@dataclass(frozen=True)
class CombinatorialPinv:
    h: RationalMatrix
    graph_class: GraphClass
    provenance: str


def _signs(d: np.ndarray) -> np.ndarray:
    return 1 - 2 * (d & 1)


def _edge_vertex_dist(dec: UnicyclicDecomposition, edge: int) -> np.ndarray:
    r, s = dec.graph.edges[edge]
    return np.minimum(dec.dist[r], dec.dist[s])


def _cycle_row(dec: UnicyclicDecomposition, edge: int, endpoint: int) -> np.ndarray:
    n = dec.n
    off = dec.cycle_offsets(edge, endpoint)
    branch = dec.subtree[list(dec.cycle_vertices)]
    weighted = int(branch @ off)  # sum over t in C of n_t * d_{G-e}(endpoint, t)
    to_anchor = off[dec.cycle_pos[dec.anchor]]
    return _signs(to_anchor + dec.depth) * (weighted - n * to_anchor)


def cycle_row_numerators(dec: UnicyclicDecomposition, edge: int, endpoint: int) -> np.ndarray:
    """Numerators (over ``n|C|``) of the cycle-edge row evaluated from ``endpoint``.

    ``edge`` and ``endpoint`` are 1-based labels; either endpoint gives the
    same row on an even cycle.
    """
    return _cycle_row(dec, edge - 1, endpoint - 1)


def even_unicyclic_pinv(dec: UnicyclicDecomposition) -> CombinatorialPinv:
    if not dec.is_even:
        raise CycleParityError(f"cycle length {dec.cycle_length} is odd; use odd_unicyclic_inverse")
    n, L = dec.n, dec.cycle_length
    num = np.empty((dec.graph.m, n), dtype=np.int64)
    for i, (r, _) in enumerate(dec.graph.edges):
        c = dec.child[i]
        if c < 0:
            num[i] = _cycle_row(dec, i, r)
            continue
        outer = int(dec.subtree[c])
        sizes = np.where(dec.below_mask(c), n - outer, outer)
        num[i] = _signs(_edge_vertex_dist(dec, i)) * L * sizes
    h = RationalMatrix.from_integers(num.tolist(), n * L)
    return CombinatorialPinv(h, GraphClass.EvenUnicyclic, EVEN_PROVENANCE)


def odd_unicyclic_inverse(dec: UnicyclicDecomposition) -> CombinatorialPinv:
    if dec.is_even:
        raise CycleParityError(f"cycle length {dec.cycle_length} is even; M is singular")
    num = np.empty((dec.graph.m, dec.n), dtype=np.int64)
    for i in range(dec.graph.m):
        sign = _signs(_edge_vertex_dist(dec, i))
        c = dec.child[i]
        if c < 0:
            num[i] = sign
        else:
            num[i] = np.where(dec.below_mask(c), 2 * sign, 0)
    h = RationalMatrix.from_integers(num.tolist(), 2)
    return CombinatorialPinv(h, GraphClass.OddUnicyclic, ODD_PROVENANCE)


def combinatorial_pinv(dec: UnicyclicDecomposition) -> CombinatorialPinv:
    return even_unicyclic_pinv(dec) if dec.is_even else odd_unicyclic_inverse(dec)


def predicted_MH(dec: UnicyclicDecomposition) -> RationalMatrix:
    """``I - P/n`` on even cycles (``P`` the parity matrix), ``I`` on odd ones."""
    n = dec.n
    if not dec.is_even:
        return identity(n)
    num = n * np.eye(n, dtype=np.int64) - _signs(dec.dist)
    return RationalMatrix.from_integers(num.tolist(), n)


def predicted_HM(dec: UnicyclicDecomposition) -> RationalMatrix:
    """Closed form of ``H M`` on even cycles; ``I`` for odd cycles (``M`` invertible)."""
    m = dec.graph.m
    if not dec.is_even:
        return identity(m)
    L = dec.cycle_length
    num = L * np.eye(m, dtype=np.int64)
    ce = list(dec.cycle_edges)
    ends = np.array([dec.graph.edges[e] for e in ce])
    r, s = ends[:, 0], ends[:, 1]
    D = dec.dist
    edge_dist = np.minimum.reduce([D[np.ix_(r, r)], D[np.ix_(r, s)], D[np.ix_(s, r)], D[np.ix_(s, s)]])
    block = _signs(edge_dist)
    np.fill_diagonal(block, L - 1)
    num[np.ix_(ce, ce)] = block
    return RationalMatrix.from_integers(num.tolist(), L)


def qplus_splus(h: CombinatorialPinv | RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """``(H^T H, H H^T)``: pseudoinverses of ``M M^T`` and ``M^T M``."""
    hm = h.h if isinstance(h, CombinatorialPinv) else h
    ht = mat_transpose(hm)
    return mat_mul(ht, hm), mat_mul(hm, ht)
