"""Named matrices of a graph: incidence, parity, and the two signless Laplacians."""

from __future__ import annotations

from .exact_arith import RationalMatrix, mat_mul, mat_transpose
from .graph_core import Graph, distance_matrix

__all__ = ["incidence_matrix", "parity_matrix", "signless_laplacians"]


def incidence_matrix(g: Graph) -> RationalMatrix:
    """``n x m`` 0/1 matrix; column ``j`` has ones at the endpoints of ``e_{j+1}``."""
    num = [[0] * g.m for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        num[u][j] = 1
        num[v][j] = 1
    return RationalMatrix.from_integers(num)


def parity_matrix(g: Graph) -> RationalMatrix:
    """``[(-1)^{d(i,j)}]``; ``g`` is connected by construction."""
    d = distance_matrix(g)
    return RationalMatrix.from_integers((1 - 2 * (d & 1)).tolist())


def signless_laplacians(m: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """Return ``(Q, S) = (M M^T, M^T M)``."""
    mt = mat_transpose(m)
    return mat_mul(m, mt), mat_mul(mt, m)
