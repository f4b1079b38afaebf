"""Graphs, unicyclic classification and the distance/branch machinery.

Vertex and edge labels are 1-based at every public entry point (vertex ``j``,
edge ``e_i``).  Arrays stored on :class:`Graph` and
:class:`UnicyclicDecomposition` are 0-based and hold 0-based values.
"""

from __future__ import annotations

import enum
import functools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

__all__ = [
    "Graph",
    "GraphClass",
    "GraphFormatError",
    "NotUnicyclicError",
    "CycleDescriptor",
    "UnicyclicDecomposition",
    "parse_graph",
    "format_graph",
    "classify",
    "find_cycle",
    "decompose",
    "distance_matrix",
    "dist",
    "dist_edge_vertex",
    "dist_in_tree_minus_edge",
    "dist_edge_edge",
]


class GraphFormatError(ValueError):
    """Malformed edge list or a graph violating the simple/connected contract."""


class NotUnicyclicError(ValueError):
    pass


class GraphClass(enum.Enum):
    Tree = "Tree"
    OddUnicyclic = "OddUnicyclic"
    EvenUnicyclic = "EvenUnicyclic"
    Other = "Other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``1..n``.

    ``edges`` holds 0-based pairs ``(u, v)`` with ``u < v``; position ``i`` is
    edge ``e_{i+1}``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        seen = set()
        norm = []
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge e{idx + 1}: vertex label out of range 1..{self.n}")
            if u == v:
                raise GraphFormatError(f"edge e{idx + 1}: self-loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"edge e{idx + 1}: duplicate edge {{{key[0] + 1},{key[1] + 1}}}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(norm):
            adj[u].append(idx)
            adj[v].append(idx)
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        if not self._connected():
            raise GraphFormatError("graph is disconnected")

    @classmethod
    def from_labels(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 1-based vertex labels."""
        return cls(n, tuple((u - 1, v - 1) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def other(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return w if v == u else u

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines edge-list format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append((lineno, s))
    if not lines:
        raise GraphFormatError("empty input: expected header line 'n m'")

    def ints(lineno, s):
        parts = s.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {s!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {s!r}") from None

    n, m = ints(*lines[0])
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lines[0][0]}: invalid header n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, s in body:
        u, v = ints(lineno, s)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex label out of range 1..{n}")
        edges.append((u, v))
    return Graph.from_labels(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(out) + "\n"


@functools.lru_cache(maxsize=16)
def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances (0-based ``n x n`` int array, read-only)."""
    if g.m == 0:
        d = np.zeros((g.n, g.n), dtype=np.int64)
    else:
        u, v = np.array(g.edges).T
        adj = csr_matrix((np.ones(g.m), (u, v)), shape=(g.n, g.n))
        d = shortest_path(adj, method="D", directed=False, unweighted=True).astype(np.int64)
    d.setflags(write=False)
    return d


def _prune_to_cycle(g: Graph) -> list[bool]:
    """Strip degree-1 vertices repeatedly; what survives is the cycle."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return alive


@dataclass(frozen=True)
class CycleDescriptor:
    """The unique cycle, 1-based labels, in canonical orientation."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def classify(g: Graph) -> GraphClass:
    if g.m == g.n - 1:
        return GraphClass.Tree
    if g.m == g.n:
        length = sum(_prune_to_cycle(g))
        return GraphClass.OddUnicyclic if length % 2 else GraphClass.EvenUnicyclic
    return GraphClass.Other


def _cycle0(g: Graph) -> tuple[list[int], list[int]]:
    if g.m != g.n:
        raise NotUnicyclicError(f"graph with n={g.n}, m={g.m} is not unicyclic")
    alive = _prune_to_cycle(g)
    start = alive.index(True)
    # On a unicyclic graph each surviving vertex has exactly two surviving neighbours.
    nbrs = sorted(
        (g.other(e, start), e) for e in g.adjacency[start] if alive[g.other(e, start)]
    )
    verts = [start]
    edges = [nbrs[0][1]]
    prev, cur = start, nbrs[0][0]
    while cur != start:
        verts.append(cur)
        nxt = [(g.other(e, cur), e) for e in g.adjacency[cur] if alive[g.other(e, cur)] and e != edges[-1]]
        w, e = nxt[0]
        edges.append(e)
        prev, cur = cur, w
    return verts, edges


def find_cycle(g: Graph) -> CycleDescriptor:
    verts, edges = _cycle0(g)
    return CycleDescriptor(tuple(v + 1 for v in verts), tuple(e + 1 for e in edges))


@dataclass(frozen=True, eq=False)
class UnicyclicDecomposition:
    """Cycle, branches and cached distances of a unicyclic graph.

    0-based arrays:

    ``cycle_pos[v]``   position of ``v`` along the canonical cycle, or -1.
    ``anchor[v]``      the cycle vertex ``v*`` closest to ``v``.
    ``depth[v]``       ``d(v, v*)``.
    ``parent[v]``      next vertex towards the cycle (-1 on the cycle).
    ``subtree[v]``     vertices in the subtree hanging below ``v`` (``v`` included).
    ``tin``/``tout``   DFS interval; ``w`` lies below ``v`` iff ``tin[v] <= tin[w] < tout[v]``.
    ``child[e]``       for an off-cycle edge, its endpoint away from the cycle; -1 on the cycle.
    ``dist``           all-pairs distance matrix of the graph.

    For an off-cycle edge ``e`` the vertices below ``child[e]`` form the
    component of ``G - e`` without the cycle.
    """

    graph: Graph
    cycle: CycleDescriptor
    cycle_vertices: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    cycle_pos: np.ndarray
    edge_cycle_pos: np.ndarray
    anchor: np.ndarray
    depth: np.ndarray
    parent: np.ndarray
    subtree: np.ndarray
    tin: np.ndarray
    tout: np.ndarray
    child: np.ndarray
    dist: np.ndarray

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def cycle_length(self) -> int:
        return len(self.cycle_vertices)

    @property
    def is_even(self) -> bool:
        return self.cycle_length % 2 == 0

    def on_cycle(self, edge: int) -> bool:
        """0-based edge index."""
        return self.child[edge] < 0

    # label-based accessors
    def anchor_of(self, j: int) -> int:
        return int(self.anchor[j - 1]) + 1

    def depth_of(self, j: int) -> int:
        return int(self.depth[j - 1])

    def branch_size(self, t: int) -> int:
        """``n_t`` for cycle vertex ``t``."""
        if self.cycle_pos[t - 1] < 0:
            raise ValueError(f"vertex {t} is not on the cycle")
        return int(self.subtree[t - 1])

    def branch_sizes(self) -> dict[int, int]:
        return {v + 1: int(self.subtree[v]) for v in self.cycle_vertices}

    def outer_component(self, edge: int) -> frozenset[int]:
        """Labels of ``G - e_i`` minus the cycle component (empty for cycle edges)."""
        c = int(self.child[edge - 1])
        if c < 0:
            return frozenset()
        lo, hi = self.tin[c], self.tout[c]
        return frozenset(int(w) + 1 for w in np.nonzero((self.tin >= lo) & (self.tin < hi))[0])

    def split_sizes(self, edge: int) -> tuple[int, int]:
        """``(|G - e_i (C)|, |G - e_i [C]|)`` for edge label ``edge``."""
        c = int(self.child[edge - 1])
        outer = 0 if c < 0 else int(self.subtree[c])
        return outer, self.n - outer

    def below_mask(self, v: int) -> np.ndarray:
        """Boolean mask over 0-based vertices lying in the subtree of 0-based ``v``."""
        return (self.tin >= self.tin[v]) & (self.tin < self.tout[v])

    def cycle_offsets(self, edge: int, endpoint: int) -> np.ndarray:
        """Distances in ``G - e`` from ``endpoint`` to each cycle vertex.

        ``edge`` and ``endpoint`` are 0-based; result is indexed by cycle
        position.
        """
        L = self.cycle_length
        k = int(self.edge_cycle_pos[edge])
        if k < 0:
            raise ValueError(f"edge e{edge + 1} is not on the cycle")
        # Cycle edge at position k joins positions k and k+1.
        pos = np.arange(L)
        p = int(self.cycle_pos[endpoint])
        if p == k:
            return (k - pos) % L
        if p == (k + 1) % L:
            return (pos - p) % L
        raise ValueError(f"vertex {endpoint + 1} is not an endpoint of e{edge + 1}")

    def tree_minus_edge_distances(self, edge: int, endpoint: int) -> np.ndarray:
        """``d_{G-e}(endpoint, j)`` for every 0-based vertex ``j``."""
        off = self.cycle_offsets(edge, endpoint)
        return off[self.cycle_pos[self.anchor]] + self.depth


@functools.lru_cache(maxsize=16)
def decompose(g: Graph) -> UnicyclicDecomposition:
    verts, edges = _cycle0(g)
    n = g.n
    cycle_pos = np.full(n, -1, dtype=np.int64)
    cycle_pos[verts] = np.arange(len(verts))
    edge_cycle_pos = np.full(g.m, -1, dtype=np.int64)
    edge_cycle_pos[edges] = np.arange(len(edges))

    anchor = np.full(n, -1, dtype=np.int64)
    depth = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    subtree = np.ones(n, dtype=np.int64)
    tin = np.zeros(n, dtype=np.int64)
    tout = np.zeros(n, dtype=np.int64)
    child = np.full(g.m, -1, dtype=np.int64)

    clock = 0
    for root in verts:
        anchor[root] = root
        # iterative DFS over the branch hanging from root, never re-entering the cycle
        tin[root] = clock
        clock += 1
        stack = [(root, iter(g.adjacency[root]))]
        while stack:
            v, it = stack[-1]
            for e in it:
                w = g.other(e, v)
                if cycle_pos[w] >= 0 or w == parent[v]:
                    continue
                parent[w] = v
                anchor[w] = root
                depth[w] = depth[v] + 1
                child[e] = w
                tin[w] = clock
                clock += 1
                stack.append((w, iter(g.adjacency[w])))
                break
            else:
                stack.pop()
                tout[v] = clock
                if stack:
                    subtree[stack[-1][0]] += subtree[v]

    for arr in (cycle_pos, edge_cycle_pos, anchor, depth, parent, subtree, tin, tout, child):
        arr.setflags(write=False)
    return UnicyclicDecomposition(
        graph=g,
        cycle=CycleDescriptor(tuple(v + 1 for v in verts), tuple(e + 1 for e in edges)),
        cycle_vertices=tuple(verts),
        cycle_edges=tuple(edges),
        cycle_pos=cycle_pos,
        edge_cycle_pos=edge_cycle_pos,
        anchor=anchor,
        depth=depth,
        parent=parent,
        subtree=subtree,
        tin=tin,
        tout=tout,
        child=child,
        dist=distance_matrix(g),
    )


# -- label-based distance operations ----------------------------------------


def _vertex(g: Graph, j: int) -> int:
    if not 1 <= j <= g.n:
        raise IndexError(f"vertex {j} out of range 1..{g.n}")
    return j - 1


def _edge(g: Graph, e: int) -> int:
    if not 1 <= e <= g.m:
        raise IndexError(f"edge e{e} out of range e1..e{g.m}")
    return e - 1


def dist(g: Graph, i: int, j: int) -> int:
    return int(distance_matrix(g)[_vertex(g, i), _vertex(g, j)])


def dist_edge_vertex(g: Graph, e: int, j: int) -> int:
    r, s = g.edges[_edge(g, e)]
    row = distance_matrix(g)[:, _vertex(g, j)]
    return int(min(row[r], row[s]))


def dist_edge_edge(g: Graph, e: int, f: int) -> int:
    r, s = g.edges[_edge(g, e)]
    p, q = g.edges[_edge(g, f)]
    d = distance_matrix(g)
    return int(min(d[r, p], d[r, q], d[s, p], d[s, q]))


def dist_in_tree_minus_edge(g: Graph, e: int, r: int, j: int) -> int:
    """Distance from ``r`` to ``j`` in the tree ``G - e_i`` for a cycle edge ``e_i``."""
    d = decompose(g)
    ei, rv, jv = _edge(g, e), _vertex(g, r), _vertex(g, j)
    if not d.on_cycle(ei):
        raise ValueError(f"edge e{e} is not on the cycle")
    if rv not in g.edges[ei]:
        raise ValueError(f"vertex {r} is not an endpoint of e{e}")
    off = d.cycle_offsets(ei, rv)
    return int(off[d.cycle_pos[d.anchor[jv]]] + d.depth[jv])
