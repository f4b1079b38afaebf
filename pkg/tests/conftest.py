from pathlib import Path

import networkx as nx
import pytest

from unicyclic_pinv.graph_core import Graph, parse_graph

DATA = Path(__file__).parent / "data"

# Incidence matrix of the nine-vertex example graph (tests/data/example9.txt).
EXAMPLE9_M = [
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
]

# Reference values of 36 * H for the same graph.
EXAMPLE9_36H = [
    [4, -4, 4, 4, 4, -4, -4, 32, -4],
    [4, -4, 4, 4, 4, 32, -4, -4, -4],
    [32, 4, -4, -4, -4, 4, 4, 4, 4],
    [-24, 24, -24, 12, 12, -12, -12, -12, -12],
    [-4, 4, 32, -4, -4, 4, 4, 4, 4],
    [10, -10, 10, -8, 10, 8, 17, 8, -1],
    [-6, 6, -6, 12, -6, -12, -3, -12, 15],
    [10, -10, 10, -8, 10, 8, -1, 8, 17],
    [-6, 6, -6, 12, -6, -12, 15, -12, -3],
]


@pytest.fixture(scope="session")
def example9() -> Graph:
    return parse_graph((DATA / "example9.txt").read_text())


@pytest.fixture(scope="session")
def triangle() -> Graph:
    return parse_graph((DATA / "triangle.txt").read_text())


@pytest.fixture(scope="session")
def c4() -> Graph:
    return parse_graph((DATA / "c4.txt").read_text())


def to_nx(g: Graph, drop_edge: int | None = None) -> nx.Graph:
    """networkx copy with 1-based labels; ``drop_edge`` is a 1-based edge index."""
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from((u + 1, v + 1) for i, (u, v) in enumerate(g.edges) if i + 1 != drop_edge)
    return h


def bfs_all(g: Graph, drop_edge: int | None = None) -> dict:
    return dict(nx.all_pairs_shortest_path_length(to_nx(g, drop_edge)))


# -- acceptance summary ----------------------------------------------------

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def acceptance_record():
    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
