from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXAMPLE9_M
from unicyclic_pinv.exact_arith import RationalMatrix, mat_transpose
from unicyclic_pinv.generate import GenSpec, random_unicyclic
from unicyclic_pinv.graph_core import Graph, distance_matrix
from unicyclic_pinv.matrices import incidence_matrix, parity_matrix, signless_laplacians
from unicyclic_pinv.oracle import check_parity_annihilation

specs = st.builds(GenSpec, n=st.integers(3, 30), parity=st.sampled_from(["odd", "any"]), seed=st.integers(0, 2**32))
even_specs = st.builds(GenSpec, n=st.integers(4, 30), parity=st.just("even"), seed=st.integers(0, 2**32))


def test_incidence_examples(triangle, example9):
    assert incidence_matrix(triangle) == RationalMatrix([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert incidence_matrix(example9) == RationalMatrix(EXAMPLE9_M)
    assert incidence_matrix(Graph.from_labels(2, [(1, 2)])) == RationalMatrix([[1], [1]])


def test_parity_examples(example9):
    assert parity_matrix(Graph(1, ())) == RationalMatrix([[1]])
    p = parity_matrix(example9)
    assert p[0, 7] == -1
    assert all(p[i, i] == 1 for i in range(9))


def test_signless_laplacians_triangle(triangle):
    q, s = signless_laplacians(incidence_matrix(triangle))
    assert q == RationalMatrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert s == RationalMatrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])


def test_example9_degrees(example9):
    q, s = signless_laplacians(incidence_matrix(example9))
    assert q[3, 3] == 4
    assert [q[i, i] for i in range(9)] == [example9.degree(v) for v in range(9)]
    assert all(s[i, i] == 2 for i in range(9))


@given(specs)
def test_incidence_structure(spec):
    g = random_unicyclic(spec)
    m = incidence_matrix(g)
    assert all(x in (0, 1) for row in m.numerators for x in row)
    assert [sum(c) for c in zip(*m.numerators)] == [2] * g.m
    assert [sum(r) for r in m.numerators] == [g.degree(v) for v in range(g.n)]
    q, s = signless_laplacians(m)
    assert q.is_symmetric() and s.is_symmetric()
    adjacent = {frozenset(e) for e in g.edges}
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                assert q[i, j] == int(frozenset((i, j)) in adjacent)


@given(specs)
def test_parity_matrix_structure(spec):
    g = random_unicyclic(spec)
    p = parity_matrix(g)
    assert p.is_symmetric()
    d = distance_matrix(g)
    assert all(p[i, j] == (-1) ** int(d[i, j]) for i in range(g.n) for j in range(g.n))


@settings(max_examples=60)
@given(even_specs)
def test_parity_annihilates_even(spec):
    g = random_unicyclic(spec)
    assert check_parity_annihilation(g, incidence_matrix(g))


def test_parity_annihilation_examples(example9, triangle, c4):
    assert check_parity_annihilation(example9, incidence_matrix(example9))
    assert not check_parity_annihilation(triangle, incidence_matrix(triangle))
    assert check_parity_annihilation(c4, incidence_matrix(c4))


def test_transposed_incidence_gives_edge_laplacian(example9):
    m = incidence_matrix(example9)
    _, s = signless_laplacians(m)
    assert s == mat_transpose(m) @ m
