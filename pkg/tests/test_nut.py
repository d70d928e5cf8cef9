import pytest
from hypothesis import given

from corpus import S1, S2, S3, connected
from nutkit import families as F
from nutkit.errors import NotFullVector
from nutkit.graph import Graph
from nutkit.linalg import adjacency_matrix
from nutkit.nut import edge_signatures, is_core, is_nut, nullity, satisfies_local_condition
from oracles import sympy_is_nut, sympy_nullity
from strategies import graphs


def test_nullity_examples():
    assert nullity(F.cycle(6)).eta == 0
    assert nullity(F.cycle(8)).eta == 2
    assert nullity(Graph(1)).eta == 1
    assert nullity(F.rose_window(6, 1, 2)).eta == 3


def test_nut_examples():
    v = is_nut(S1)
    assert v and all(v.witness)
    assert not is_nut(F.cycle(7))
    assert not is_nut(F.cycle(6))
    assert not is_nut(F.complete_bipartite(3))


def test_k1_is_neither_nut_nor_core():
    assert not is_nut(Graph(1))
    assert not is_core(Graph(1))


def test_core_examples():
    r6 = F.rose_window(6, 1, 2)
    v = is_core(r6)
    assert v and not is_nut(r6)
    assert all(v.witness)
    assert adjacency_matrix(r6).apply(v.witness) == (0,) * r6.order
    assert not is_core(F.path(3))


def test_core_witness_on_multi_dimensional_kernels():
    for g in [F.cycle(8), F.cycle(12), F.complete_bipartite(3), F.antiprism(3), Graph(4)]:
        v = is_core(g)
        assert v, g
        assert satisfies_local_condition(g, v.witness)
        assert all(v.witness)


def test_degenerate_inputs_are_not_nut():
    assert not is_nut(Graph(0))
    assert not is_nut(Graph(5))
    assert not is_nut(Graph(14, list(S1.edges) + [(a + 7, b + 7) for a, b in S1.edges]))


@given(graphs(max_order=9))
def test_classification_matches_sympy(g):
    rep = nullity(g)
    assert rep.eta == sympy_nullity(g)
    assert bool(is_nut(g, rep)) == sympy_is_nut(g)
    for v in rep.basis:
        assert satisfies_local_condition(g, v)


def test_nut_graph_structure_over_enumeration():
    for n in range(2, 9):
        for g in connected(n):
            rep = nullity(g)
            nut = is_nut(g, rep)
            if not nut:
                continue
            assert is_core(g, rep)
            assert g.is_connected() and not g.is_bipartite()
            assert min(g.degrees()) >= 2
            assert satisfies_local_condition(g, nut.witness)


def test_no_nut_graphs_below_seven():
    for n in range(1, 7):
        assert not any(is_nut(g) for g in connected(n))


def test_edge_signatures_on_triangle_cycle():
    t3 = F.triangle_cycle(3)
    x = is_nut(t3).witness
    table = edge_signatures(t3, x)
    for u, v in t3.edges:
        spoke = (u < 3) != (v < 3)
        assert table[(u, v)].like == (not spoke)
    assert {x[v] for v in range(3)} == {1}
    assert {x[v] for v in range(3, 9)} == {-1}


def test_edge_signatures_on_s1():
    table = edge_signatures(S1, is_nut(S1).witness)
    assert table.like and table.unlike


def test_every_vertex_has_an_unlike_edge():
    for g in (S1, S2, S3, F.antiprism(4), F.sporadic("grr12")):
        x = is_nut(g).witness
        table = edge_signatures(g, x)
        for v in g.vertices():
            assert any(not table[e].like for e in table.signatures if v in e)


def test_edge_signatures_rejects_bad_vectors():
    with pytest.raises(NotFullVector):
        edge_signatures(F.path(3), (1, 0, -1))
    with pytest.raises(NotFullVector):
        edge_signatures(F.cycle(4), (1, 1, 1, 1))
