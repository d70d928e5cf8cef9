import networkx as nx
import pytest
from hypothesis import given

from corpus import S1, connected
from nutkit import families as F
from nutkit.enumeration import canonical_form
from nutkit.errors import (
    ByteOutOfRange,
    EdgeNotPresent,
    IndexOutOfRange,
    NonzeroPadding,
    OrderOverflow,
    TrailingBytes,
    TruncatedPayload,
    UnsupportedFormat,
)
from nutkit.graph import Graph, cartesian_product, edge, fuse_at, parse_graph6, subdivide_edge, write_graph6
from strategies import graphs


def test_parse_small_examples():
    assert parse_graph6("@") == Graph(1)
    assert parse_graph6("A_") == F.complete(2)
    assert parse_graph6("Bw") == F.complete(3)


def test_write_small_examples():
    assert write_graph6(F.complete(3)) == b"Bw"
    assert write_graph6(Graph(1)) == b"@"
    assert write_graph6(Graph(0)) == b"?"


def test_header_and_whitespace_accepted():
    assert parse_graph6(b">>graph6<<Bw\n") == F.complete(3)


@pytest.mark.parametrize("text, error", [
    ("B w", ByteOutOfRange),
    ("B\x7f", ByteOutOfRange),
    ("C", TruncatedPayload),
    ("", TruncatedPayload),
    ("Bww", TrailingBytes),
    ("Bx", NonzeroPadding),
    ("~??", TruncatedPayload),
    (":Bw", UnsupportedFormat),
    (">>sparse6<<:Bw", UnsupportedFormat),
    ("&B?", UnsupportedFormat),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_graph6(text)


def test_large_order_header_round_trip():
    g = F.cycle(70)
    data = write_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g


def test_order_overflow():
    class Huge:
        order = 1 << 36

    with pytest.raises(OrderOverflow):
        write_graph6(Huge())


def test_graph6_agrees_with_networkx():
    for g in connected(5):
        ours = write_graph6(g)
        h = nx.empty_graph(g.order)
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).strip()
        assert ours == theirs


@given(graphs(max_order=14))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


def test_round_trip_over_enumeration():
    for n in range(1, 8):
        for g in connected(n):
            assert parse_graph6(write_graph6(g)) == g


def test_edge_rejects_loops():
    with pytest.raises(ValueError):
        edge(2, 2)


def test_bitsets_match_edges():
    g = F.circulant(9, [1, 3])
    for u in g.vertices():
        assert sorted(g.neighbors(u)) == [v for v in g.vertices() if g.has_edge(u, v)]
    assert sum(g.degrees()) == 2 * g.size


def test_cartesian_product_c3_c4():
    g = cartesian_product(F.cycle(3), F.cycle(4))
    assert g.order == 12 and g.size == 24
    assert set(g.degrees()) == {4}


def test_cartesian_product_labelling():
    g = cartesian_product(F.path(2), F.path(3))
    # (a, x) has label 3a + x
    assert g.has_edge(0, 3) and g.has_edge(1, 4) and g.has_edge(3, 4)
    assert not g.has_edge(0, 4)


def test_cartesian_product_identity():
    h = F.sporadic("phi5_d3")
    assert cartesian_product(Graph(1), h) == h


@given(graphs(max_order=4), graphs(max_order=4))
def test_cartesian_product_commutes_up_to_isomorphism(g, h):
    assert canonical_form(cartesian_product(g, h)) == canonical_form(cartesian_product(h, g))


def test_fuse_triangle_pentagon():
    assert S1.order == 7 and S1.size == 8
    assert S1.degree(0) == 4


def test_fuse_with_k1_is_identity():
    h = F.cycle(5)
    assert fuse_at(Graph(1), 0, h, 0) == h


@given(graphs(max_order=6), graphs(max_order=6))
def test_fuse_degree_and_order(g, h):
    f = fuse_at(g, 0, h, h.order - 1)
    assert f.order == g.order + h.order - 1
    assert f.size == g.size + h.size
    assert f.degree(0) == g.degree(0) + h.degree(h.order - 1)


def test_fuse_bad_vertex():
    with pytest.raises(IndexOutOfRange):
        fuse_at(F.cycle(3), 3, F.cycle(3), 0)


def test_subdivide_examples():
    assert canonical_form(subdivide_edge(F.cycle(3), (0, 1), 2)) == canonical_form(F.cycle(5))
    assert subdivide_edge(F.complete(2), (0, 1), 1) == Graph(3, [(0, 2), (1, 2)])


@given(graphs(min_order=2, max_order=8))
def test_subdivide_arithmetic(g):
    if not g.size:
        return
    e = g.edges[-1]
    h = subdivide_edge(g, e, 4)
    assert h.order == g.order + 4
    assert h.size == g.size + 4
    assert not h.has_edge(*e)


def test_subdivide_missing_edge():
    with pytest.raises(EdgeNotPresent):
        subdivide_edge(F.path(3), (0, 2), 1)


def test_connectivity_and_bipartiteness():
    assert F.cycle(6).is_bipartite() and not F.cycle(7).is_bipartite()
    assert not Graph(3, [(0, 1)]).is_connected()
    assert Graph(3, [(0, 1)]).components() == [[0, 1], [2]]


def test_bridges():
    g = fuse_at(F.cycle(3), 0, F.path(2), 0)
    assert g.is_bridge(0, 3)
    assert not g.is_bridge(0, 1)
