from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from nsdweight.errors import GraphError, ParseError
from nsdweight.generators import cycle, path
from nsdweight.graph import (
    Graph, bipartition, components, format_edge_list, format_weighting, is_connected, is_nice,
    is_star, parse_edge_list, parse_weighting, sigma,
)

from conftest import ref_sums, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def weighted(draw, max_n=9, k=7):
    g = draw(graphs(max_n))
    w = draw(st.lists(st.integers(1, k), min_size=g.m, max_size=g.m))
    return g, w


def test_parse_p3():
    g = parse_edge_list("0 1\n1 2")
    assert (g.n, g.m) == (3, 2)


def test_parse_rejects_duplicate_and_loop():
    with pytest.raises(ParseError):
        parse_edge_list("0 1\n0 1")
    with pytest.raises(ParseError):
        parse_edge_list("1 0\n0 1")
    with pytest.raises(ParseError):
        parse_edge_list("0 0")


def test_parse_reports_line_number():
    with pytest.raises(ParseError) as err:
        parse_edge_list("# header\n0 1\n2 x\n")
    assert err.value.lineno == 3


def test_parse_header_allows_isolated_vertices():
    g = parse_edge_list("n 5\n0 1\n")
    assert g.n == 5
    with pytest.raises(ParseError):
        parse_edge_list("n 2\n0 3\n")


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])


def test_components_examples():
    p3 = path(3)
    assert [c.vertices for c in components(p3)] == [(0, 1, 2)]
    p3k2 = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert sorted(len(c.vertices) for c in components(p3k2)) == [2, 3]
    assert len(components(Graph(4))) == 4


def test_is_nice_examples():
    assert not is_nice(Graph(2, [(0, 1)]))
    assert is_nice(path(3))
    assert not is_nice(Graph(5, [(0, 1), (1, 2), (3, 4)]))


def test_bipartition_examples():
    assert bipartition(cycle(4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(cycle(5)) is None
    assert bipartition(path(4)) == (frozenset({0, 2}), frozenset({1, 3}))


def test_sigma_examples():
    assert sigma(path(3), (1, 2)) == (1, 3, 2)
    assert sigma(cycle(4), (4, 4, 4, 4)) == (8, 8, 8, 8)
    assert sigma(Graph(1), ()) == (0,)


def test_is_star():
    assert is_star(Graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert is_star(path(3))
    assert not is_star(path(4))


def test_weighting_roundtrip():
    g = cycle(5)
    w = (1, 2, 3, 4, 5)
    assert tuple(parse_weighting(g, format_weighting(g, w))) == w
    with pytest.raises(GraphError):
        parse_weighting(g, "0 1 1\n")
    with pytest.raises(ParseError):
        parse_weighting(g, "0 2 1\n")


@given(weighted())
def test_handshake_and_reference_sums(gw):
    g, w = gw
    s = sigma(g, w)
    assert sum(s) == 2 * sum(w)
    assert s == tuple(ref_sums(g, w)[v] for v in range(g.n))


@given(graphs())
def test_components_reassemble(g):
    seen = []
    for c in components(g):
        for e, (a, b) in zip(c.edges, c.graph.edges):
            seen.append(tuple(sorted((c.vertices[a], c.vertices[b]))))
            assert g.edges[e] == seen[-1]
    assert sorted(seen) == sorted(g.edges)
    assert sorted(v for c in components(g) for v in c.vertices) == list(range(g.n))


@given(graphs())
def test_bipartition_edges_cross(g):
    import networkx as nx
    parts = bipartition(g)
    assert (parts is not None) == nx.is_bipartite(to_nx(g))
    if parts is not None:
        a, b = parts
        assert a | b == frozenset(range(g.n)) and not a & b
        assert all((u in a) != (v in a) for u, v in g.edges)


@given(graphs())
def test_connectivity_and_format_roundtrip(g):
    import networkx as nx
    assert is_connected(g) == (g.n <= 1 or nx.is_connected(to_nx(g)))
    assert parse_edge_list(format_edge_list(g)) == g


@given(graphs())
def test_pickle_roundtrip(g):
    import pickle
    assert pickle.loads(pickle.dumps(g)) == g
