from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from nsdweight.bipartite import (
    bip_even_two, bip_four, bip_six, bip_three_weighting, bip_two_local, even_side,
)
from nsdweight.errors import GraphError
from nsdweight.generators import (
    complete_bipartite, connected_bipartite_labeled, cycle, path, random_bipartite, star,
)
from nsdweight.graph import Graph, components, is_connected, is_nice, sigma

from conftest import ref_ok, ref_sums, to_nx


def sees_both(g: Graph, w) -> bool:
    return all(len({w[e] for _, e in g.adj[v]}) == 2 for v in range(g.n) if g.degree(v) >= 2)


def test_three_weighting_examples():
    w, cert = bip_three_weighting(path(3))
    assert tuple(w) == (2, 2) and sigma(path(3), w.weights) == (2, 4, 2)
    w, cert = bip_three_weighting(cycle(4))
    assert tuple(w) == (2, 1, 3, 3)
    assert sigma(cycle(4), w.weights) == (5, 3, 4, 6)
    assert cert.residues == (2, 0, 1, 0) and cert.holds(cycle(4))


def test_two_local_examples():
    assert tuple(bip_two_local(cycle(6))) == (1, 2, 1, 2, 1, 2)
    assert tuple(bip_two_local(path(4))) == (1, 2, 1)
    w = bip_two_local(star(4))
    assert sorted(w.weights) == [1, 1, 2] and sees_both(star(4), w.weights)


def test_six_examples():
    w = bip_six(cycle(4))
    assert tuple(w) == (2, 1, 3, 6) and sigma(cycle(4), w.weights) == (8, 3, 4, 9)
    assert tuple(bip_six(path(3))) == (2, 5)
    for n in (4, 6, 8, 10):
        assert ref_ok(cycle(n), bip_six(cycle(n)).weights, 6, t=2)


def test_even_two_examples():
    for g in (cycle(4), path(4)):
        w, cert = bip_even_two(g)
        s = sigma(g, w.weights)
        side = cert.side
        assert all(s[v] % 2 == (1 if v in side else 0) for v in range(g.n))
        assert ref_ok(g, w.weights, 2, t=10 ** 9)
    with pytest.raises(GraphError):
        bip_even_two(cycle(6))


def test_four_examples():
    assert ref_ok(cycle(4), bip_four(cycle(4)).weights, 4, t=2)
    assert ref_ok(complete_bipartite(2, 3), bip_four(complete_bipartite(2, 3)).weights, 4, t=2)
    with pytest.raises(GraphError):
        bip_four(cycle(6))


def test_structural_errors():
    with pytest.raises(GraphError):
        bip_six(cycle(5))
    with pytest.raises(GraphError):
        bip_six(Graph(2, [(0, 1)]))
    with pytest.raises(GraphError):
        bip_three_weighting(Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]))


def test_bipartite_enumerator_counts():
    # labeled connected bipartite graphs: 1, 1, 3, 19, 195, 3031
    assert [sum(1 for _ in connected_bipartite_labeled(n)) for n in range(1, 7)] == [1, 1, 3, 19, 195, 3031]
    for g in connected_bipartite_labeled(5):
        assert nx.is_bipartite(to_nx(g)) and nx.is_connected(to_nx(g))


def check_pipeline(g: Graph) -> None:
    base, cert = bip_three_weighting(g)
    assert cert.holds(g)
    w6 = bip_six(g).weights
    assert ref_ok(g, w6, 6, t=2)
    s6, sb = ref_sums(g, w6), ref_sums(g, base.weights)
    assert all(s6[v] % 3 == sb[v] % 3 for v in range(g.n))
    if even_side(g) is not None:
        base2, _ = bip_even_two(g)
        w4 = bip_four(g).weights
        assert ref_ok(g, w4, 4, t=2)
        s4, sb2 = ref_sums(g, w4), ref_sums(g, base2.weights)
        assert all(s4[v] % 2 == sb2[v] % 2 for v in range(g.n))


def test_exhaustive_six_vertices():
    for n in range(3, 7):
        for g in connected_bipartite_labeled(n):
            check_pipeline(g)


@given(st.integers(0, 10 ** 9))
def test_random_bipartite(seed):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(1, 12), rng.randint(1, 12), rng.random(), seed)
    for comp in components(g):
        if comp.graph.n >= 3:
            check_pipeline(comp.graph)
    if is_nice(g) and g.m:
        assert ref_ok(g, bip_six(g).weights, 6, t=2)


@given(st.integers(0, 10 ** 9))
def test_two_local_any_bipartite(seed):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(1, 10), rng.randint(1, 10), rng.random(), seed)
    w = bip_two_local(g).weights
    assert set(w) <= {1, 2} and sees_both(g, w)
