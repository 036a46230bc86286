from __future__ import annotations

from hypothesis import given, strategies as st

from nsdweight.generators import cycle, path, star
from nsdweight.graph import Graph
from nsdweight.verify import check_distinguishing, check_relaxed, check_threshold, relaxed_degrees, report

from conftest import ref_ok
from test_graph import weighted


def test_distinguishing_examples():
    assert check_distinguishing(path(3), (1, 2)) == []
    assert check_distinguishing(Graph(2, [(0, 1)]), (5,)) == [0]
    assert check_distinguishing(cycle(4), (4, 4, 4, 4)) == [0, 1, 2, 3]


def test_threshold_examples():
    assert check_threshold(path(3), (1, 1), 2) == [1]
    assert check_threshold(path(3), (1, 2), 2) == []
    k17 = star(8)
    assert check_threshold(k17, (2,) + (1,) * 6, 6) == []


def test_relaxed_examples():
    c4 = cycle(4)
    assert check_relaxed(c4, (1, 2, 1, 2), 1) == (True, None)
    ok, witness = check_relaxed(c4, (1, 1, 1, 1), 1)
    assert not ok and witness[1] == 1
    assert relaxed_degrees(c4, (1, 1, 1, 1)) == {1: 2}


def test_report_examples():
    r = report(path(3), (1, 2), t=2, d=1)
    assert r.proper and not r.threshold_violations and r.max_weight_used == 2 and r.ok
    r = report(path(3), (1, 1), t=2, d=2)
    assert r.proper and r.threshold_violations == [1] and r.relaxed_ok
    r = report(cycle(5), (1,) * 5, t=2, d=1)
    assert r.conflicting_edges == list(range(5)) and r.threshold_violations == list(range(5))
    assert not r.relaxed_ok


@given(weighted())
def test_full_relaxation_is_vacuous(gw):
    g, w = gw
    if g.max_degree >= 1:
        assert check_relaxed(g, w, g.max_degree)[0]


@given(weighted(k=4))
def test_threshold_two_gives_relaxed(gw):
    g, w = gw
    if g.max_degree >= 2 and not check_distinguishing(g, w) and not check_threshold(g, w, 2):
        assert check_relaxed(g, w, g.max_degree - 1)[0]


@given(weighted(k=3))
def test_relaxed_one_means_no_repeat_at_a_vertex(gw):
    g, w = gw
    repeat = any(len({w[e] for _, e in g.adj[v]}) < g.degree(v) for v in range(g.n))
    assert check_relaxed(g, w, 1)[0] == (not repeat)


@given(weighted(k=4), st.integers(1, 4))
def test_matches_reference(gw, t):
    g, w = gw
    d = max(1, g.max_degree - 1)
    r = report(g, w, t=t, d=d)
    assert r.ok == ref_ok(g, w, k=4, t=t, d=d)
