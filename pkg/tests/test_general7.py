from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from nsdweight.errors import GraphError
from nsdweight.general7 import (
    BOOTSTRAP, AlgState, StepRecord, bootstrap, check_step, format_trace, replay, run_general7,
    terminal_claim, treat_vertex,
)
from nsdweight.generators import complete, cycle, petersen, random_bounded_degree, star, wheel
from nsdweight.graph import Graph, is_nice, is_star, sigma
from nsdweight.ordering import VertexOrdering, good_ordering

from conftest import ref_ok, ref_sums

# the nine bootstrap rows, transcribed column by column:
# (4 d(v1), 4 d(v2)) mod 6 -> (w(v1 v2), w(e1), w(e2))
TABLE = {
    (0, 0): (7, 1, 2), (0, 2): (7, 1, 1), (2, 0): (7, 1, 1),
    (0, 4): (5, 3, 1), (4, 0): (5, 1, 3), (2, 2): (5, 3, 1),
    (2, 4): (6, 2, 4), (4, 2): (6, 4, 2), (4, 4): (2, 4, 3),
}


def test_bootstrap_table_is_exact():
    assert BOOTSTRAP == TABLE


@pytest.mark.parametrize("key", sorted(TABLE))
def test_bootstrap_rows_give_low_distinct_colours(key):
    a, b = key
    a_w, e1, e2 = TABLE[key]
    # both vertices start at 4 d; only three edges change, each from 4
    for d1 in range(2, 20):
        for d2 in range(2, 20):
            if (4 * d1 % 6, 4 * d2 % 6) != key:
                continue
            s1 = 4 * d1 + (a_w - 4) + (e1 - 4)
            s2 = 4 * d2 + (a_w - 4) + (e2 - 4)
            assert s1 % 6 < 3 and s2 % 6 < 3 and s1 % 6 != s2 % 6


def test_c7_uses_row_2_2():
    g = cycle(7)
    o = VertexOrdering(g, tuple(range(7)))
    state = bootstrap(AlgState.start(g, o))
    assert (state.weights[g.edge_id(0, 1)], state.weights[g.edge_id(0, 6)], state.weights[g.edge_id(1, 2)]) == (5, 3, 1)
    w = run_general7(g, ordering=o)
    assert ref_ok(g, w.weights, 7, t=6)


@pytest.mark.parametrize("g", [cycle(5), cycle(7), complete(7), petersen(), wheel(9), complete(12)], ids=str)
def test_named_graphs(g):
    w = run_general7(g)
    assert ref_ok(g, w.weights, 7, t=6)


def test_star_rule():
    g = star(8)
    w = run_general7(g)
    s = sigma(g, w.weights)
    assert s[0] == 8 and set(s[1:]) <= {1, 2} and set(w.weights) == {1, 2}


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        run_general7(Graph(2, [(0, 1)]))
    with pytest.raises(GraphError):
        run_general7(Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]))


def test_step_sequence_enforced():
    g = complete(5)
    state = bootstrap(AlgState.start(g, good_ordering(g)))
    with pytest.raises(ValueError):
        treat_vertex(state, 4)


def test_trace_roundtrip_and_replay():
    g = petersen()
    o = good_ordering(g)
    trace: list[StepRecord] = []
    w = run_general7(g, ordering=o, trace=trace)
    parsed = [StepRecord.parse(line) for line in format_trace(trace).splitlines()]
    assert parsed == trace
    assert replay(g, o, parsed) == list(w.weights)


def _random_connected(seed: int) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(3, 30)
    return random_bounded_degree(n, rng.randint(2, 10), seed, connected=True, density=rng.random())


@given(st.integers(0, 10 ** 9))
def test_stepwise_invariants(seed):
    g = _random_connected(seed)
    if is_star(g) or not is_nice(g):
        return
    o = good_ordering(g)
    state = bootstrap(AlgState.start(g, o))
    pos = o.position
    for i in range(3, g.n + 1):
        before = list(state.weights)
        treat_vertex(state, i)
        assert check_step(before, state, i) == []
        v = o.order[i - 1]
        for e, (a, b) in enumerate(g.edges):
            if before[e] != state.weights[e]:
                # only edges at the current vertex move, towards earlier
                # neighbours or to its first later neighbour
                assert v in (a, b)
                other = b if a == v else a
                assert pos[other] < pos[v] or other == o.first_successor(v)
    assert terminal_claim(state) == []
    s = ref_sums(g, state.weights)
    for v in range(g.n):
        c = state.committed[v]
        assert s[v] in ((c, c + 3) if o.has_successor(v) else (c,))
    assert ref_ok(g, state.weights, 7, t=6)
