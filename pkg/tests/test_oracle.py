from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nsdweight.errors import GraphError
from nsdweight.generators import complete, cycle, path, random_bounded_degree, star
from nsdweight.graph import Graph, is_nice
from nsdweight.oracle import ConstraintProfile, exact_min_k, exact_weighting, exists_weighting
from nsdweight.verify import check_distinguishing, check_relaxed, check_threshold

from conftest import brute_min_k, ref_ok

K2 = Graph(2, [(0, 1)])

# exact relaxed (Δ-1) values, checked against brute force in this module
FROZEN = {
    "P3": (path(3), 2),
    "C3": (cycle(3), 3),
    "C4": (cycle(4), 4),
    "C5": (cycle(5), 5),
    "K4": (complete(4), 3),
    "K1,3": (star(4), 2),
}


def test_profile_validation():
    with pytest.raises(ValueError):
        ConstraintProfile(0)
    with pytest.raises(ValueError):
        ConstraintProfile(2, "relaxed", 0)
    with pytest.raises(ValueError):
        ConstraintProfile(2, "bogus", 1)


def test_small_examples():
    w = exists_weighting(path(3), ConstraintProfile(1))
    assert tuple(w) == (1, 1)
    with pytest.raises(GraphError):
        exists_weighting(K2, ConstraintProfile(3))
    assert exists_weighting(cycle(3), ConstraintProfile.relaxed(2, 2)) is None
    assert exact_min_k(cycle(3), "relaxed", 2) == 3
    assert exact_min_k(path(3), "relaxed", 2) == 1


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_values_match_brute_force(name):
    g, k = FROZEN[name]
    assert exact_min_k(g) == k
    assert brute_min_k(g, max(1, g.max_degree - 1)) == k


def test_edge_cap():
    with pytest.raises(GraphError):
        exact_min_k(complete(7))
    with pytest.raises(GraphError):
        exact_min_k(cycle(5), max_k=4)


def _random_nice(seed: int) -> Graph:
    g = random_bounded_degree(6, 4, seed, density=0.6)
    return g if is_nice(g) and g.m else path(3)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_min_k_matches_brute_force(seed):
    g = _random_nice(seed)
    if g.m > 8:
        return
    d = max(1, g.max_degree - 1)
    assert exact_min_k(g, "relaxed", d) == brute_min_k(g, d)


@given(st.integers(0, 10 ** 6), st.sampled_from(["none", "relaxed", "threshold"]), st.integers(1, 4))
def test_witnesses_replay_through_verifier(seed, mode, k):
    g = _random_nice(seed)
    param = {"none": 0, "relaxed": max(1, g.max_degree - 1), "threshold": 2}[mode]
    w = exists_weighting(g, ConstraintProfile(k, mode, param))
    if w is None:
        return
    assert not check_distinguishing(g, w.weights)
    if mode == "threshold":
        assert not check_threshold(g, w.weights, 2)
    if mode == "relaxed":
        assert check_relaxed(g, w.weights, param)[0]
    assert ref_ok(g, w.weights, k, t=2 if mode == "threshold" else 10 ** 9,
                  d=param if mode == "relaxed" else None)


@given(st.integers(0, 10 ** 6))
def test_deterministic(seed):
    g = _random_nice(seed)
    assert exact_weighting(g) == exact_weighting(g)
