"""Weightings for graphs of maximum degree at most 5, with threshold 2.

Every vertex of degree at least 2 ends up seeing two distinct weights.

* ``weight_subcubic``: exact search, 4 weights (5 on a ``C5`` component).
* ``weight_max_deg4``: 6 weights, by induction on the number of edges.
* ``weight_max_deg5``: 7 weights, same scheme.

The inductive step removes a few edges at a maximum-degree vertex ``u``,
weights the rest recursively, then puts the removed edges back.  Each removed
edge gets a set of allowed values (those that keep the far endpoint happy),
and ``cn_search`` picks values avoiding every remaining conflict.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError, InvariantViolation
from .graph import EdgeWeighting, Graph, components, is_nice, sigma
from .oracle import ConstraintProfile, exists_weighting
from .poly import LinearFactor, cn_search
from .verify import check_distinguishing, check_threshold


def is_c5(g: Graph) -> bool:
    return g.n == 5 and g.m == 5 and all(len(a) == 2 for a in g.adj) and len(components(g)) == 1


def _require_nice(g: Graph, max_deg: int) -> None:
    if not is_nice(g):
        raise GraphError("graph has a K2 component")
    if g.max_degree > max_deg:
        raise GraphError(f"maximum degree {g.max_degree} exceeds {max_deg}")


def _check(g: Graph, w: list[int], k: int, where: str) -> None:
    if any(not 1 <= x <= k for x in w):
        raise InvariantViolation(f"{where}: weight outside [1, {k}]")
    if check_distinguishing(g, w) or check_threshold(g, w, 2):
        raise InvariantViolation(f"{where}: result fails verification")


def _per_component(g: Graph, solve) -> list[int]:
    """Apply ``solve`` to every component with at least two edges; single
    edges get weight 1 and isolated vertices are ignored."""
    out = [0] * g.m
    for comp in components(g):
        if comp.graph.m == 0:
            continue
        sub = [1] if comp.graph.m == 1 else solve(comp.graph)
        for e, x in zip(comp.edges, sub):
            out[e] = x
    return out


# -- subcubic -----------------------------------------------------------------

def _subcubic_connected(g: Graph) -> list[int]:
    k = 5 if is_c5(g) else 4
    w = exists_weighting(g, ConstraintProfile.threshold(k, 2))
    if w is None:
        raise InvariantViolation(f"no {k}-weighting found for a subcubic component")
    return list(w.weights)


def weight_subcubic(g: Graph) -> EdgeWeighting:
    """Distinguishing weighting with threshold 2 for a nice graph with ``Δ <= 3``."""
    _require_nice(g, 3)
    w = _per_component(g, _subcubic_connected)
    k = 5 if any(is_c5(c.graph) for c in components(g)) else 4
    _check(g, w, k, "subcubic")
    return EdgeWeighting(tuple(w), k)


# -- allowed value sets ---------------------------------------------------------

@dataclass(frozen=True)
class ForbiddenSets:
    """Allowed values for each re-inserted edge, with the bound each must meet."""

    sets: tuple[frozenset[int], ...]
    bounds: tuple[int, ...]

    def __post_init__(self):
        for i, (s, b) in enumerate(zip(self.sets, self.bounds)):
            if len(s) < b:
                raise InvariantViolation(f"allowed set {i + 1} has {len(s)} values, expected at least {b}")


def allowed(h: Graph, w: list[int], sums: tuple[int, ...], x: int, exclude: set[int], k: int) -> frozenset[int]:
    """Values for one new edge at ``x`` keeping ``x`` apart from its other neighbours.

    Forbids ``σ(y) - σ(x)`` for each neighbour ``y`` of ``x`` in ``h`` outside
    ``exclude`` (whose sums are about to move anyway), and the common weight
    of ``x``'s edges in ``h`` when they all agree.
    """
    bad = {sums[y] - sums[x] for y, _ in h.adj[x] if y not in exclude}
    mine = {w[e] for _, e in h.adj[x]}
    if len(mine) == 1:
        bad |= mine
    return frozenset(c for c in range(1, k + 1) if c not in bad)


def _split(g: Graph, remove: list[int], solve) -> tuple[Graph, list[int], tuple[int, ...], list[int]]:
    h, keep = g.without_edges(remove)
    hw = _per_component(h, solve)
    full = [0] * g.m
    for new, old in enumerate(keep):
        full[old] = hw[new]
    return h, hw, sigma(h, hw), full


def _inductive_step(g: Graph, k: int, delta: int, solve) -> list[int]:
    """One reduction at the lowest-index vertex of degree ``delta``."""
    u = min(v for v in range(g.n) if g.degree(v) == delta)
    nbrs = sorted(g.neighbours(u))
    pair = next(((a, b) for a, b in combinations(nbrs, 2) if g.has_edge(a, b)), None)

    if pair is None:
        # independent neighbourhood: drop u, then weight its edges
        remove = [g.edge_id(u, y) for y in nbrs]
        h, hw, s, full = _split(g, remove, solve)
        sets = ForbiddenSets(tuple(allowed(h, hw, s, y, set(), k) for y in nbrs), (3,) * delta)
        n = delta
        factors = [LinearFactor.build(n, {j: 1 for j in range(n) if j != i}, s[u] - s[y])
                   for i, y in enumerate(nbrs)]
        factors.append(LinearFactor.build(n, {2: 1, 3: -1}))
        xs = cn_search(factors, sets.sets)
        for e, x in zip(remove, xs):
            full[e] = x
        return full

    v, w = pair
    if delta == 5 and g.degree(v) > 3 and g.degree(w) > 3:
        # triangle: drop uv, uw, vw and search all three weights
        euv, euw, evw = g.edge_id(u, v), g.edge_id(u, w), g.edge_id(v, w)
        h, hw, s, full = _split(g, [euv, euw, evw], solve)
        factors = []
        for centre, idx in ((u, {0: 1, 1: 1}), (v, {0: 1, 2: 1}), (w, {1: 1, 2: 1})):
            for y, _ in h.adj[centre]:
                factors.append(LinearFactor.build(3, idx, s[centre] - s[y]))
        factors.append(LinearFactor.build(3, {0: 1, 1: -1}, s[v] - s[w]))
        factors.append(LinearFactor.build(3, {0: 1, 2: -1}, s[u] - s[w]))
        factors.append(LinearFactor.build(3, {1: 1, 2: -1}, s[u] - s[v]))
        xs = cn_search(factors, [range(1, k + 1)] * 3)
        full[euv], full[euw], full[evw] = xs
        return full

    if delta == 5 and g.degree(v) > 3:
        v, w = w, v
    euv, euw = g.edge_id(u, v), g.edge_id(u, w)
    h, hw, s, full = _split(g, [euv, euw], solve)
    bounds = (4, 4) if delta == 4 else (6, 4)
    sets = ForbiddenSets((allowed(h, hw, s, v, {w}, k), allowed(h, hw, s, w, {v}, k)), bounds)
    factors = [LinearFactor.build(2, {0: 1, 1: 1}, s[u] - s[y]) for y in nbrs if y not in (v, w)]
    factors.append(LinearFactor.build(2, {1: 1}, s[u] - s[v]))
    factors.append(LinearFactor.build(2, {0: 1}, s[u] - s[w]))
    factors.append(LinearFactor.build(2, {0: 1, 1: -1}, s[v] - s[w]))
    full[euv], full[euw] = cn_search(factors, sets.sets)
    return full


def _deg4_connected(g: Graph) -> list[int]:
    if g.m <= 3:
        w = exists_weighting(g, ConstraintProfile.threshold(6, 2))
        if w is None:
            raise InvariantViolation("small base case has no 6-weighting")
        return list(w.weights)
    if g.max_degree <= 3:
        return _subcubic_connected(g)
    w = _inductive_step(g, 6, 4, _deg4_connected)
    _check(g, w, 6, "degree-4 step")
    return w


def _deg5_connected(g: Graph) -> list[int]:
    if g.m <= 4:
        w = exists_weighting(g, ConstraintProfile.threshold(7, 2))
        if w is None:
            raise InvariantViolation("small base case has no 7-weighting")
        return list(w.weights)
    if g.max_degree <= 4:
        return _deg4_connected(g)
    w = _inductive_step(g, 7, 5, _deg5_connected)
    _check(g, w, 7, "degree-5 step")
    return w


def weight_max_deg4(g: Graph) -> EdgeWeighting:
    """Distinguishing 6-weighting with threshold 2 for a nice graph with ``Δ <= 4``."""
    _require_nice(g, 4)
    w = _per_component(g, _deg4_connected)
    _check(g, w, 6, "degree-4")
    return EdgeWeighting(tuple(w), 6)


def weight_max_deg5(g: Graph) -> EdgeWeighting:
    """Distinguishing 7-weighting with threshold 2 for a nice graph with ``Δ <= 5``."""
    _require_nice(g, 5)
    w = _per_component(g, _deg5_connected)
    _check(g, w, 7, "degree-5")
    return EdgeWeighting(tuple(w), 7)
