"""Exact backtracking search for constrained neighbour-sum-distinguishing weightings.

Serves as ground truth in tests and as the base case of the degree-bounded
constructions.  The search assigns edges in a static order chosen so that
vertices become complete as early as possible; whenever a vertex is complete
its sum is compared with its complete neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import GraphError
from .graph import EdgeWeighting, Graph, is_nice

Mode = Literal["none", "relaxed", "threshold"]

DEFAULT_EDGE_CAP = 16


@dataclass(frozen=True)
class ConstraintProfile:
    """Always distinguishing, plus at most one local constraint.

    ``relaxed``: each weight class has max degree <= ``param``.
    ``threshold``: vertices of degree >= ``param`` see two distinct weights.
    """

    k: int
    mode: Mode = "none"
    param: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.mode not in ("none", "relaxed", "threshold"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "relaxed" and self.param < 1:
            raise ValueError("relaxed mode needs d >= 1")
        if self.mode == "threshold" and self.param < 2:
            raise ValueError("threshold mode needs t >= 2")

    @classmethod
    def relaxed(cls, k: int, d: int) -> "ConstraintProfile":
        return cls(k, "relaxed", d)

    @classmethod
    def threshold(cls, k: int, t: int) -> "ConstraintProfile":
        return cls(k, "threshold", t)


def search_order(g: Graph) -> list[int]:
    """Edge order that completes vertices early.

    Vertices are taken greedily, always preferring the one with the fewest
    still-unlisted incident edges among those touching the listed set; each
    pick appends its remaining edges (lowest index first on ties).
    """
    listed = [False] * g.m
    remaining = [len(a) for a in g.adj]
    done = [False] * g.n
    order: list[int] = []
    frontier = set()
    while len(order) < g.m:
        if frontier:
            v = min(frontier, key=lambda x: (remaining[x], x))
        else:
            v = min((x for x in range(g.n) if not done[x] and remaining[x]), key=lambda x: (-len(g.adj[x]), x))
        frontier.discard(v)
        done[v] = True
        for u, e in g.adj[v]:
            if not listed[e]:
                listed[e] = True
                order.append(e)
                remaining[u] -= 1
                remaining[v] -= 1
                if not done[u]:
                    frontier.add(u)
    return order


def _solve(g: Graph, profile: ConstraintProfile) -> list[int] | None:
    m = g.m
    if m == 0:
        return []
    order = search_order(g)
    k = profile.k
    relax = profile.param if profile.mode == "relaxed" else 0
    thresh = profile.param if profile.mode == "threshold" else 0

    # vertices that become complete when order[i] is assigned
    last = [-1] * g.n
    for i, e in enumerate(order):
        u, v = g.edges[e]
        last[u] = i
        last[v] = i
    closing: list[list[int]] = [[] for _ in range(m)]
    for v in range(g.n):
        if last[v] >= 0:
            closing[last[v]].append(v)
    nbrs = [[u for u, _ in a] for a in g.adj]
    deg = [len(a) for a in g.adj]
    ends = [g.edges[e] for e in order]

    sums = [0] * g.n
    first = [0] * g.n          # first weight seen at a vertex (0 = none yet)
    mixed = [False] * g.n      # vertex already sees two distinct weights
    cnt = [[0] * (k + 1) for _ in range(g.n)] if relax else None
    weights = [0] * m
    value = [0] * m
    undo: list[tuple[int, bool, int, bool]] = [None] * m  # type: ignore[list-item]

    i = 0
    value[0] = 0
    while True:
        if i == m:
            out = [0] * m
            for j, e in enumerate(order):
                out[e] = weights[j]
            return out
        x = value[i] + 1
        if x > k:
            if i == 0:
                return None
            value[i] = 0
            i -= 1
            u, v = ends[i]
            y = weights[i]
            sums[u] -= y
            sums[v] -= y
            fu, mu, fv, mv = undo[i]
            first[u], mixed[u], first[v], mixed[v] = fu, mu, fv, mv
            if relax:
                cnt[u][y] -= 1
                cnt[v][y] -= 1
            continue
        value[i] = x
        u, v = ends[i]
        if relax and (cnt[u][x] >= relax or cnt[v][x] >= relax):
            continue
        undo[i] = (first[u], mixed[u], first[v], mixed[v])
        for a in (u, v):
            if first[a] == 0:
                first[a] = x
            elif first[a] != x:
                mixed[a] = True
        sums[u] += x
        sums[v] += x
        if relax:
            cnt[u][x] += 1
            cnt[v][x] += 1
        ok = True
        for a in closing[i]:
            if thresh and deg[a] >= thresh and not mixed[a]:
                ok = False
                break
            sa = sums[a]
            for b in nbrs[a]:
                if last[b] <= i and sums[b] == sa:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            weights[i] = x
            i += 1
            if i < m:
                value[i] = 0
            continue
        sums[u] -= x
        sums[v] -= x
        fu, mu, fv, mv = undo[i]
        first[u], mixed[u], first[v], mixed[v] = fu, mu, fv, mv
        if relax:
            cnt[u][x] -= 1
            cnt[v][x] -= 1


def exists_weighting(g: Graph, profile: ConstraintProfile) -> EdgeWeighting | None:
    """A witness weighting for the profile, or ``None`` if none exists."""
    if not is_nice(g):
        raise GraphError("graph has a K2 component; no distinguishing weighting exists")
    w = _solve(g, profile)
    return None if w is None else EdgeWeighting(tuple(w), profile.k)


def relaxed_parameter(g: Graph) -> int:
    """``Δ - 1`` clamped to at least 1."""
    return max(1, g.max_degree - 1)


def exact_min_k(
    g: Graph,
    mode: Mode = "relaxed",
    param: int | None = None,
    *,
    max_k: int | None = None,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> int:
    """Smallest k for which a weighting with the given constraint exists.

    ``param`` defaults to ``Δ-1`` for relaxed mode and 2 for threshold mode.
    """
    if not is_nice(g):
        raise GraphError("graph has a K2 component")
    if g.m > edge_cap:
        raise GraphError(f"{g.m} edges exceeds the exact-search cap of {edge_cap}")
    if param is None:
        param = relaxed_parameter(g) if mode == "relaxed" else 2
    k = 1
    while max_k is None or k <= max_k:
        if _solve(g, ConstraintProfile(k, mode, param if mode != "none" else 0)) is not None:
            return k
        k += 1
    raise GraphError(f"no admissible weighting with k <= {max_k}")


def exact_weighting(g: Graph, mode: Mode = "relaxed", param: int | None = None, *, max_k: int | None = None,
                    edge_cap: int = DEFAULT_EDGE_CAP) -> EdgeWeighting:
    """A witness achieving ``exact_min_k``."""
    if param is None:
        param = relaxed_parameter(g) if mode == "relaxed" else 2
    k = exact_min_k(g, mode, param, max_k=max_k, edge_cap=edge_cap)
    w = exists_weighting(g, ConstraintProfile(k, mode, param if mode != "none" else 0))
    assert w is not None
    return w
