"""Independent checks for the guarantees the constructions claim."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, sigma


def check_distinguishing(g: Graph, w: Sequence[int]) -> list[int]:
    """Edge indices whose endpoints get equal sums (empty = distinguishing)."""
    s = sigma(g, w)
    return [i for i, (u, v) in enumerate(g.edges) if s[u] == s[v]]


def check_threshold(g: Graph, w: Sequence[int], t: int) -> list[int]:
    """Vertices of degree >= t whose incident edges all carry one weight."""
    if t < 1:
        raise ValueError("threshold must be at least 1")
    if len(w) != g.m:
        raise ValueError("weighting does not match graph")
    bad = []
    for v, nbrs in enumerate(g.adj):
        if len(nbrs) >= t and len({w[e] for _, e in nbrs}) == 1:
            bad.append(v)
    return bad


def relaxed_degrees(g: Graph, w: Sequence[int]) -> dict[int, int]:
    """For each weight value, the maximum degree of its monochromatic subgraph."""
    if len(w) != g.m:
        raise ValueError("weighting does not match graph")
    count: dict[tuple[int, int], int] = {}
    for (u, v), x in zip(g.edges, w):
        count[u, x] = count.get((u, x), 0) + 1
        count[v, x] = count.get((v, x), 0) + 1
    out: dict[int, int] = {}
    for (_, x), c in count.items():
        if c > out.get(x, 0):
            out[x] = c
    return dict(sorted(out.items()))


def check_relaxed(g: Graph, w: Sequence[int], d: int) -> tuple[bool, tuple[int, int] | None]:
    """Whether every weight class has maximum degree <= d.

    On failure the witness is ``(vertex, weight)`` for the first offending pair
    in vertex order.
    """
    if d < 1:
        raise ValueError("relaxation parameter must be at least 1")
    if len(w) != g.m:
        raise ValueError("weighting does not match graph")
    for v, nbrs in enumerate(g.adj):
        if len(nbrs) <= d:
            continue
        count: dict[int, int] = {}
        for _, e in nbrs:
            c = count[w[e]] = count.get(w[e], 0) + 1
            if c > d:
                return False, (v, w[e])
    return True, None


@dataclass
class WeightingReport:
    proper: bool
    conflicting_edges: list[int]
    max_weight_used: int
    t: int
    threshold_violations: list[int]
    d: int
    relaxed_ok: bool
    relaxed_witness: tuple[int, int] | None
    relaxed_degree: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.proper and not self.threshold_violations and self.relaxed_ok

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "conflicts": list(self.conflicting_edges),
            "max_weight": self.max_weight_used,
            "t": self.t,
            "threshold_violations": list(self.threshold_violations),
            "d": self.d,
            "relaxed_ok": self.relaxed_ok,
            "relaxed_witness": list(self.relaxed_witness) if self.relaxed_witness else None,
            "relaxed_degrees": {str(c): x for c, x in self.relaxed_degree.items()},
        }


def report(g: Graph, w: Sequence[int], t: int = 2, d: int | None = None) -> WeightingReport:
    """Run every check; ``d`` defaults to ``max(1, Δ-1)``."""
    if d is None:
        d = max(1, g.max_degree - 1)
    conflicts = check_distinguishing(g, w)
    ok, witness = check_relaxed(g, w, d)
    return WeightingReport(
        proper=not conflicts,
        conflicting_edges=conflicts,
        max_weight_used=max(w, default=0),
        t=t,
        threshold_violations=check_threshold(g, w, t),
        d=d,
        relaxed_ok=ok,
        relaxed_witness=witness,
        relaxed_degree=relaxed_degrees(g, w),
    )
