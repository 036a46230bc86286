"""Pick the strongest available construction for each component of a graph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bipartite import bip_four, bip_six, even_side
from .bounded import is_c5, weight_max_deg4, weight_max_deg5, weight_subcubic
from .errors import GraphError, InvariantViolation
from .general7 import run_general7, star_weighting
from .graph import EdgeWeighting, Graph, bipartition, components, is_nice, is_star
from .oracle import exact_weighting
from .verify import check_distinguishing, check_relaxed, check_threshold

# method -> (k, t) it guarantees; subcubic is 4, or 5 on C5
GUARANTEES = {
    "star": (2, 2),
    "bip4": (4, 2),
    "bip6": (6, 2),
    "subcubic": (4, 2),
    "delta4": (6, 2),
    "delta5": (7, 2),
    "general7": (7, 6),
}

METHODS = ("auto", "subcubic", "delta4", "delta5", "general7", "bip6", "bip4", "exact")


@dataclass(frozen=True)
class ComponentCertificate:
    vertices: tuple[int, ...]
    method: str
    k: int
    t: int


@dataclass(frozen=True)
class DispatchCertificate:
    """Which construction produced a weighting, and what it guarantees.

    ``k`` bounds every weight and every vertex of degree at least ``t`` sees
    two distinct weights.
    """

    method: str
    k: int
    t: int
    components: tuple[ComponentCertificate, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "k": self.k,
            "t": self.t,
            "components": [
                {"vertices": list(c.vertices), "method": c.method, "k": c.k, "t": c.t} for c in self.components
            ],
        }


def choose_method(g: Graph) -> str:
    """Method the dispatcher uses for a connected nice graph with at least one edge."""
    if is_star(g):
        return "star"
    if bipartition(g) is not None:
        return "bip4" if even_side(g) is not None else "bip6"
    d = g.max_degree
    if d <= 3:
        return "subcubic"
    if d == 4:
        return "delta4"
    if d == 5:
        return "delta5"
    return "general7"


def _run(method: str, g: Graph, trace: list | None = None) -> tuple[EdgeWeighting, int, int]:
    if method == "star":
        if not is_star(g):
            raise GraphError("not a star")
        return star_weighting(g), *GUARANTEES["star"]
    if method == "bip4":
        return bip_four(g), *GUARANTEES["bip4"]
    if method == "bip6":
        return bip_six(g), *GUARANTEES["bip6"]
    if method == "subcubic":
        return weight_subcubic(g), 5 if is_c5(g) else 4, 2
    if method == "delta4":
        return weight_max_deg4(g), *GUARANTEES["delta4"]
    if method == "delta5":
        return weight_max_deg5(g), *GUARANTEES["delta5"]
    if method == "general7":
        return run_general7(g, trace=trace), *GUARANTEES["general7"]
    if method == "exact":
        w = exact_weighting(g, "relaxed")
        # relaxed (Δ-1) is the same as: vertices of degree Δ see two weights
        return w, w.k, max(2, g.max_degree)
    raise GraphError(f"unknown method {method!r}")


def auto_weight(g: Graph, method: str = "auto", *,
                traces: list | None = None) -> tuple[EdgeWeighting, DispatchCertificate]:
    """Weight a nice graph component by component and certify the result.

    With ``method="auto"`` each component gets ``choose_method``; any other
    method is forced on every component (and fails if it does not apply).
    Pass a list as ``traces`` to receive ``(vertices, records)`` for every
    component handled by general7; records use component-local vertex indices.
    """
    if method not in METHODS:
        raise GraphError(f"unknown method {method!r}")
    if not is_nice(g):
        raise GraphError("graph has a K2 component")
    out = [0] * g.m
    certs = []
    for comp in components(g):
        if comp.graph.m == 0:
            continue
        m = choose_method(comp.graph) if method == "auto" else method
        records: list | None = [] if traces is not None and m == "general7" else None
        w, k, t = _run(m, comp.graph, records)
        if records is not None:
            traces.append((comp.vertices, records))
        for e, x in zip(comp.edges, w):
            out[e] = x
        certs.append(ComponentCertificate(comp.vertices, "oracle" if m == "exact" else m, k, t))
    k = max((c.k for c in certs), default=1)
    t = max((c.t for c in certs), default=2)
    names = {c.method for c in certs}
    overall = names.pop() if len(names) == 1 else ("mixed" if names else "empty")
    cert = DispatchCertificate(overall, k, t, tuple(certs))
    weighting = EdgeWeighting(tuple(out), k)
    if check_distinguishing(g, out) or check_threshold(g, out, t):
        raise InvariantViolation("dispatched weighting fails verification")
    if g.max_degree >= 2 and not check_relaxed(g, out, g.max_degree - 1)[0]:
        raise InvariantViolation("dispatched weighting is not (Δ-1)-relaxed")
    return weighting, cert
