"""Vertex orderings in which low-degree sinks see few "open" neighbours.

An ordering is *good* when

(i)   the first two vertices have degree at least 2,
(ii)  every vertex but the first has a neighbour earlier in the order,
(iii) a vertex with no later neighbour has at most one neighbour that still
      has a later neighbour after it.

``good_ordering`` starts from a breadth-first order, which gives (i) and (ii),
and then repairs (iii) one vertex at a time.  Every repair removes at least one
vertex from the set of vertices without a later neighbour, so the loop ends
after at most ``n`` rounds.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import GraphError, InvariantViolation
from .graph import Graph, is_connected, is_star


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of a graph's vertices together with derived neighbour splits."""

    graph: Graph
    order: tuple[int, ...]
    position: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(self.graph.n)):
            raise ValueError("order is not a permutation of the vertices")
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "position", tuple(pos))

    def __len__(self):
        return len(self.order)

    def predecessors(self, v: int) -> list[int]:
        """Earlier neighbours of ``v``, in order position."""
        p = self.position
        return sorted((u for u in self.graph.neighbours(v) if p[u] < p[v]), key=p.__getitem__)

    def successors(self, v: int) -> list[int]:
        """Later neighbours of ``v``, in order position."""
        p = self.position
        return sorted((u for u in self.graph.neighbours(v) if p[u] > p[v]), key=p.__getitem__)

    def first_successor(self, v: int) -> int | None:
        s = self.successors(v)
        return s[0] if s else None

    def has_successor(self, v: int) -> bool:
        p = self.position
        return any(p[u] > p[v] for u in self.graph.neighbours(v))

    def has_successor_after(self, u: int, v: int) -> bool:
        """Whether ``u`` has a neighbour placed after ``v``."""
        p = self.position
        return any(p[x] > p[v] for x in self.graph.neighbours(u))

    def sinks(self) -> frozenset[int]:
        """Vertices with no later neighbour."""
        return frozenset(v for v in self.order if not self.has_successor(v))

    def format(self) -> str:
        return " ".join(map(str, self.order))

    @classmethod
    def parse(cls, g: Graph, text: str) -> "VertexOrdering":
        return cls(g, tuple(int(x) for x in text.split()))


class PartialOrderOracle:
    """Answers ``x ≺ y``: some path from x to y visits vertices in increasing position."""

    def __init__(self, o: VertexOrdering):
        g, pos = o.graph, o.position
        reach = [0] * g.n
        for v in reversed(o.order):
            mask = 0
            for u in g.neighbours(v):
                if pos[u] > pos[v]:
                    mask |= (1 << u) | reach[u]
            reach[v] = mask
        self._reach = reach

    def precedes(self, x: int, y: int) -> bool:
        return bool(self._reach[x] >> y & 1)

    def above(self, x: int) -> set[int]:
        """All ``y`` with ``x ≺ y``."""
        r = self._reach[x]
        return {y for y in range(r.bit_length()) if r >> y & 1}


def below(o: VertexOrdering, v: int) -> set[int]:
    """All ``x`` with ``x ≺ v``, found by a backward walk over decreasing positions."""
    pos = o.position
    out: set[int] = set()
    stack = [v]
    while stack:
        y = stack.pop()
        for x in o.graph.neighbours(y):
            if pos[x] < pos[y] and x not in out:
                out.add(x)
                stack.append(x)
    return out


class Violation(NamedTuple):
    condition: str   # "i", "ii" or "iii"
    vertex: int
    detail: str


def check_ordering(g: Graph, o: VertexOrdering | Sequence[int]) -> list[Violation]:
    """Every failure of conditions (i)-(iii); empty means the ordering is good."""
    if not isinstance(o, VertexOrdering):
        o = VertexOrdering(g, tuple(o))
    out: list[Violation] = []
    for v in o.order[:2]:
        if g.degree(v) < 2:
            out.append(Violation("i", v, f"degree {g.degree(v)} among the first two vertices"))
    for v in o.order[1:]:
        if not o.predecessors(v):
            out.append(Violation("ii", v, "no earlier neighbour"))
    for v in o.order:
        if o.has_successor(v):
            continue
        open_nbrs = [u for u in g.neighbours(v) if o.has_successor_after(u, v)]
        if len(open_nbrs) > 1:
            out.append(Violation("iii", v, f"neighbours {sorted(open_nbrs)} still have later neighbours"))
    return out


@dataclass(frozen=True)
class RepairStep:
    case: str           # which rearrangement was applied
    vertex: int         # the vertex that violated (iii)
    sinks_before: int
    sinks_after: int


def _initial_order(g: Graph) -> list[int]:
    for a in range(g.n):
        if g.degree(a) < 2:
            continue
        cands = sorted(u for u in g.neighbours(a) if g.degree(u) >= 2)
        if cands:
            b = cands[0]
            break
    else:
        raise GraphError("no edge joins two vertices of degree at least 2")
    order = [a, b]
    seen = {a, b}
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for y in sorted(g.neighbours(x)):
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def _first_violator(o: VertexOrdering) -> int | None:
    for v in o.order:
        if o.has_successor(v):
            continue
        if sum(1 for u in o.graph.neighbours(v) if o.has_successor_after(u, v)) > 1:
            return v
    return None


def _feasible(g: Graph, order: list[int]) -> bool:
    """Conditions (i) and (ii)."""
    return not any(x.condition in ("i", "ii") for x in check_ordering(g, VertexOrdering(g, tuple(order))))


def _splice(o: VertexOrdering, jpos: int, ipos: int) -> list[int]:
    """Move v_i in front of v_j and put v_j with everything it reaches (on the
    way to v_i) behind v_i, in reverse order."""
    order = list(o.order)
    vj, v = order[jpos], order[ipos]
    reach = PartialOrderOracle(o)
    between = order[jpos + 1:ipos]
    w = [vj] + [x for x in between if reach.precedes(vj, x)]
    inw = set(w)
    others = [x for x in between if x not in inw]
    return order[:jpos] + others + [v] + w[::-1] + order[ipos + 1:]


def _pull_forward(o: VertexOrdering, v: int) -> list[int]:
    """Equivalent order (same orientation of every edge) with ``v`` as early as possible."""
    d = below(o, v)
    ipos = o.position[v]
    head = [x for x in o.order[:ipos] if x in d]
    tail = [x for x in o.order[:ipos] if x not in d]
    return head + [v] + tail + list(o.order[ipos + 1:])


def good_ordering(g: Graph, *, log: list[RepairStep] | None = None) -> VertexOrdering:
    """An ordering satisfying (i)-(iii).

    Requires a connected graph on at least 3 vertices that is not a star.
    Pass a list as ``log`` to collect the repair steps taken.
    """
    if g.n < 3:
        raise GraphError("ordering needs at least 3 vertices")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if is_star(g):
        raise GraphError("stars admit no such ordering")

    o = VertexOrdering(g, tuple(_initial_order(g)))
    if not _feasible(g, list(o.order)):
        raise InvariantViolation("initial breadth-first order violates (i) or (ii)")

    for _ in range(g.n + 1):
        v = _first_violator(o)
        if v is None:
            return o
        before = len(o.sinks())
        o = VertexOrdering(g, tuple(_pull_forward(o, v)))
        if len(o.sinks()) != before or not _feasible(g, list(o.order)):
            raise InvariantViolation("re-indexing changed the edge orientation")
        ipos = o.position[v]
        jpos = max(
            (o.position[u] for u in o.predecessors(v) if o.has_successor_after(u, v)),
            default=-1,
        )
        if jpos < 1:
            raise InvariantViolation(f"vertex {v} violates (iii) but has fewer than two open neighbours")

        order = list(o.order)
        case = "splice"
        new: list[int] | None = None
        if jpos == 1:
            if ipos == 2:
                case = "swap-3"
                new = [order[0], order[2], order[1]] + order[3:]
            else:
                v1, v2, v3 = order[0], order[1], order[2]
                if g.has_edge(v3, v2):
                    case = "swap-v2-first"
                    new = [v2] + order[2:ipos + 1] + [v1] + order[ipos + 1:]
                else:
                    case = "swap-v2-last"
                    new = [v1] + order[2:ipos + 1] + [v2] + order[ipos + 1:]
                if not (_feasible(g, new) and len(VertexOrdering(g, tuple(new)).sinks()) < before):
                    case = "splice-fallback"
                    new = None
        if new is None:
            new = _splice(o, jpos, ipos)

        nxt = VertexOrdering(g, tuple(new))
        after = len(nxt.sinks())
        if not _feasible(g, new):
            raise InvariantViolation(f"repair '{case}' broke (i) or (ii)")
        if after >= before:
            raise InvariantViolation(f"repair '{case}' did not shrink the sink set ({before} -> {after})")
        if log is not None:
            log.append(RepairStep(case, v, before, after))
        o = nxt
    raise InvariantViolation("repair loop did not terminate")
