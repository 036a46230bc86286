"""Seven-weight construction for nice connected graphs.

Vertices are treated along a good ordering (see ``ordering``).  Each step
touches only the edges from the current vertex to earlier neighbours and to
its first later neighbour, then freezes a committed colour ``w(v)`` equal to
the current vertex sum.  Vertices with later neighbours end with a sum in
``{w, w+3}`` and committed colours in ``{0, 1, 2} mod 6``, which is what makes
the final weighting distinguishing.

Instead of following a hand-written case analysis, each step searches the
whole modification space (add 3 to a subset of earlier edges, lower the
forward edge by ``r``) in a fixed order and keeps the first candidate that
satisfies every step property.  The step properties are re-checked from
scratch after each step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphError, InvariantViolation, SearchExhausted
from .graph import EdgeWeighting, Graph, is_connected, is_nice, is_star, sigma
from .ordering import VertexOrdering, good_ordering
from .verify import check_distinguishing, check_threshold

K = 7
THRESHOLD = 6
SUBSET_CAP_DEGREE = 20   # above this degree, sink steps try at most SUBSET_CAP edges
SUBSET_CAP = 6

# (4 d(v1) mod 6, 4 d(v2) mod 6) -> (w(v1 v2), w(e1), w(e2))
BOOTSTRAP = {
    (0, 0): (7, 1, 2),
    (0, 2): (7, 1, 1),
    (2, 0): (7, 1, 1),
    (0, 4): (5, 3, 1),
    (4, 0): (5, 1, 3),
    (2, 2): (5, 3, 1),
    (2, 4): (6, 2, 4),
    (4, 2): (6, 4, 2),
    (4, 4): (2, 4, 3),
}


def low(x: int) -> bool:
    """``x`` is 0, 1 or 2 modulo 6."""
    return x % 6 < 3


@dataclass(frozen=True)
class StepRecord:
    step: int                 # 1-based position of the treated vertex (2 covers the first two)
    vertex: int
    raised: tuple[int, ...]   # earlier neighbours whose edge got +3
    r: int                    # amount taken off the forward edge
    committed: int

    def format(self) -> str:
        raised = ",".join(map(str, self.raised)) or "-"
        return f"{self.step} {self.vertex} {raised} {self.r} {self.committed}"

    @classmethod
    def parse(cls, line: str) -> "StepRecord":
        step, vertex, raised, r, committed = line.split()
        return cls(int(step), int(vertex), () if raised == "-" else tuple(int(x) for x in raised.split(",")),
                   int(r), int(committed))


@dataclass
class AlgState:
    graph: Graph
    ordering: VertexOrdering
    weights: list[int]
    committed: list[int | None]
    step: int = 0
    trace: list[StepRecord] = field(default_factory=list)

    @classmethod
    def start(cls, g: Graph, o: VertexOrdering) -> "AlgState":
        return cls(g, o, [4] * g.m, [None] * g.n)

    def sums(self) -> list[int]:
        return list(sigma(self.graph, self.weights))

    def edge(self, u: int, v: int) -> int:
        return self.graph.edge_id(u, v)


def bootstrap(state: AlgState) -> AlgState:
    """Treat the first two vertices together using the residue table."""
    g, o = state.graph, state.ordering
    v1, v2 = o.order[0], o.order[1]
    if not g.has_edge(v1, v2):
        raise InvariantViolation("first two vertices are not adjacent")
    s1 = [u for u in o.successors(v1) if u != v2]
    s2 = o.successors(v2)
    if not s1 or not s2:
        raise InvariantViolation("first two vertices need later neighbours")
    key = (4 * g.degree(v1) % 6, 4 * g.degree(v2) % 6)
    a, b, c = BOOTSTRAP[key]
    state.weights[state.edge(v1, v2)] = a
    state.weights[state.edge(v1, s1[0])] = b
    state.weights[state.edge(v2, s2[0])] = c
    s = state.sums()
    state.committed[v1] = s[v1]
    state.committed[v2] = s[v2]
    if not (low(s[v1]) and low(s[v2]) and s[v1] % 6 != s[v2] % 6):
        raise InvariantViolation(f"bootstrap row {key} gives colours {s[v1]}, {s[v2]}")
    state.step = 2
    state.trace.append(StepRecord(2, v2, (), 0, s[v2]))
    return state


def _subsets(items: list[int], cap: int | None):
    top = len(items) if cap is None else min(cap, len(items))
    for p in range(top + 1):
        yield from combinations(items, p)


def treat_vertex(state: AlgState, i: int) -> AlgState:
    """Step ``i`` (1-based, ``i >= 3``): adjust the edges around ``order[i-1]``."""
    g, o = state.graph, state.ordering
    if i != state.step + 1 or i < 3:
        raise ValueError(f"step {i} out of sequence (last step {state.step})")
    v = o.order[i - 1]
    preds = o.predecessors(v)
    if not preds:
        raise InvariantViolation(f"vertex {v} has no earlier neighbour")
    pe = [state.edge(u, v) for u in preds]
    wts = state.weights
    sums = state.sums()
    comm = state.committed

    # lowest possible weights on the earlier edges
    for u, e in zip(preds, pe):
        if sums[u] == comm[u] + 3:
            wts[e] -= 3
            sums[u] -= 3
            sums[v] -= 3
    alpha = sums[v]
    nxt = o.first_successor(v)
    deg = g.degree(v)

    if nxt is not None:
        fe = state.edge(v, nxt)
        if wts[fe] != 4:
            raise InvariantViolation(f"forward edge of {v} already modified")
        forbidden = {comm[u] for u in preds}
        choice = None
        for p in range(len(preds) + 1):
            rs = [r for r in range(4) if low(alpha + 3 * p - r) and alpha + 3 * p - r not in forbidden]
            if not rs:
                continue
            for T in combinations(range(len(preds)), p):
                chosen = set(T)
                vals = {wts[e] + 3 if k in chosen else wts[e] for k, e in enumerate(pe)}
                for r in rs:
                    if deg >= THRESHOLD and len(vals) == 1:
                        (c,) = vals
                        if c in (4 - r, 7 - r):
                            continue
                    choice = (T, r)
                    break
                if choice:
                    break
            if choice:
                break
        if choice is None:
            raise SearchExhausted(f"no admissible modification at vertex {v} (step {i})")
        T, r = choice
        for k in T:
            wts[pe[k]] += 3
        wts[fe] -= r
    else:
        # designated neighbour: the one with a later neighbour if any, else the earliest
        open_ = [k for k, u in enumerate(preds) if o.has_successor_after(u, v)]
        if len(open_) > 1:
            raise InvariantViolation(f"sink {v} has several open neighbours")
        j1 = open_[0] if open_ else 0
        cap = SUBSET_CAP if deg > SUBSET_CAP_DEGREE else None
        choice = None
        for T in _subsets(list(range(len(preds))), cap):
            chosen = set(T)
            s = alpha + 3 * len(T)
            ok = True
            for k, u in enumerate(preds):
                if k == j1 or k in open_:
                    if s in (comm[u], comm[u] + 3):
                        ok = False
                        break
                elif s == sums[u] + (3 if k in chosen else 0):
                    ok = False
                    break
            if not ok:
                continue
            if deg >= THRESHOLD and len({wts[e] + 3 if k in chosen else wts[e] for k, e in enumerate(pe)}) == 1:
                continue
            choice = (T, 0)
            break
        if choice is None:
            raise SearchExhausted(f"no admissible modification at sink {v} (step {i})")
        T, r = choice
        for k in T:
            wts[pe[k]] += 3

    s = state.sums()
    comm[v] = s[v]
    state.step = i
    state.trace.append(StepRecord(i, v, tuple(preds[k] for k in T), r, s[v]))
    return state


def check_step(before: list[int], state: AlgState, i: int) -> list[str]:
    """Independent re-check of the step properties after step ``i``.

    ``before`` is the weight list just before the step.  Returns the list of
    failed properties (empty when the step is sound).
    """
    g, o = state.graph, state.ordering
    v = o.order[i - 1]
    preds = o.predecessors(v)
    nxt = o.first_successor(v)
    w = state.weights
    s = sigma(g, w)
    comm = state.committed
    allowed = {g.edge_id(u, v) for u in preds}
    if nxt is not None:
        allowed.add(g.edge_id(v, nxt))
    bad = []
    changed = {e for e in range(g.m) if before[e] != w[e]}
    if not changed <= allowed:
        bad.append("scope")
    if any(not 1 <= x <= K for x in w):
        bad.append("range")
    if nxt is not None:
        if w[g.edge_id(v, nxt)] > 4:
            bad.append("1")
        if not low(s[v]):
            bad.append("2")
        if any(s[v] == comm[u] for u in preds):
            bad.append("3i")
    else:
        for u in preds:
            if o.has_successor_after(u, v):
                if s[v] in (comm[u], comm[u] + 3):
                    bad.append("3ii")
            elif s[v] == s[u]:
                bad.append("3ii")
    if any(s[u] not in (comm[u], comm[u] + 3) for u in preds):
        bad.append("4")
    if g.degree(v) >= THRESHOLD:
        vals = {w[g.edge_id(u, v)] for u in preds}
        if len(vals) == 1:
            if nxt is None:
                bad.append("5")
            else:
                (c,) = vals
                f = w[g.edge_id(v, nxt)]
                if c in (f, f + 3):
                    bad.append("5")
    if comm[v] != s[v]:
        bad.append("commit")
    if nxt is not None and not low(comm[v]):
        bad.append("observation")
    return bad


def terminal_claim(state: AlgState) -> list[int]:
    """Vertices whose final sum breaks ``{w, w+3}`` (with a later neighbour) or ``= w`` (without)."""
    s = state.sums()
    bad = []
    for v in state.ordering.order:
        c = state.committed[v]
        if state.ordering.has_successor(v):
            if s[v] not in (c, c + 3):
                bad.append(v)
        elif s[v] != c:
            bad.append(v)
    return bad


def star_weighting(g: Graph) -> EdgeWeighting:
    """Lowest-index edge 2, the rest 1."""
    return EdgeWeighting(tuple(2 if e == 0 else 1 for e in range(g.m)), K)


def run_general7(g: Graph, *, ordering: VertexOrdering | None = None,
                 trace: list[StepRecord] | None = None) -> EdgeWeighting:
    """A distinguishing 7-weighting in which every vertex of degree >= 6 sees two weights.

    ``g`` must be nice and connected.  Every step is checked as it happens and
    the final weighting is verified before it is returned.
    """
    if not is_nice(g):
        raise GraphError("graph has a K2 component")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if g.n == 1:
        return EdgeWeighting((), K)
    if is_star(g):
        return star_weighting(g)
    o = ordering if ordering is not None else good_ordering(g)
    state = bootstrap(AlgState.start(g, o))
    for i in range(3, g.n + 1):
        before = list(state.weights)
        treat_vertex(state, i)
        bad = check_step(before, state, i)
        if bad:
            raise InvariantViolation(f"step {i} (vertex {o.order[i - 1]}) breaks properties {bad}")
    if terminal_claim(state):
        raise InvariantViolation(f"final sums drift from committed colours at {terminal_claim(state)}")
    if check_distinguishing(g, state.weights) or check_threshold(g, state.weights, THRESHOLD):
        raise InvariantViolation("final weighting fails verification")
    if trace is not None:
        trace.extend(state.trace)
    return EdgeWeighting(tuple(state.weights), K)


def format_trace(records: list[StepRecord]) -> str:
    return "".join(r.format() + "\n" for r in records)


def replay(g: Graph, o: VertexOrdering, records: list[StepRecord]) -> list[int]:
    """Rebuild the final weights from a trace alone (no search)."""
    state = bootstrap(AlgState.start(g, o))
    w = state.weights
    for rec in records:
        if rec.step <= 2:
            continue
        v = rec.vertex
        s = sigma(g, w)
        for u in o.predecessors(v):
            if s[u] == state.committed[u] + 3:
                w[g.edge_id(u, v)] -= 3
        for u in rec.raised:
            w[g.edge_id(u, v)] += 3
        nxt = o.first_successor(v)
        if nxt is not None:
            w[g.edge_id(v, nxt)] -= rec.r
        state.committed[v] = sigma(g, w)[v]
    return w
