"""Simple undirected graphs with positional edge-weightings.

Vertices are dense integers ``0..n-1`` and edges are identified by their index
in ``Graph.edges``; a weighting is therefore just a sequence of positive
integers aligned with the edge list.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GraphError, ParseError


class Graph:
    """Immutable simple graph.

    ``edges[i]`` is the pair ``(min, max)`` of edge ``i`` and ``adj[v]`` lists
    ``(neighbour, edge index)`` pairs in edge-index order.
    """

    __slots__ = ("n", "edges", "adj", "_eid")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        canon = []
        seen = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            adj[u].append((v, len(canon)))
            adj[v].append((u, len(canon)))
            canon.append((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_eid", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbours(self, v: int) -> list[int]:
        return [u for u, _ in self.adj[v]]

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises ``KeyError`` if absent."""
        if self._eid is None:
            object.__setattr__(self, "_eid", {e: i for i, e in enumerate(self.edges)})
        return self._eid[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.edge_id(u, v)
        except KeyError:
            return False
        return True

    def without_edges(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        """Same vertex set minus some edges; also returns new→old edge indices."""
        drop = set(removed)
        keep = [i for i in range(self.m) if i not in drop]
        return Graph(self.n, [self.edges[i] for i in keep]), keep

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class EdgeWeighting:
    """Weights aligned with a graph's edge indices, all in ``[1, k]``."""

    weights: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        for x in self.weights:
            if not 1 <= x <= self.k:
                raise ValueError(f"weight {x} outside [1, {self.k}]")

    @classmethod
    def of(cls, weights: Sequence[int], k: int | None = None) -> "EdgeWeighting":
        weights = tuple(weights)
        return cls(weights, k if k is not None else max(weights, default=1))

    def __len__(self):
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=0)


class Component(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]   # local index -> vertex of the parent graph
    edges: tuple[int, ...]      # local edge index -> edge index of the parent graph


def sigma(g: Graph, w: Sequence[int]) -> tuple[int, ...]:
    """Vertex sums induced by a weighting; isolated vertices get 0."""
    if len(w) != g.m:
        raise ValueError(f"weighting has {len(w)} entries, graph has {g.m} edges")
    sums = [0] * g.n
    for (u, v), x in zip(g.edges, w):
        sums[u] += x
        sums[v] += x
    return tuple(sums)


def components(g: Graph) -> list[Component]:
    """Connected components, ordered by their smallest vertex."""
    comp = [-1] * g.n
    groups: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        cid = len(groups)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if comp[y] < 0:
                    comp[y] = cid
                    members.append(y)
                    queue.append(y)
        groups.append(sorted(members))
    edge_groups: list[list[int]] = [[] for _ in groups]
    for i, (u, _) in enumerate(g.edges):
        edge_groups[comp[u]].append(i)
    out = []
    for members, eids in zip(groups, edge_groups):
        local = {v: i for i, v in enumerate(members)}
        sub = Graph(len(members), [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in eids])
        out.append(Component(sub, tuple(members), tuple(eids)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y, _ in g.adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == g.n


def is_nice(g: Graph) -> bool:
    """True iff no connected component is a single edge."""
    for u, v in g.edges:
        if len(g.adj[u]) == 1 and len(g.adj[v]) == 1:
            return False
    return True


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """BFS 2-colouring with vertex 0 (or each component's least vertex) in V1.

    Returns ``None`` when an odd cycle exists.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    v1 = frozenset(v for v in range(g.n) if side[v] == 0)
    v2 = frozenset(v for v in range(g.n) if side[v] == 1)
    return v1, v2


def is_star(g: Graph) -> bool:
    """Connected ``K_{1,n-1}`` with ``n >= 3``."""
    return g.n >= 3 and g.m == g.n - 1 and g.max_degree == g.n - 1


def merge_weightings(g: Graph, parts: Iterable[tuple[Sequence[int], Sequence[int]]]) -> list[int]:
    """Assemble per-part weights ``(edge indices, weights)`` into one weight list."""
    out = [0] * g.m
    for eids, ws in parts:
        for e, x in zip(eids, ws):
            out[e] = x
    if 0 in out:
        raise GraphError("some edges were left unweighted")
    return out


# -- text formats --------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments and blank lines are skipped.

    An optional ``n <count>`` line declares the vertex count (to allow trailing
    isolated vertices); otherwise it is one more than the largest index seen.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise ParseError(lineno, "vertex-count header must come first")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"malformed header {line!r}")
            declared = int(parts[1])
            continue
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise ParseError(lineno, f"expected two non-negative integers, got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key} (first on line {seen[key]})")
        seen[key] = lineno
        edges.append((u, v))
        lines.append(lineno)
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is None:
        declared = top
    elif declared < top:
        raise ParseError(lines[-1] if lines else 1, f"vertex index {top - 1} exceeds declared count {declared}")
    return Graph(declared, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_weighting(g: Graph, w: Sequence[int]) -> str:
    """One ``u v w`` line per edge, endpoints sorted, in edge-index order."""
    if len(w) != g.m:
        raise ValueError("weighting does not match graph")
    return "".join(f"{u} {v} {x}\n" for (u, v), x in zip(g.edges, w))


def parse_weighting(g: Graph, text: str) -> EdgeWeighting:
    """Read ``u v w`` lines back into a weighting aligned with ``g``."""
    out: list[int | None] = [None] * g.m
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, f"expected 'u v w', got {line!r}")
        u, v, x = map(int, parts)
        try:
            e = g.edge_id(u, v)
        except KeyError:
            raise ParseError(lineno, f"({u}, {v}) is not an edge of the graph") from None
        if out[e] is not None:
            raise ParseError(lineno, f"edge ({u}, {v}) weighted twice")
        if x < 1:
            raise ParseError(lineno, "weights must be positive")
        out[e] = x
    missing = [g.edges[i] for i, x in enumerate(out) if x is None]
    if missing:
        raise GraphError(f"no weight given for edge {missing[0]}")
    return EdgeWeighting.of(out)  # type: ignore[arg-type]
