"""Bipartite constructions.

A base weighting with few values separates the two sides by vertex sum
modulo 3 (or 2).  Each weight class is then split in two with a local
2-weighting so that every vertex of degree at least 2 sees two values, and
the halves are lifted to ``{i, i+3}`` (or ``{i, i+2}``), which keeps every
vertex sum in its residue class.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError, InvariantViolation
from .graph import EdgeWeighting, Graph, bipartition, components, is_connected, is_nice, sigma
from .verify import check_distinguishing, check_threshold


@dataclass(frozen=True)
class ModClassCertificate:
    """Vertex sums modulo ``modulus``; adjacent vertices must differ."""

    modulus: int
    side: frozenset[int]            # the side treated as V1
    residues: tuple[int, ...]

    def holds(self, g: Graph) -> bool:
        r = self.residues
        return all(r[u] != r[v] for u, v in g.edges)

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "side": sorted(self.side), "residues": list(self.residues)}


def _certificate(g: Graph, w: Sequence[int], modulus: int, side: frozenset[int]) -> ModClassCertificate:
    return ModClassCertificate(modulus, side, tuple(s % modulus for s in sigma(g, w)))


def _require_connected_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    if g.n < 3:
        raise GraphError("need at least 3 vertices")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    parts = bipartition(g)
    if parts is None:
        raise GraphError("graph is not bipartite")
    return parts


def _bfs_parents(g: Graph, root: int) -> list[tuple[int, int] | None]:
    """``parent[v] = (parent vertex, edge index)``; neighbours visited in ascending order."""
    parent: list[tuple[int, int] | None] = [None] * g.n
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, e in sorted(g.adj[x]):
            if not seen[y]:
                seen[y] = True
                parent[y] = (x, e)
                queue.append(y)
    return parent


def _add3(x: int, a: int) -> int:
    """Residue addition with representatives 1, 2, 3."""
    return (x + a - 1) % 3 + 1


def bip_three_weighting(g: Graph) -> tuple[EdgeWeighting, ModClassCertificate]:
    """Distinguishing 3-weighting whose sums differ mod 3 across the bipartition."""
    _require_connected_bipartite(g)
    x = min(v for v in range(g.n) if g.degree(v) >= 2)
    a, b = bipartition(g)
    v1 = a if x in a else b
    w = [3] * g.m
    parent = _bfs_parents(g, x)
    for v in sorted(v1 - {x}):
        step = 1
        y = v
        while y != x:
            p, e = parent[y]  # type: ignore[misc]
            w[e] = _add3(w[e], step)
            step = 3 - step
            y = p
    if sigma(g, w)[x] % 3 == 0:
        for _, e in sorted(g.adj[x])[:2]:
            w[e] = _add3(w[e], 2)
    cert = _certificate(g, w, 3, v1)
    if check_distinguishing(g, w) or not cert.holds(g):
        raise InvariantViolation("3-weighting does not separate the sides")
    return EdgeWeighting(tuple(w), 3), cert


def bip_two_local(g: Graph) -> EdgeWeighting:
    """2-weighting where every vertex of degree >= 2 sees both values.

    Peels vertices of minimum degree (lowest index on ties), then puts them
    back one at a time, repairing along an alternating path when needed.
    Finally each component is flipped if needed so that its lowest-index
    edge carries 1 (swapping the two values keeps the property).
    """
    if bipartition(g) is None:
        raise GraphError("graph is not bipartite")
    n = g.n
    live = [dict() for _ in range(n)]   # current neighbour -> edge index
    for v in range(n):
        for y, e in g.adj[v]:
            live[v][y] = e
    removed = [False] * n
    peel: list[tuple[int, list[tuple[int, int]]]] = []
    for _ in range(n):
        v = min((u for u in range(n) if not removed[u]), key=lambda u: (len(live[u]), u))
        peel.append((v, sorted(live[v].items())))
        removed[v] = True
        for y in list(live[v]):
            del live[y][v]
        live[v].clear()

    w = [0] * g.m
    cur = [dict() for _ in range(n)]     # the graph rebuilt so far

    def other(c: int) -> int:
        return 3 - c

    def values(y: int) -> set[int]:
        return {w[e] for e in cur[y].values()}

    def lone_weight(y: int) -> int:
        (e,) = cur[y].values()
        return w[e]

    for v, edges in reversed(peel):
        d = len(edges)
        if d == 1:
            (u, e), = edges
            w[e] = other(lone_weight(u)) if len(cur[u]) == 1 else 1
        elif d == 2:
            (u, eu), (x, ex) = edges
            if len(cur[x]) >= 2 and len(cur[u]) < 2:
                (u, eu), (x, ex) = (x, ex), (u, eu)
            if len(cur[u]) >= 2:
                w[ex] = other(lone_weight(x)) if len(cur[x]) == 1 else 1
                w[eu] = other(w[ex])
            else:
                if len(cur[u]) != 1 or len(cur[x]) != 1:
                    raise InvariantViolation("minimum-degree neighbour lost all its edges")
                if lone_weight(u) == lone_weight(x):
                    _free_endpoint(cur, w, u, x)
                w[eu] = lone_weight(x)
                w[ex] = lone_weight(u)
        elif d >= 3:
            for i, (_, e) in enumerate(edges):
                w[e] = 1 if i == 0 else 2
        for u, e in edges:
            cur[v][u] = e
            cur[u][v] = e
        for y in range(n):
            if len(cur[y]) >= 2 and len(values(y)) < 2:
                raise InvariantViolation(f"vertex {y} sees one value after re-inserting {v}")
    for comp in components(g):
        if comp.edges and w[comp.edges[0]] == 2:
            for e in comp.edges:
                w[e] = 3 - w[e]
    return EdgeWeighting(tuple(w), 2)


def _free_endpoint(cur: list[dict], w: list[int], u: int, avoid: int) -> None:
    """Flip the weight on ``u``'s only edge, repairing along an alternating path.

    Walks from ``u`` through vertices that carry exactly one edge of the
    incoming weight, until reaching a vertex where the flip is harmless.
    """
    (u1, e0), = cur[u].items()
    path_vertices = [u]
    path_edges = [e0]
    prev, y = u, u1
    while True:
        c = w[path_edges[-1]]
        same = [e for e in cur[y].values() if w[e] == c]
        if len(cur[y]) == 1 or len(same) >= 2:
            break
        # exactly one edge of weight c at y: continue along the lowest other edge
        nxt = min(z for z in cur[y] if z != prev)
        if nxt in path_vertices or nxt == y or nxt == avoid:
            raise InvariantViolation("alternating path revisits a vertex")
        path_vertices.append(y)
        path_edges.append(cur[y][nxt])
        prev, y = y, nxt
    path_vertices.append(y)
    if len(set(path_vertices)) != len(path_vertices):
        raise InvariantViolation("alternating path revisits a vertex")
    for e in path_edges:
        w[e] = 3 - w[e]


def _lift(g: Graph, base: Sequence[int], offset: int) -> list[int]:
    """Split each base class with ``bip_two_local`` and map it to ``{c, c + offset}``."""
    out = list(base)
    for c in sorted(set(base)):
        eids = [e for e, x in enumerate(base) if x == c]
        sub = Graph(g.n, [g.edges[e] for e in eids])
        split = bip_two_local(sub)
        for e, y in zip(eids, split):
            out[e] = c if y == 1 else c + offset
    return out


def _bip_six_connected(g: Graph) -> list[int]:
    base, _ = bip_three_weighting(g)
    w = _lift(g, base.weights, 3)
    if any(a % 3 != b % 3 for a, b in zip(sigma(g, w), sigma(g, base.weights))):
        raise InvariantViolation("lifting changed a residue mod 3")
    return w


def _per_component(g: Graph, solve) -> list[int]:
    if not is_nice(g):
        raise GraphError("graph has a K2 component")
    if bipartition(g) is None:
        raise GraphError("graph is not bipartite")
    out = [0] * g.m
    for comp in components(g):
        if comp.graph.m == 0:
            continue
        for e, x in zip(comp.edges, solve(comp.graph)):
            out[e] = x
    return out


def bip_six(g: Graph) -> EdgeWeighting:
    """Distinguishing 6-weighting with threshold 2 for a nice bipartite graph."""
    w = _per_component(g, _bip_six_connected)
    if check_distinguishing(g, w) or check_threshold(g, w, 2):
        raise InvariantViolation("6-weighting fails verification")
    return EdgeWeighting(tuple(w), 6)


def even_side(g: Graph) -> frozenset[int] | None:
    """A side of even size (the one holding vertex 0 if both are), else ``None``."""
    parts = bipartition(g)
    if parts is None:
        raise GraphError("graph is not bipartite")
    for side in parts:
        if len(side) % 2 == 0:
            return side
    return None


def bip_even_two(g: Graph) -> tuple[EdgeWeighting, ModClassCertificate]:
    """Distinguishing 2-weighting with odd sums on an even side and even sums on the other.

    The weight-1 edges form a parity join: a subgraph in which exactly the
    vertices of the even side have odd degree.  It is built bottom-up on a
    breadth-first spanning tree.
    """
    _require_connected_bipartite(g)
    side = even_side(g)
    if side is None:
        raise GraphError("both sides have odd size")
    root = min(range(g.n))
    parent = _bfs_parents(g, root)
    order = []
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        order.append(x)
        for y, _ in sorted(g.adj[x]):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    parity = [0] * g.n
    w = [2] * g.m
    for v in reversed(order):
        if v == root:
            continue
        want = 1 if v in side else 0
        if parity[v] != want:
            p, e = parent[v]  # type: ignore[misc]
            w[e] = 1
            parity[v] ^= 1
            parity[p] ^= 1
    if parity[root] != (1 if root in side else 0):
        raise InvariantViolation("parity join failed at the root")
    cert = _certificate(g, w, 2, side)
    if check_distinguishing(g, w) or not cert.holds(g):
        raise InvariantViolation("2-weighting does not separate the sides")
    return EdgeWeighting(tuple(w), 2), cert


def _bip_four_connected(g: Graph) -> list[int]:
    base, _ = bip_even_two(g)
    w = _lift(g, base.weights, 2)
    if any(a % 2 != b % 2 for a, b in zip(sigma(g, w), sigma(g, base.weights))):
        raise InvariantViolation("lifting changed a parity")
    return w


def bip_four(g: Graph) -> EdgeWeighting:
    """Distinguishing 4-weighting with threshold 2 for a connected bipartite
    graph on at least 3 vertices with a side of even size."""
    _require_connected_bipartite(g)
    w = _bip_four_connected(g)
    if check_distinguishing(g, w) or check_threshold(g, w, 2):
        raise InvariantViolation("4-weighting fails verification")
    return EdgeWeighting(tuple(w), 4)
