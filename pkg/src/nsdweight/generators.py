"""Named graph families, seeded random graphs and exhaustive labeled enumerators."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import GraphError
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    _need(n >= 2, "star needs at least 2 vertices")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs at least 1 vertex")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    _need(a >= 1 and b >= 1, "both sides need at least 1 vertex")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..n-1``."""
    _need(n >= 4, "wheel needs at least 4 vertices")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph(n, [(0, i) for i in range(1, n)] + rim)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_bounded_degree(n: int, max_degree: int, seed: int, *, connected: bool = False,
                          density: float = 1.0) -> Graph:
    """Random graph with maximum degree at most ``max_degree``.

    Candidate pairs are visited in a seeded random order and each is kept with
    probability ``density`` when both endpoints still have room.  With
    ``connected`` a random spanning tree of bounded degree is laid down first.
    """
    _need(n >= 1, "need at least 1 vertex")
    _need(max_degree >= 0, "maximum degree must be non-negative")
    _need(0.0 <= density <= 1.0, "density must lie in [0, 1]")
    if connected and n > 2:
        _need(max_degree >= 2, "a connected graph on more than 2 vertices needs maximum degree >= 2")
    if connected and n == 2:
        _need(max_degree >= 1, "a connected graph on 2 vertices needs maximum degree >= 1")
    rng = random.Random(seed)
    deg = [0] * n
    edges: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1

    if connected:
        perm = list(range(n))
        rng.shuffle(perm)
        for i in range(1, n):
            open_ = [perm[j] for j in range(i) if deg[perm[j]] < max_degree]
            add(perm[i], rng.choice(open_))
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if (u, v) in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        if rng.random() < density:
            add(u, v)
    return Graph(n, sorted(edges))


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Each of the ``n1*n2`` cross pairs kept independently with probability ``p``."""
    _need(n1 >= 0 and n2 >= 0, "side sizes must be non-negative")
    _need(0.0 <= p <= 1.0, "p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(n1 + n2, [(i, n1 + j) for i in range(n1) for j in range(n2) if rng.random() < p])


# -- exhaustive enumeration -----------------------------------------------------

def _masks_connected(n: int, nbr: list[int]) -> bool:
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _has_k2_component(n: int, nbr: list[int]) -> bool:
    for u in range(n):
        m = nbr[u]
        if m and m & (m - 1) == 0:
            v = m.bit_length() - 1
            if nbr[v] == 1 << u:
                return True
    return False


def enumerate_labeled(n: int, *, connected: bool = False, nice: bool = False) -> Iterator[tuple[int, Graph]]:
    """Every labeled simple graph on ``n`` vertices with its edge-subset index.

    Subset ``mask`` contains pair ``i`` of ``combinations(range(n), 2)`` when
    bit ``i`` is set.  The filters are applied on bitmasks before a ``Graph``
    is built.
    """
    _need(n >= 0, "vertex count must be non-negative")
    pairs = list(combinations(range(n), 2))
    bits = [(1 << v, 1 << u) for u, v in pairs]
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        chosen = []
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                bu, bv = bits[i]
                nbr[u] |= bu
                nbr[v] |= bv
                chosen.append(pairs[i])
            m >>= 1
            i += 1
        if connected and not _masks_connected(n, nbr):
            continue
        if nice and _has_k2_component(n, nbr):
            continue
        yield mask, Graph(n, chosen)


def all_labeled(n: int, *, connected: bool = False, nice: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices (``2^(n choose 2)`` without filters)."""
    for _, g in enumerate_labeled(n, connected=connected, nice=nice):
        yield g


def connected_bipartite_labeled(n: int) -> Iterator[Graph]:
    """Every connected bipartite labeled graph on ``n`` vertices, each once.

    A connected bipartite graph has a unique bipartition, so fixing vertex 0
    on the first side and running over all cross-edge subsets of every side
    split lists each graph exactly once.
    """
    _need(n >= 1, "need at least 1 vertex")
    for split in range(1 << (n - 1)):
        side = [0] + [(split >> (v - 1)) & 1 for v in range(1, n)]
        a = [v for v in range(n) if side[v] == 0]
        b = [v for v in range(n) if side[v] == 1]
        if not b and n > 1:
            continue
        pairs = [(u, v) for u in a for v in b]
        for mask in range(1 << len(pairs)):
            nbr = [0] * n
            chosen = []
            for i, (u, v) in enumerate(pairs):
                if mask >> i & 1:
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
                    chosen.append((min(u, v), max(u, v)))
            if _masks_connected(n, nbr):
                yield Graph(n, sorted(chosen))


KINDS = ("path", "cycle", "star", "complete", "complete_bipartite", "wheel", "petersen",
         "random_bounded_degree", "random_bipartite")


def generate(kind: str, **params) -> Graph:
    """Build one graph by family name; see ``KINDS``."""
    try:
        if kind == "path":
            return path(params["n"])
        if kind == "cycle":
            return cycle(params["n"])
        if kind == "star":
            return star(params["n"])
        if kind == "complete":
            return complete(params["n"])
        if kind == "complete_bipartite":
            return complete_bipartite(params["n1"], params["n2"])
        if kind == "wheel":
            return wheel(params["n"])
        if kind == "petersen":
            return petersen()
        if kind == "random_bounded_degree":
            return random_bounded_degree(params["n"], params["max_degree"], params.get("seed", 0),
                                         connected=params.get("connected", False),
                                         density=params.get("density", 1.0))
        if kind == "random_bipartite":
            return random_bipartite(params["n1"], params["n2"], params["p"], params.get("seed", 0))
    except KeyError as exc:
        raise GraphError(f"{kind} needs parameter {exc.args[0]!r}") from None
    raise GraphError(f"unknown graph kind {kind!r}")
