"""Shared helpers: independent reference checks built on networkx and brute force."""
from __future__ import annotations

import os
from itertools import product
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from nsdweight.graph import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(idx[u], idx[v]) for u, v in h.edges()])


def ref_sums(g: Graph, w) -> dict[int, int]:
    """Vertex sums through networkx edge attributes."""
    h = to_nx(g)
    for (u, v), x in zip(g.edges, w):
        h[u][v]["w"] = x
    return {v: h.degree(v, weight="w") for v in h.nodes()}


def ref_ok(g: Graph, w, k: int, t: int, d: int | None = None) -> bool:
    """Distinguishing, weights in 1..k, threshold t and (optionally) d-relaxed."""
    if any(not 1 <= x <= k for x in w):
        return False
    s = ref_sums(g, w)
    if any(s[u] == s[v] for u, v in g.edges):
        return False
    inc = {v: [x for (a, b), x in zip(g.edges, w) if v in (a, b)] for v in range(g.n)}
    if any(len(xs) >= t and len(set(xs)) < 2 for xs in inc.values()):
        return False
    if d is not None and any(xs.count(c) > d for xs in inc.values() for c in set(xs)):
        return False
    return True


def brute_min_k(g: Graph, d: int, k_max: int = 6) -> int | None:
    """Least k with a distinguishing d-relaxed k-weighting, by trying every weighting."""
    for k in range(1, k_max + 1):
        for w in product(range(1, k + 1), repeat=g.m):
            if ref_ok(g, w, k, t=10 ** 9, d=d):
                return k
    return None


def load_connected8() -> list[Graph]:
    with open(DATA / "connected8.g6", "rb") as fh:
        return [from_nx(nx.from_graph6_bytes(line.strip())) for line in fh if line.strip()]


@pytest.fixture
def tmp_text(tmp_path):
    def write(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
