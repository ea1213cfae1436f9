import random
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from doubly_resolving import graph as G
from doubly_resolving.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"
ACCEPTANCE: list[tuple[str, bool, str]] = []


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


@lru_cache(maxsize=None)
def atlas_connected(min_n=1, max_n=7) -> tuple[Graph, ...]:
    """Every connected graph on min_n..max_n vertices, up to isomorphism."""
    return tuple(
        from_nx(h) for h in nx.graph_atlas_g()
        if min_n <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    )


@lru_cache(maxsize=None)
def connected_n8() -> tuple[Graph, ...]:
    """All 11117 connected graphs on 8 vertices (built by scripts/build_corpus.py)."""
    lines = (DATA / "connected_n8.g6").read_text().split()
    return tuple(from_nx(nx.from_graph6_bytes(s.encode())) for s in lines)


def random_connected_batch(count, n_lo, n_hi, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        out.append(G.random_connected(n, rng.uniform(0.15, 0.85), rng))
    return out


@st.composite
def trees(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return G.path(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return G.tree_from_prufer(seq)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    t = draw(trees(min_n, max_n))
    non_edges = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if v not in t.adj[u]]
    if not non_edges:
        return t
    extra = draw(st.sets(st.sampled_from(non_edges)))
    return Graph.from_edges(t.n, t.edges() + sorted(extra))


@st.composite
def unicyclic_graphs(draw, min_n=3, max_n=10):
    t = draw(trees(min_n, max_n))
    non_edges = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if v not in t.adj[u]]
    return Graph.from_edges(t.n, t.edges() + [draw(st.sampled_from(non_edges))])


@pytest.fixture
def record():
    def _record(name: str, passed: bool, detail: str = ""):
        ACCEPTANCE.append((name, passed, detail))
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
