from __future__ import annotations

from hypothesis import strategies as st

from powerdepth.hypergraph import Hypergraph, full_set

VERTEX_COUNTS = st.integers(min_value=2, max_value=6)


@st.composite
def hypergraphs(draw, max_n: int = 5, max_edge: int = 4, graphs_only: bool = False) -> Hypergraph:
    """Covered hypergraphs on [n]; containments between edges are allowed."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    everything = full_set(n)
    lo, hi = (2, 2) if graphs_only else (1, min(max_edge, n))
    edge = st.sets(st.integers(1, n), min_size=lo, max_size=hi).map(lambda s: sum(1 << (v - 1) for v in s))
    edges = draw(st.lists(edge, min_size=1, max_size=8, unique=True))
    covered = 0
    for e in edges:
        covered |= e
    for v in range(1, n + 1):
        if not covered >> (v - 1) & 1:
            w = v % n + 1
            edges.append((1 << (v - 1)) | (1 << (w - 1)))
            covered |= edges[-1]
    return Hypergraph.derived(n, edges, everything)


def graphs(max_n: int = 6):
    return hypergraphs(max_n=max_n, graphs_only=True)
