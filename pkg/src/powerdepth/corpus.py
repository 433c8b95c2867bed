"""Instance generators: exhaustive graph corpora, seeded random hypergraphs
and the named examples used throughout the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .hypergraph import Hypergraph, bit, full_set, graph, minimize_sets


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def covered_graphs(n: int) -> Iterator[Hypergraph]:
    """Every labeled graph on [n] in which each vertex lies in an edge."""
    pairs = all_pairs(n)
    masks = [bit(a) | bit(b) for a, b in pairs]
    everything = full_set(n)
    for code in range(1, 1 << len(pairs)):
        covered = 0
        edges = []
        for k, m in enumerate(masks):
            if code >> k & 1:
                covered |= m
                edges.append(m)
        if covered == everything:
            yield Hypergraph.derived(n, edges, everything)


def graphs_up_to(n_max: int, n_min: int = 2) -> Iterator[Hypergraph]:
    for n in range(n_min, n_max + 1):
        yield from covered_graphs(n)


@dataclass(frozen=True)
class RandomHypergraphConfig:
    n_min: int = 2
    n_max: int = 5
    max_edges: int = 7
    min_edge_size: int = 1
    max_edge_size: int = 4
    clutter: bool = False


def random_hypergraph(rng: random.Random, cfg: RandomHypergraphConfig = RandomHypergraphConfig()) -> Hypergraph:
    """Mixed edge sizes; uncovered vertices get a 2-edge so every vertex is covered.

    With ``clutter`` set, only minimal edges are kept and every vertex still
    lies in one of them.
    """
    n = rng.randint(cfg.n_min, cfg.n_max)
    top = min(cfg.max_edge_size, n)
    edges = set()
    for _ in range(rng.randint(1, cfg.max_edges)):
        k = rng.randint(min(cfg.min_edge_size, top), top)
        edges.add(sum(bit(v) for v in rng.sample(range(1, n + 1), k)))
    covered = 0
    for e in edges:
        covered |= e
    for v in range(1, n + 1):
        if not covered & bit(v):
            w = rng.choice([u for u in range(1, n + 1) if u != v]) if n > 1 else v
            edges.add(bit(v) | bit(w))
            covered |= bit(v) | bit(w)
    if cfg.clutter:
        edges = set(minimize_sets(edges))
        covered = 0
        for e in edges:
            covered |= e
        # re-cover vertices lost to minimization without breaking the clutter
        for v in range(1, n + 1):
            if covered & bit(v):
                continue
            partners = [u for u in range(1, n + 1) if u != v and bit(u) not in edges]
            e = bit(v) | bit(rng.choice(partners)) if partners else bit(v)
            edges.add(e)
            covered |= e
    return Hypergraph.derived(n, sorted(edges), full_set(n))


def random_hypergraphs(count: int, seed: int, cfg: RandomHypergraphConfig = RandomHypergraphConfig()) -> list[Hypergraph]:
    rng = random.Random(seed)
    return [random_hypergraph(rng, cfg) for _ in range(count)]


# named families


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Hypergraph:
    """Path on n vertices (n - 1 edges)."""
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    return graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Hypergraph:
    if n < 2:
        raise ValueError("a complete graph needs at least 2 vertices")
    return graph(n, all_pairs(n))


def complete_bipartite(m: int, p: int) -> Hypergraph:
    if m < 1 or p < 1:
        raise ValueError("both sides must be non-empty")
    return graph(m + p, [(i, m + j) for i in range(1, m + 1) for j in range(1, p + 1)])


def triangle_path(tail: int) -> Hypergraph:
    """Triangle on 1,2,3 with a path 3-4-...-(3+tail) hanging off vertex 3."""
    if tail < 0:
        raise ValueError("tail must be >= 0")
    edges = [(1, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, 3 + tail)]
    return graph(3 + tail, edges)


def uniform_complete(n: int, k: int) -> Hypergraph:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return Hypergraph.from_edges(n, combinations(range(1, n + 1), k))


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    shift = a.n
    edges = [list(e) for e in a.edge_lists()] + [[v + shift for v in e] for e in b.edge_lists()]
    return Hypergraph.from_edges(a.n + b.n, edges)


NAMED: dict[str, Hypergraph] = {
    "triangle": triangle_path(0),
    "triangle-edge": triangle_path(1),
    "triangle-path2": triangle_path(2),
    "triangle-path3": triangle_path(3),
    "triangle-fork": graph(6, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]),
    "four-uniform-3": uniform_complete(4, 3),
    "bowtie": graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
    "triangle+edge": disjoint_union(triangle_path(0), graph(2, [(1, 2)])),
    "c4": cycle(4),
    "c5": cycle(5),
    "c6": cycle(6),
    "claw": complete_bipartite(1, 3),
    "k22": complete_bipartite(2, 2),
    "k14": complete_bipartite(1, 4),
    "k23": complete_bipartite(2, 3),
    "p4": path(4),
    "2k2": graph(4, [(1, 2), (3, 4)]),
    # three minimal loosely intersecting 3-uniform hypergraphs on five vertices
    "li-a": Hypergraph.from_edges(5, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)]),
    "li-b": Hypergraph.from_edges(5, [(1, 2, 3), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 4, 5)]),
    "li-c": Hypergraph.from_edges(5, [(1, 2, 3), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)]),
}


def named(name: str) -> Optional[Hypergraph]:
    return NAMED.get(name)
