"""Vertex sets, hypergraphs and the graph helpers used throughout.

Vertices are numbered 1..n and a vertex set is a plain ``int`` bit mask:
vertex ``i`` lives in bit ``i - 1``.  Every structure here is immutable and
every function is pure.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64

VertexSet = int  # bit mask, vertex i -> bit i-1


class HypergraphError(ValueError):
    """Malformed hypergraph input (bad vertex, empty edge, uncovered vertex)."""


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def size(mask: VertexSet) -> int:
    return bin(mask).count("1")


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def bit(v: int) -> VertexSet:
    return 1 << (v - 1)


def subsets(mask: VertexSet) -> Iterator[VertexSet]:
    """All subsets of ``mask`` in increasing integer order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def subsets_by_size(mask: VertexSet) -> Iterator[VertexSet]:
    """Subsets of ``mask`` by increasing cardinality, then increasing bit pattern."""
    verts = members(mask)
    for k in range(len(verts) + 1):
        level = sorted(vset(c) for c in combinations(verts, k))
        yield from level


def format_set(mask: VertexSet) -> str:
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def _dedupe(edges: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    seen = set()
    out = []
    for e in edges:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on the ambient vertex range 1..n.

    ``vertices`` is the vertex set the hypergraph lives on.  Input hypergraphs
    use all of 1..n; derived ones (sections, induced subhypergraphs, links,
    contractions) shrink it, e.g. the induced subhypergraph on C lives on C.
    Edges may be empty only in derived hypergraphs.
    """

    n: int
    edges: tuple[VertexSet, ...]
    vertices: VertexSet

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build and validate an input hypergraph from 1-based vertex lists."""
        if not 1 <= n <= MAX_VERTICES:
            raise HypergraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        masks = []
        for edge in edges:
            edge = list(edge)
            if not edge:
                raise HypergraphError("empty edge")
            for v in edge:
                if not 1 <= v <= n:
                    raise HypergraphError(f"vertex {v} out of range 1..{n}")
            masks.append(vset(edge))
        h = cls(n, _dedupe(masks), full_set(n))
        uncovered = h.vertices & ~h.support
        if uncovered:
            raise HypergraphError(f"vertex {members(uncovered)[0]} lies in no edge")
        return h

    @classmethod
    def derived(cls, n: int, edges: Iterable[VertexSet], vertices: VertexSet) -> "Hypergraph":
        return cls(n, _dedupe(edges), vertices)

    @property
    def support(self) -> VertexSet:
        """Union of all edges."""
        s = 0
        for e in self.edges:
            s |= e
        return s

    @property
    def is_graph(self) -> bool:
        return all(size(e) == 2 for e in self.edges)

    @property
    def has_empty_edge(self) -> bool:
        return 0 in self.edges

    def isolated(self) -> VertexSet:
        """Vertices i with {i} an edge (the isolated vertices of the hypergraph)."""
        s = 0
        for e in self.edges:
            if e and e & (e - 1) == 0:
                s |= e
        return s

    def edge_lists(self) -> list[list[int]]:
        return [members(e) for e in self.edges]

    def __str__(self) -> str:
        return f"n={self.n} " + " ".join(format_set(e) for e in self.edges)


def require_graph(g: Hypergraph) -> None:
    if not g.is_graph:
        raise ValueError("expected a graph (every edge of size 2)")


def graph(n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    g = Hypergraph.from_edges(n, edges)
    require_graph(g)
    return g


def section(h: Hypergraph, u: VertexSet) -> Hypergraph:
    """H|_U: the edges contained in U, as a hypergraph on U."""
    return Hypergraph.derived(h.n, (e for e in h.edges if e & ~u == 0), u)


def induced(h: Hypergraph, c: VertexSet) -> Hypergraph:
    """H_C = {F & C}: contains the empty edge iff C is not a cover."""
    return Hypergraph.derived(h.n, (e & c for e in h.edges), c)


def link(h: Hypergraph, i: int) -> Hypergraph:
    b = bit(i)
    return Hypergraph.derived(h.n, (e & ~b for e in h.edges if e & b), h.vertices & ~b)


def contract(h: Hypergraph, i: int) -> Hypergraph:
    """H(i) = {F minus i}; equals the edges avoiding i together with the link of i."""
    b = bit(i)
    return Hypergraph.derived(h.n, (e & ~b for e in h.edges), h.vertices & ~b)


def is_cover(h: Hypergraph, c: VertexSet) -> bool:
    return all(e & c for e in h.edges)


def minimize_sets(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Inclusion-minimal members, sorted as integers."""
    uniq = sorted(set(sets), key=lambda s: (size(s), s))
    kept: list[VertexSet] = []
    for s in uniq:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return sorted(kept)


def maximize_sets(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Inclusion-maximal members, sorted as integers."""
    uniq = sorted(set(sets), key=lambda s: (-size(s), s))
    kept: list[VertexSet] = []
    for s in uniq:
        if not any(s & ~k == 0 for k in kept):
            kept.append(s)
    return sorted(kept)


def minimal_covers(h: Hypergraph) -> list[VertexSet]:
    """Minimal transversals by Berge's edge-by-edge construction."""
    if not h.edges:
        return [0]
    if h.has_empty_edge:
        return []
    covers = [0]
    for e in minimize_sets(h.edges):
        nxt = []
        for c in covers:
            if c & e:
                nxt.append(c)
            else:
                nxt.extend(c | bit(v) for v in members(e))
        covers = minimize_sets(nxt)
    return covers


def adjacency(g: Hypergraph) -> dict[int, VertexSet]:
    adj = {v: 0 for v in members(g.vertices | g.support)}
    for e in g.edges:
        u, v = members(e)
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    return adj


def neighborhood(g: Hypergraph, u: VertexSet) -> VertexSet:
    """N(U); contains vertices of U that are adjacent to other vertices of U."""
    out = 0
    for e in g.edges:
        if e & u:
            out |= e & ~u if size(e & u) == 1 else e
    return out


def triangles(g: Hypergraph) -> list[VertexSet]:
    require_graph(g)
    adj = adjacency(g)
    out = []
    for e in g.edges:
        u, v = members(e)
        common = adj[u] & adj[v]
        for w in members(common):
            if w > v:
                out.append(e | bit(w))
    return sorted(out)


def induced_odd_cycles(g: Hypergraph) -> list[VertexSet]:
    """Vertex sets of odd induced (chordless) cycles, by extending induced paths."""
    require_graph(g)
    adj = adjacency(g)
    found = set()

    # Paths start at their smallest vertex; a vertex adjacent to the start
    # closes the cycle instead of extending, so paths stay chordless.
    def extend(path_mask: VertexSet, start: int, last: int, interior: VertexSet) -> None:
        for v in members(adj[last] & ~path_mask):
            if v < start or adj[v] & interior:
                continue
            if adj[v] & bit(start):
                found.add(path_mask | bit(v))
                continue
            extend(path_mask | bit(v), start, v, interior | bit(last))

    for s in adj:
        for w in members(adj[s]):
            if w > s:
                extend(bit(s) | bit(w), s, w, 0)
    return sorted(c for c in found if size(c) % 2 == 1)


def complement_graph(g: Hypergraph) -> Hypergraph:
    require_graph(g)
    present = set(g.edges)
    verts = members(g.vertices)
    edges = [vset(p) for p in combinations(verts, 2) if vset(p) not in present]
    return Hypergraph.derived(g.n, edges, g.vertices)


def _distances(adj: dict[int, VertexSet], source: int, allowed: VertexSet) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in members(adj[u] & allowed):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_diameter(g: Hypergraph, s: Optional[VertexSet] = None) -> float:
    """Diameter of the induced graph on S (default: the vertex set); ``math.inf`` if disconnected."""
    require_graph(g)
    if s is None:
        s = g.vertices
    adj = adjacency(g)
    verts = members(s)
    for v in verts:
        adj.setdefault(v, 0)
    best = 0
    for v in verts:
        dist = _distances(adj, v, s)
        if len(dist) < len(verts):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def is_connected_graph(g: Hypergraph, s: VertexSet) -> bool:
    return graph_diameter(g, s) != math.inf


def is_bipartite(g: Hypergraph) -> Optional[tuple[VertexSet, VertexSet]]:
    """A 2-colouring (side containing the smallest vertex of each component first)."""
    require_graph(g)
    adj = adjacency(g)
    colour: dict[int, int] = {}
    for s in sorted(adj):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in members(adj[u]):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    left = vset(v for v, c in colour.items() if c == 0)
    right = vset(v for v, c in colour.items() if c == 1)
    return left, right


def parse_text(text: str) -> Hypergraph:
    """Parse the ``n <count>`` + one-edge-per-line format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise HypergraphError(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise HypergraphError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            if not 1 <= n <= MAX_VERTICES:
                raise HypergraphError(f"line {lineno}: vertex count must be in 1..{MAX_VERTICES}, got {n}")
            continue
        try:
            edge = [int(t) for t in tokens]
        except ValueError:
            raise HypergraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        for v in edge:
            if not 1 <= v <= n:
                raise HypergraphError(f"line {lineno}: vertex {v} out of range 1..{n}")
        edges.append(edge)
    if n is None:
        raise HypergraphError("line 1: missing 'n <count>' header")
    if not edges:
        raise HypergraphError("no edges given")
    return Hypergraph.from_edges(n, edges)


def to_text(h: Hypergraph) -> str:
    lines = [f"n {h.n}"]
    lines += [" ".join(str(v) for v in members(e)) for e in h.edges]
    return "\n".join(lines) + "\n"
