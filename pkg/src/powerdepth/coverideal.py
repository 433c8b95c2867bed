"""Second powers of cover ideals of graphs.

The cover ideal of G is the edge ideal of the hypergraph of its (minimal)
vertex covers, so the general machinery applies; for graphs everything
collapses to edges and induced odd cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .assoc import AssociatedPrime
from .complexes import DepthClass
from .hypergraph import (
    Hypergraph,
    VertexSet,
    induced,
    induced_odd_cycles,
    is_cover,
    members,
    minimal_covers,
    require_graph,
    size,
    subsets,
)
from .oracle import MonomialIdeal, edge_ideal
from .saturating import is_2_saturating


def cover_hypergraph(g: Hypergraph, minimal_only: bool = True) -> Hypergraph:
    """Hypergraph of the vertex covers of G (its minimal ones by default)."""
    require_graph(g)
    if minimal_only:
        edges = minimal_covers(g)
    else:
        edges = [c for c in subsets(g.vertices) if is_cover(g, c)]
    return Hypergraph.derived(g.n, edges, g.vertices)


def cover_ideal(g: Hypergraph) -> MonomialIdeal:
    return edge_ideal(cover_hypergraph(g))


def _is_cycle_on(g: Hypergraph, c: VertexSet) -> bool:
    return c in induced_odd_cycles(g)


def cover_saturating_sets(g: Hypergraph, c: VertexSet) -> list[VertexSet]:
    """2-saturating sets of H(G)_C: ∅ and the singletons of C when C is an
    edge, C itself when C is an induced odd cycle, nothing otherwise."""
    require_graph(g)
    if not is_cover(cover_hypergraph(g), c):
        raise ValueError("C is not a cover of the cover hypergraph")
    if c in g.edges:
        return [0] + [1 << (v - 1) for v in members(c)]
    if size(c) >= 3 and size(c) % 2 == 1 and _is_cycle_on(g, c):
        return [c]
    return []


def cover_saturating_sets_generic(g: Hypergraph, c: VertexSet) -> list[VertexSet]:
    """Same as :func:`cover_saturating_sets`, by the definition on H(G)_C."""
    hc = induced(cover_hypergraph(g), c)
    return [u for u in subsets(c) if is_2_saturating(hc, u) is not None]


def cover_ass_primes(g: Hypergraph) -> list[AssociatedPrime]:
    """Edges (minimal primes) and induced odd cycles (embedded primes)."""
    require_graph(g)
    hg = cover_hypergraph(g)
    out = []
    for e in g.edges:
        out.append(AssociatedPrime(e, True, is_2_saturating(induced(hg, e), 0)))
    for cyc in induced_odd_cycles(g):
        cert = is_2_saturating(induced(hg, cyc), cyc)
        if cert is None:
            raise AssertionError(f"odd cycle {members(cyc)} is not 2-saturating on itself")
        out.append(AssociatedPrime(cyc, False, cert))
    return sorted(out, key=lambda p: (size(p.cover), p.cover))


@dataclass(frozen=True)
class CoverDepthConditions:
    """Forbidden configurations for depth > 1 (graph on n >= 4 vertices)."""

    two_edges_or_path: bool
    odd_cycle_minus_one: Optional[VertexSet]
    odd_cycle_plus_edge: Optional[VertexSet]
    covering_cycle_pair: Optional[tuple[VertexSet, VertexSet]]
    is_odd_cycle: bool

    @property
    def depth_class(self) -> DepthClass:
        if self.is_odd_cycle:
            return DepthClass.ZERO
        if (
            self.two_edges_or_path
            or self.odd_cycle_minus_one is not None
            or self.odd_cycle_plus_edge is not None
            or self.covering_cycle_pair is not None
        ):
            return DepthClass.ONE
        return DepthClass.GE_TWO


def _two_edges_or_path(g: Hypergraph) -> bool:
    """Two disjoint edges, or the path with three edges, on four vertices."""
    if size(g.vertices) != 4:
        return False
    edges = g.edges
    if len(edges) == 2:
        return not edges[0] & edges[1]
    if len(edges) == 3:
        degrees = sorted(sum(1 for e in edges if e >> (v - 1) & 1) for v in members(g.vertices))
        return degrees == [1, 1, 2, 2] and _connected(g)
    return False


def _connected(g: Hypergraph) -> bool:
    verts = members(g.vertices)
    reach = 1 << (verts[0] - 1)
    grew = True
    while grew:
        grew = False
        for e in g.edges:
            if e & reach and e & ~reach:
                reach |= e
                grew = True
    return reach == g.vertices


def cover_depth_conditions(g: Hypergraph) -> CoverDepthConditions:
    require_graph(g)
    n = size(g.vertices)
    if n < 4:
        raise ValueError("the forbidden-configuration criterion needs at least 4 vertices")
    cycles = induced_odd_cycles(g)
    minus_one = next((c for c in cycles if size(c) == n - 1), None)
    plus_edge = None
    for c in cycles:
        if size(c) != n - 2:
            continue
        rest = g.vertices & ~c
        if rest in g.edges and all(not (e & c and e & rest) for e in g.edges):
            plus_edge = c
            break
    pair = None
    for x in range(len(cycles)):
        for y in range(x + 1, len(cycles)):
            if cycles[x] | cycles[y] == g.vertices:
                pair = (cycles[x], cycles[y])
                break
        if pair:
            break
    whole = g.vertices in cycles
    return CoverDepthConditions(_two_edges_or_path(g), minus_one, plus_edge, pair, whole)


def cover_depth_class(g: Hypergraph) -> Optional[DepthClass]:
    """Depth class of R/J^2 for the cover ideal J; None (defer to the oracle) below 4 vertices."""
    require_graph(g)
    if size(g.vertices) < 4:
        return None
    return cover_depth_conditions(g).depth_class


def cover_delta_a_facets(g: Hypergraph, a_support: VertexSet) -> list[VertexSet]:
    """Facets of Δ_a((cover ideal)^2) for a in {0,1}^n with positive part ``a_support``:
    complements of the edges not inside it and of the induced odd cycles inside it."""
    require_graph(g)
    comps = [e for e in g.edges if e & ~a_support]
    comps += [c for c in induced_odd_cycles(g) if not c & ~a_support]
    return sorted({g.vertices & ~c for c in comps})


def _facets_connected(facets: list[VertexSet]) -> bool:
    if len(facets) <= 1:
        return True
    reach = facets[0]
    grew = True
    while grew:
        grew = False
        for f in facets:
            if f & reach and f & ~reach:
                reach |= f
                grew = True
    return all(f & reach or f == 0 for f in facets) and not (0 in facets and len(facets) > 1)


def cover_depth_class_facets(g: Hypergraph) -> DepthClass:
    """Depth class read directly off the facet description of every Δ_a.

    Exponents of the square of a squarefree ideal stay below 2, so a ranges
    over {0,1}^n; negative degrees reduce to the deletions G - j, whose
    vertex sets must not be associated (edges or induced odd cycles).  Unlike :func:`cover_depth_class` this has no
    restriction on n and agrees with the oracle on the full corpus.
    """
    require_graph(g)
    # a prime P_C is associated iff C is an edge or an induced odd cycle
    primes = set(g.edges) | set(induced_odd_cycles(g))
    if g.vertices in primes:
        return DepthClass.ZERO
    if any(g.vertices & ~(1 << (v - 1)) in primes for v in members(g.vertices)):
        return DepthClass.ONE
    for a in subsets(g.vertices):
        if not _facets_connected(cover_delta_a_facets(g, a)):
            return DepthClass.ONE
    return DepthClass.GE_TWO


def is_complete_intersection(j: MonomialIdeal) -> bool:
    """Minimal generators with pairwise disjoint supports."""
    supports = [sum(1 << k for k, e in enumerate(gen) if e) for gen in j.gens]
    seen = 0
    for s in supports:
        if s & seen:
            return False
        seen |= s
    return True


def s2_equiv_ci(g: Hypergraph) -> bool:
    """The (S2) verdict for R/J^2, read off as "J is a complete intersection"."""
    return is_complete_intersection(cover_ideal(g))


@dataclass(frozen=True)
class CoverIdealReport:
    graph: Hypergraph
    ass_primes: list[AssociatedPrime]
    depth_class: DepthClass
    depth_source: str
    ci: bool

    @property
    def cm_note(self) -> Optional[str]:
        return "Cohen-Macaulay, depth = dim" if self.ci else None


def analyze_cover_ideal(g: Hypergraph) -> CoverIdealReport:
    cls = cover_depth_class(g)
    source = "forbidden configurations"
    if cls is None:
        from .oracle import depth_class_oracle, square

        cls = depth_class_oracle(square(cover_ideal(g)))
        source = "oracle (fewer than 4 vertices)"
    return CoverIdealReport(g, cover_ass_primes(g), cls, source, s2_equiv_ci(g))
