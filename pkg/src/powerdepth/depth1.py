"""Depth R/I^2 > 1: the complexes Δ_a(I^2), the skeleton diameter test and
the exact criterion for graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complexes import DepthClass, MultiDegree, SimplicialComplex, is_connected
from .hypergraph import (
    Hypergraph,
    VertexSet,
    bit,
    complement_graph,
    graph_diameter,
    induced,
    is_cover,
    members,
    minimal_covers,
    minimize_sets,
    neighborhood,
    require_graph,
    size,
    subsets,
    triangles,
)
from .saturating import (
    SaturatingCertificate,
    dominating_triangles,
    find_2_saturating_set,
    is_2_saturating,
)

__all__ = [
    "DepthClass",
    "GraphDepthConditions",
    "HypergraphDepthReport",
    "MultiDegree",
    "SimplicialComplex",
    "delta_a_combinatorial",
    "depth_class_graph",
    "depth_ge_2_bipartite",
    "depth_ge_2_bipartite_edgewise",
    "depth_ge_2_graph",
    "graph_depth_conditions",
    "hypergraph_depth_report",
    "independence_complex",
    "is_connected",
    "skeleton_diameter_ok",
    "skeleton_graph",
]


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Facets are the complements of the minimal covers."""
    return SimplicialComplex.from_faces(h.n, [h.vertices & ~c for c in minimal_covers(h)])


def delta_a_combinatorial(h: Hypergraph, a: MultiDegree | Sequence[int]) -> SimplicialComplex:
    """Δ_a(I^2) for a in {0,1}^n: F is a facet iff H_a ∩ (V∖F) is 2-saturating in H_{V∖F}."""
    a = a if isinstance(a, MultiDegree) else MultiDegree.of(a)
    if not a.is_squarefree:
        raise ValueError("only degrees in {0,1}^n are handled combinatorially")
    pos = a.positive_support
    faces = []
    for c in subsets(h.vertices):
        if is_cover(h, c) and is_2_saturating(induced(h, c), pos & c) is not None:
            faces.append(h.vertices & ~c)
    return SimplicialComplex.from_faces(h.n, faces)


def skeleton_graph(h: Hypergraph) -> Hypergraph:
    """The 1-skeleton of the independence complex, as a graph on the non-isolated vertices."""
    verts = h.vertices & ~h.isolated()
    edges = []
    vs = members(verts)
    present = set(minimize_sets(h.edges))
    for x in range(len(vs)):
        for y in range(x + 1, len(vs)):
            pair = bit(vs[x]) | bit(vs[y])
            if pair not in present:
                edges.append(pair)
    return Hypergraph.derived(h.n, edges, verts)


def _edge_form(h: Hypergraph) -> bool:
    # every minimal 2-edge {i,j} needs a non-isolated h outside it with {i,h}, {j,h} non-edges
    present = set(minimize_sets(h.edges))
    candidates = h.vertices & ~h.isolated()
    for e in present:
        if size(e) != 2:
            continue
        i, j = members(e)
        if not any(
            (bit(i) | bit(k)) not in present and (bit(j) | bit(k)) not in present
            for k in members(candidates & ~e)
        ):
            return False
    return True


def skeleton_diameter_ok(h: Hypergraph) -> bool:
    """diam Δ^(1) <= 2, computed on the skeleton and by the edge/non-edge reformulation.

    Only the minimal edges matter: the independence complex depends on the ideal alone.
    """
    skel = skeleton_graph(h)
    direct = skel.vertices == 0 or graph_diameter(skel) <= 2
    edgewise = _edge_form(h)
    if h.is_graph and direct != edgewise:
        raise AssertionError("skeleton diameter and its edge reformulation disagree")
    return direct and edgewise


@dataclass(frozen=True)
class GraphDepthConditions:
    """Ingredients of the depth > 1 criterion for the edge ideal of a graph."""

    dominating_triangle: Optional[VertexSet]
    complement_diameter: float
    bad_triangles: tuple[VertexSet, ...] = field(default=())

    @property
    def diameter_ok(self) -> bool:
        return self.complement_diameter <= 2

    @property
    def triangles_ok(self) -> bool:
        return not self.bad_triangles

    @property
    def depth_ge_2(self) -> bool:
        return self.dominating_triangle is None and self.diameter_ok and self.triangles_ok

    @property
    def depth_class(self) -> DepthClass:
        if self.dominating_triangle is not None:
            return DepthClass.ZERO
        return DepthClass.GE_TWO if self.depth_ge_2 else DepthClass.ONE


def graph_depth_conditions(g: Hypergraph) -> GraphDepthConditions:
    require_graph(g)
    comp = complement_graph(g)
    doms = dominating_triangles(g)
    bad = []
    for t in triangles(g):
        outside = g.vertices & ~neighborhood(g, t)
        if size(outside) < 2 or graph_diameter(comp, outside) == math.inf:
            bad.append(t)
    return GraphDepthConditions(doms[0] if doms else None, graph_diameter(comp), tuple(bad))


def depth_ge_2_graph(g: Hypergraph) -> bool:
    return graph_depth_conditions(g).depth_ge_2


def depth_class_graph(g: Hypergraph) -> DepthClass:
    return graph_depth_conditions(g).depth_class


def _check_bipartition(g: Hypergraph, left: VertexSet, right: VertexSet) -> None:
    require_graph(g)
    if left & right or (left | right) != g.vertices:
        raise ValueError("not a partition of the vertex set")
    for e in g.edges:
        if not (e & left and e & right):
            raise ValueError("an edge lies inside one side")


def depth_ge_2_bipartite(g: Hypergraph, left: VertexSet, right: VertexSet) -> bool:
    """No vertex on one side is adjacent to the whole other side."""
    _check_bipartition(g, left, right)
    for side, other in ((left, right), (right, left)):
        for v in members(side):
            if neighborhood(g, bit(v)) == other:
                return False
    return True


def depth_ge_2_bipartite_edgewise(g: Hypergraph, left: VertexSet, right: VertexSet) -> bool:
    """No edge {i, j} with N(i) the whole right side and N(j) the whole left side.

    The complement of a bipartite graph is two cliques, so its diameter
    exceeds 2 exactly for such an edge; a single vertex seeing the whole other
    side is not enough (the path on five vertices has one and depth >= 2).
    """
    _check_bipartition(g, left, right)
    for e in g.edges:
        i, j = members(e)
        if not left >> (i - 1) & 1:
            i, j = j, i
        if neighborhood(g, bit(i)) == right and neighborhood(g, bit(j)) == left:
            return False
    return True


@dataclass(frozen=True)
class HypergraphDepthReport:
    depth_zero: bool
    certificate: Optional[SaturatingCertificate]
    diameter_ok: bool
    oracle_class: Optional[DepthClass] = None

    @property
    def depth_class(self) -> Optional[DepthClass]:
        """ZERO when decided combinatorially, otherwise whatever the oracle found."""
        if self.depth_zero:
            return DepthClass.ZERO
        return self.oracle_class


def hypergraph_depth_report(h: Hypergraph, use_oracle: bool = True) -> HypergraphDepthReport:
    """Positive depth is decided exactly; beyond that only the necessary
    diameter condition is available, so the exact class comes from the oracle."""
    cert = find_2_saturating_set(h)
    oracle_class = None
    if use_oracle:
        from .oracle import depth_class_oracle, edge_ideal, square

        oracle_class = depth_class_oracle(square(edge_ideal(h)))
    return HypergraphDepthReport(cert is not None, cert, skeleton_diameter_ok(h), oracle_class)
