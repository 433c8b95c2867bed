"""2-saturating sets and the positive-depth test for R/I^2.

A set U is 2-saturating in H when it is indecomposable in H while U \\ i is
decomposable in H(i) for every vertex i of H.  Two independent deciders are
kept side by side: the literal definition (which also produces a replayable
certificate) and the section/link characterisation, which only looks at the
section H|_U and at links of outside vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from .hypergraph import (
    Hypergraph,
    VertexSet,
    bit,
    contract,
    link,
    members,
    neighborhood,
    require_graph,
    section,
    size,
    subsets_by_size,
    triangles,
)


class CertificateKind(str, Enum):
    EMPTY_OR_VERTEX = "EMPTY_OR_VERTEX"
    DOMINATING_TRIANGLE = "DOMINATING_TRIANGLE"
    GENERAL = "GENERAL"


@dataclass(frozen=True)
class SaturatingCertificate:
    """U together with, for each vertex i, two disjoint edges of H(i) inside U \\ i."""

    hypergraph: Hypergraph
    u: VertexSet
    kind: CertificateKind
    witnesses: dict[int, tuple[VertexSet, VertexSet]] = field(compare=False)

    def verify(self) -> bool:
        h = self.hypergraph
        if is_decomposable(h, self.u):
            return False
        for i in members(h.vertices):
            pair = self.witnesses.get(i)
            if pair is None:
                return False
            f, g = pair
            edges = set(contract(h, i).edges)
            rest = self.u & ~bit(i)
            if f not in edges or g not in edges:
                return False
            if f & ~rest or g & ~rest or f & g:
                return False
            if f == g and f != 0:
                return False
        return True


@dataclass(frozen=True)
class SpecialTriangle:
    f1: VertexSet
    f2: VertexSet
    f3: VertexSet
    v1: int
    v2: int
    v3: int

    @property
    def intersection(self) -> VertexSet:
        return self.f1 & self.f2 & self.f3

    @property
    def union(self) -> VertexSet:
        return self.f1 | self.f2 | self.f3

    @property
    def empty_intersection(self) -> bool:
        return self.intersection == 0


def decomposition(h: Hypergraph, u: VertexSet) -> Optional[tuple[VertexSet, VertexSet]]:
    """Two disjoint edges inside U (the empty edge pairs with itself), if any."""
    if 0 in h.edges:
        return (0, 0)
    inside = [e for e in h.edges if e & ~u == 0]
    for a in range(len(inside)):
        ea = inside[a]
        for b in range(a + 1, len(inside)):
            if not ea & inside[b]:
                return (ea, inside[b])
    return None


def is_decomposable(h: Hypergraph, u: VertexSet) -> bool:
    return decomposition(h, u) is not None


def is_intersecting(h: Hypergraph) -> bool:
    if 0 in h.edges:
        return False
    edges = h.edges
    return all(edges[a] & edges[b] for a in range(len(edges)) for b in range(a + 1, len(edges)))


def is_loosely_intersecting(h: Hypergraph) -> bool:
    """Intersecting, and the link of every vertex of H is not intersecting.

    The quantifier runs over the vertex set of H, so a section H|_U whose
    vertex set U has a vertex outside every edge is not loosely intersecting
    (that vertex has an empty, hence intersecting, link).
    """
    if not is_intersecting(h):
        return False
    return all(not is_intersecting(link(h, i)) for i in members(h.vertices))


def _kind(h: Hypergraph, u: VertexSet) -> CertificateKind:
    if size(u) <= 1:
        return CertificateKind.EMPTY_OR_VERTEX
    if h.is_graph and size(u) == 3 and all(e in h.edges for e in _pairs(u)):
        return CertificateKind.DOMINATING_TRIANGLE
    return CertificateKind.GENERAL


def _pairs(u: VertexSet) -> list[VertexSet]:
    return [bit(a) | bit(b) for a, b in combinations(members(u), 2)]


def is_2_saturating(h: Hypergraph, u: VertexSet) -> Optional[SaturatingCertificate]:
    """Literal definition; returns the certificate or None."""
    if u & ~h.vertices or is_decomposable(h, u):
        return None
    witnesses = {}
    for i in members(h.vertices):
        pair = decomposition(contract(h, i), u & ~bit(i))
        if pair is None:
            return None
        witnesses[i] = pair
    return SaturatingCertificate(h, u, _kind(h, u), witnesses)


def satisfies_saturating_characterization(h: Hypergraph, u: VertexSet) -> bool:
    """Section/link test: H|_U loosely intersecting, and every non-isolated
    vertex i outside U has a link section with two disjoint edges or an edge
    disjoint from an edge of H|_U."""
    if u & ~h.vertices:
        return False
    sec = section(h, u)
    if not is_loosely_intersecting(sec):
        return False
    isolated = h.isolated()
    for i in members(h.vertices & ~u & ~isolated):
        lk = [e for e in link(h, i).edges if e & ~u == 0]
        ok = any(not lk[a] & lk[b] for a in range(len(lk)) for b in range(a + 1, len(lk)))
        if not ok:
            ok = any(not f & g for f in lk for g in sec.edges)
        if not ok:
            return False
    return True


def _candidate(h: Hypergraph, u: VertexSet) -> bool:
    # every vertex of a loosely intersecting section lies in one of its edges
    inside = [e for e in h.edges if e & ~u == 0]
    cover = 0
    for e in inside:
        cover |= e
    return cover == u


def find_2_saturating_set(h: Hypergraph) -> Optional[SaturatingCertificate]:
    """First 2-saturating set by increasing size, then bit order."""
    if 0 in h.edges:
        return None
    if h.vertices & ~h.isolated() == 0:
        return is_2_saturating(h, 0)
    if h.is_graph:
        t = has_dominating_triangle(h)
        return is_2_saturating(h, t) if t is not None else None
    for u in subsets_by_size(h.vertices):
        if size(u) < 3 or not _candidate(h, u):
            continue
        if satisfies_saturating_characterization(h, u):
            cert = is_2_saturating(h, u)
            if cert is None:
                raise AssertionError(f"characterisation and definition disagree on {members(u)}")
            return cert
    return None


def find_2_saturating_set_exhaustive(h: Hypergraph) -> Optional[SaturatingCertificate]:
    """Same contract as :func:`find_2_saturating_set`, by the definition over all U."""
    for u in subsets_by_size(h.vertices):
        cert = is_2_saturating(h, u)
        if cert is not None:
            return cert
    return None


def special_triangles(h: Hypergraph, require_empty_intersection: bool = False) -> list[SpecialTriangle]:
    """Unordered triples of distinct edges with the three private pairwise witnesses.

    Edges are listed in increasing bit order; the witnesses are the smallest
    vertices of F1∩F2\\F3, F2∩F3\\F1 and F1∩F3\\F2.
    """
    out = []
    for f1, f2, f3 in combinations(sorted(h.edges), 3):
        w1 = f1 & f2 & ~f3
        w2 = f2 & f3 & ~f1
        w3 = f1 & f3 & ~f2
        if not (w1 and w2 and w3):
            continue
        if require_empty_intersection and f1 & f2 & f3:
            continue
        out.append(SpecialTriangle(f1, f2, f3, members(w1)[0], members(w2)[0], members(w3)[0]))
    return out


def dominating_triangles(g: Hypergraph) -> list[VertexSet]:
    require_graph(g)
    return [t for t in triangles(g) if neighborhood(g, t) == g.vertices]


def has_dominating_triangle(g: Hypergraph) -> Optional[VertexSet]:
    """A triangle whose vertices are adjacent to every vertex of the graph."""
    found = dominating_triangles(g)
    return found[0] if found else None


@dataclass(frozen=True)
class PositiveDepthVerdict:
    positive: bool
    certificate: Optional[SaturatingCertificate]


def depth_positive_second_power(h: Hypergraph) -> PositiveDepthVerdict:
    """depth R/I(H)^2 > 0 iff H has no 2-saturating set.

    For graphs the dominating-triangle scan and the generic search are both run
    and must agree.
    """
    if h.is_graph and h.edges:
        tri = has_dominating_triangle(h)
        generic = None
        for u in subsets_by_size(h.vertices):
            if size(u) >= 3 and _candidate(h, u) and satisfies_saturating_characterization(h, u):
                generic = u
                break
        if (tri is None) != (generic is None):
            raise AssertionError("dominating-triangle scan disagrees with the generic search")
        cert = is_2_saturating(h, tri) if tri is not None else None
        return PositiveDepthVerdict(cert is None, cert)
    cert = find_2_saturating_set(h)
    return PositiveDepthVerdict(cert is None, cert)

