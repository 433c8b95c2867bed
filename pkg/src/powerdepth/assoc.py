"""Associated primes of I(H)^2 and the test I^(2) = I^2.

P_C is associated to I^2 exactly when the induced subhypergraph H_C has a
2-saturating set.  Three routes compute the set of such covers:

* ``ass_primes_general(h, method="enumerate")`` scans every subset C;
* ``method="guided"`` takes the minimal covers directly and, for the other
  covers, looks for a loosely intersecting U that no smaller cover keeps
  loosely intersecting;
* ``ass_primes_graph`` (graphs only) adds to the minimal covers the covers
  minimal over the neighbourhood of a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hypergraph import (
    Hypergraph,
    VertexSet,
    bit,
    induced,
    is_cover,
    members,
    minimal_covers,
    neighborhood,
    require_graph,
    section,
    size,
    subsets,
    subsets_by_size,
    triangles,
)
from .saturating import (
    SaturatingCertificate,
    SpecialTriangle,
    find_2_saturating_set,
    is_2_saturating,
    is_decomposable,
    is_loosely_intersecting,
    special_triangles,
)


@dataclass(frozen=True)
class AssociatedPrime:
    cover: VertexSet
    minimal: bool
    certificate: SaturatingCertificate
    origin_triangles: tuple[VertexSet, ...] = ()

    @property
    def saturating_set(self) -> VertexSet:
        return self.certificate.u


def _order(primes: list[AssociatedPrime]) -> list[AssociatedPrime]:
    return sorted(primes, key=lambda p: (size(p.cover), p.cover))


def _enumerate(h: Hypergraph) -> list[AssociatedPrime]:
    mins = set(minimal_covers(h))
    out = []
    for c in subsets(h.vertices):
        if not is_cover(h, c):
            continue
        cert = find_2_saturating_set(induced(h, c))
        if cert is not None:
            out.append(AssociatedPrime(c, c in mins, cert))
    return out


def _loosely_intersecting_in(h: Hypergraph, d: VertexSet, u: VertexSet) -> bool:
    return is_loosely_intersecting(section(induced(h, d), u))


def _guided(h: Hypergraph) -> list[AssociatedPrime]:
    mins = minimal_covers(h)
    out = [AssociatedPrime(c, True, is_2_saturating(induced(h, c), 0)) for c in mins]
    min_set = set(mins)
    for c in subsets(h.vertices):
        if c in min_set or not is_cover(h, c):
            continue
        for u in subsets_by_size(c):
            if size(u) < 3 or not _loosely_intersecting_in(h, c, u):
                continue
            # C must be minimal among covers keeping U loosely intersecting;
            # dropping single removable vertices outside U is enough to test it.
            removable = [i for i in members(c & ~u) if is_cover(h, c & ~bit(i))]
            if any(_loosely_intersecting_in(h, c & ~bit(i), u) for i in removable):
                continue
            cert = is_2_saturating(induced(h, c), u)
            if cert is None:
                raise AssertionError(
                    f"minimality test accepted U={members(u)} for C={members(c)} but the definition rejects it"
                )
            out.append(AssociatedPrime(c, False, cert))
            break
    return out


def ass_primes_general(h: Hypergraph, method: str = "enumerate") -> list[AssociatedPrime]:
    """All covers C with P_C associated to I(H)^2, ordered by size then bits."""
    if method == "enumerate":
        return _order(_enumerate(h))
    if method == "guided":
        return _order(_guided(h))
    raise ValueError(f"unknown method {method!r}")


def covers_minimal_over(g: Hypergraph, base: VertexSet) -> list[VertexSet]:
    """Covers of G containing ``base`` and minimal with that property."""
    rest = [e for e in g.edges if not e & base]
    if not rest:
        return [base]
    sub = Hypergraph.derived(g.n, rest, g.vertices & ~base)
    return [base | c for c in minimal_covers(sub)]


def ass_primes_graph(g: Hypergraph) -> list[AssociatedPrime]:
    """Minimal covers, plus covers minimal among those containing N(T) for a triangle T."""
    require_graph(g)
    mins = minimal_covers(g)
    out = [AssociatedPrime(c, True, is_2_saturating(induced(g, c), 0)) for c in mins]
    origins: dict[VertexSet, list[VertexSet]] = {}
    for t in triangles(g):
        for c in covers_minimal_over(g, neighborhood(g, t)):
            origins.setdefault(c, []).append(t)
    for c, tris in origins.items():
        cert = is_2_saturating(induced(g, c), tris[0])
        if cert is None:
            raise AssertionError(f"triangle {members(tris[0])} is not 2-saturating on {members(c)}")
        out.append(AssociatedPrime(c, False, cert, tuple(tris)))
    return _order(out)


def embedded_witness_triangle(h: Hypergraph, prime: AssociatedPrime) -> Optional[SpecialTriangle]:
    """A special triangle of H|_U missing C in its common part, with (F1∪F2∪F3)∩C indecomposable in H_C."""
    c = prime.cover
    u = prime.saturating_set
    hc = induced(h, c)
    for st in special_triangles(h):
        if st.union & c & ~u:
            continue
        if st.intersection & c:
            continue
        if not is_decomposable(hc, st.union & c):
            return st
    return None


@dataclass(frozen=True)
class SymbolicVerdict:
    equal: bool
    witness: Optional[SpecialTriangle]


def symbolic_equals_square(h: Hypergraph) -> SymbolicVerdict:
    """I^(2) = I^2 unless some special triangle has (F1∪F2∪F3) ∩ D indecomposable in H_D,
    where D is the complement of F1∩F2∩F3."""
    for st in special_triangles(h):
        d = h.vertices & ~st.intersection
        if not is_decomposable(induced(h, d), st.union & d):
            return SymbolicVerdict(False, st)
    return SymbolicVerdict(True, None)


def in_second_power(h: Hypergraph, once: VertexSet, twice: VertexSet) -> bool:
    """Whether x^once * x^twice (twice ⊆ once) lies in I(H)^2.

    A product x^E x^G divides it iff E ∪ G ⊆ once and E ∩ G ⊆ twice.
    """
    edges = h.edges
    for a in range(len(edges)):
        e = edges[a]
        if e & ~once:
            continue
        for b in range(a, len(edges)):
            f = edges[b]
            if f & ~once or e & f & ~twice:
                continue
            return True
    return False


def symbolic_equals_square_monomial_form(h: Hypergraph) -> bool:
    """I^(2) = I^2 unless x^{F1∪F2∪F3} x^{F1∩F2∩F3} ∉ I^2 for some special triangle."""
    return all(in_second_power(h, st.union, st.intersection) for st in special_triangles(h))
