"""Simplicial complexes given by facets, and multidegrees."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .hypergraph import VertexSet, format_set, maximize_sets, members


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on 1..n stored by its facets.

    ``facets == ()`` is the void complex; ``facets == (0,)`` is ``{∅}``.
    """

    n: int
    facets: tuple[VertexSet, ...]

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[VertexSet]) -> "SimplicialComplex":
        return cls(n, tuple(maximize_sets(faces)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_face_only(self) -> bool:
        return self.facets == (0,)

    @property
    def vertices(self) -> VertexSet:
        s = 0
        for f in self.facets:
            s |= f
        return s

    def contains(self, face: VertexSet) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def star(self, i: int) -> "SimplicialComplex":
        b = 1 << (i - 1)
        return SimplicialComplex.from_faces(self.n, [f for f in self.facets if f & b] or [0])

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_faces(self.n, self.facets + other.facets)

    def induced(self, u: VertexSet) -> "SimplicialComplex":
        """Induced subcomplex on U (always contains the empty face)."""
        return SimplicialComplex.from_faces(self.n, [f & u for f in self.facets] or [0])

    def one_skeleton_edges(self) -> set[VertexSet]:
        out = set()
        for f in self.facets:
            vs = members(f)
            for a in range(len(vs)):
                for b in range(a + 1, len(vs)):
                    out.add((1 << (vs[a] - 1)) | (1 << (vs[b] - 1)))
        return out

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return "<" + " ".join(format_set(f) for f in self.facets) + ">"


def is_connected(k: SimplicialComplex) -> bool:
    """Facet components by shared vertices; void and {∅} count as connected."""
    facets = [f for f in k.facets if f]
    if len(facets) <= 1:
        return True
    component = facets[0]
    rest = facets[1:]
    grew = True
    while grew and rest:
        grew = False
        keep = []
        for f in rest:
            if f & component:
                component |= f
                grew = True
            else:
                keep.append(f)
        rest = keep
    return not rest


@dataclass(frozen=True)
class MultiDegree:
    a: tuple[int, ...]

    @classmethod
    def of(cls, a: Sequence[int]) -> "MultiDegree":
        return cls(tuple(int(x) for x in a))

    @classmethod
    def from_support(cls, n: int, positive: VertexSet) -> "MultiDegree":
        return cls(tuple(1 if positive >> j & 1 else 0 for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def negative_support(self) -> VertexSet:
        return sum(1 << j for j, x in enumerate(self.a) if x < 0)

    @property
    def positive_support(self) -> VertexSet:
        return sum(1 << j for j, x in enumerate(self.a) if x > 0)

    @property
    def is_squarefree(self) -> bool:
        return all(x in (0, 1) for x in self.a)

    def zeroed(self, f: VertexSet) -> tuple[int, ...]:
        """The vector with every coordinate in F set to 0."""
        return tuple(0 if f >> j & 1 else x for j, x in enumerate(self.a))

    def positive_part(self) -> tuple[int, ...]:
        return tuple(max(x, 0) for x in self.a)


class DepthClass(str, Enum):
    """Depth of R/J resolved up to 2."""

    ZERO = "ZERO"
    ONE = "ONE"
    GE_TWO = "GE_TWO"
