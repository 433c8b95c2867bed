"""Monomial-ideal ground truth.

Everything here works with exponent vectors and ideal membership only:
colons, saturations, restrictions ``I_F`` (set ``x_i = 1`` for ``i in F``),
Takayama's complexes via their facet description, the H^0/H^1 vanishing
tests and associated primes by colon enumeration.  Nothing in this module
knows about saturating sets, triangles or covers, so it can referee the
combinatorial modules.

Vertex sets are bit masks as in :mod:`powerdepth.hypergraph`; a monomial is
a tuple of ``n`` non-negative exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from .complexes import DepthClass, MultiDegree, SimplicialComplex, is_connected
from .hypergraph import Hypergraph, VertexSet, maximize_sets

Monomial = tuple[int, ...]

MAX_ASS_VARIABLES = 12
_CHUNK = 1 << 15


def _minimalize(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0)
    rows = np.unique(rows, axis=0)
    # divides[i, j]: row i divides row j
    divides = np.all(rows[:, None, :] <= rows[None, :, :], axis=2)
    np.fill_diagonal(divides, False)
    return rows[~divides.any(axis=0)]


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    """A monomial ideal in k[x_1..x_n] kept by its minimal generators.

    An empty generator list is the zero ideal; the zero exponent vector as a
    generator is the unit ideal.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def of(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        rows = np.array([tuple(g) for g in gens], dtype=np.int64).reshape(-1, n)
        if (rows < 0).any():
            raise ValueError("negative exponent in generator")
        return cls._from_array(n, rows)

    @classmethod
    def _from_array(cls, n: int, rows: np.ndarray) -> "MonomialIdeal":
        rows = _minimalize(rows.astype(np.int64))
        gens = tuple(sorted(tuple(int(x) for x in r) for r in rows))
        return cls(n, gens)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int64).reshape(-1, self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialIdeal) and (self.n, self.gens) == (other.n, other.gens)

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __contains__(self, m: Sequence[int]) -> bool:
        return membership(m, self)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @cached_property
    def rho(self) -> tuple[int, ...]:
        """Per-variable maximum exponent over the minimal generators."""
        if self.is_zero:
            return (0,) * self.n
        return tuple(int(x) for x in self.array.max(axis=0))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{j}")
        elif e > 1:
            parts.append(f"x{j}^{e}")
    return "*".join(parts) or "1"


def monomial_of_set(n: int, s: VertexSet, power: int = 1) -> Monomial:
    return tuple(power if s >> j & 1 else 0 for j in range(n))


def edge_ideal(h: Hypergraph) -> MonomialIdeal:
    """Ideal generated by x^F over the edges F."""
    return MonomialIdeal.of(h.n, [monomial_of_set(h.n, e) for e in h.edges])


def prime_ideal(n: int, c: VertexSet) -> MonomialIdeal:
    return MonomialIdeal.of(n, [monomial_of_set(n, 1 << j) for j in range(n) if c >> j & 1])


def membership(m: Sequence[int], j: MonomialIdeal) -> bool:
    if j.is_zero:
        return False
    return bool(np.all(j.array <= np.asarray(m, dtype=np.int64), axis=1).any())


def product(j: MonomialIdeal, k: MonomialIdeal) -> MonomialIdeal:
    if j.n != k.n:
        raise ValueError("ideals live in different rings")
    rows = (j.array[:, None, :] + k.array[None, :, :]).reshape(-1, j.n)
    return MonomialIdeal._from_array(j.n, rows)


def square(j: MonomialIdeal) -> MonomialIdeal:
    return product(j, j)


def colon(j: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """J : m, generated by g / gcd(g, m)."""
    rows = np.maximum(j.array - np.asarray(m, dtype=np.int64), 0)
    return MonomialIdeal._from_array(j.n, rows)


def intersect(j: MonomialIdeal, k: MonomialIdeal) -> MonomialIdeal:
    """J ∩ K by pairwise lcm of generators."""
    rows = np.maximum(j.array[:, None, :], k.array[None, :, :]).reshape(-1, j.n)
    return MonomialIdeal._from_array(j.n, rows)


def restrict(j: MonomialIdeal, f: VertexSet) -> MonomialIdeal:
    """I_F: substitute x_i = 1 for i in F (the coordinates stay, unused)."""
    rows = j.array.copy()
    for col in range(j.n):
        if f >> col & 1:
            rows[:, col] = 0
    return MonomialIdeal._from_array(j.n, rows)


def saturate_variable(j: MonomialIdeal, i: int) -> MonomialIdeal:
    """J : x_i^∞."""
    return restrict(j, 1 << (i - 1))


def saturate_maximal(j: MonomialIdeal) -> MonomialIdeal:
    """J : m^∞ as the intersection of the variable saturations."""
    if j.is_zero:
        return j
    return reduce(intersect, (saturate_variable(j, i) for i in range(1, j.n + 1)))


def _box(bounds: Sequence[int]) -> np.ndarray:
    """All integer vectors with 0 <= a_j <= bounds[j]; empty if some bound < 0."""
    if any(b < 0 for b in bounds):
        return np.zeros((0, len(bounds)), dtype=np.int64)
    grids = np.indices(tuple(b + 1 for b in bounds)).reshape(len(bounds), -1).T
    return grids.astype(np.int64)


def _violation_masks(gens: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    """mask[b, g] = coordinates where generator g exceeds degree b.

    x^{a_F} lies in I_F exactly when some generator's violation set is inside F.
    """
    n = gens.shape[1]
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    viol = gens[None, :, :] > degrees[:, None, :]
    return (viol * weights).sum(axis=2)


def _facet_table(gens: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    """table[b, F] is True iff F is a facet of Δ_a for a = degrees[b] (before removing G_a).

    F qualifies iff F ⊇ G_a, x^{a_F} ∉ I_F and x^{a_F} ∈ I_F : x_i^∞ = I_{F∪i}
    for every i outside F.
    """
    count, n = degrees.shape
    size = 1 << n
    member = np.zeros((count, size), dtype=bool)
    if len(gens):
        vm = _violation_masks(gens, degrees)
        member[np.arange(count)[:, None], vm] = True
    cube = member.reshape((count,) + (2,) * n)
    # bit j of F is axis 1 + (n - 1 - j) in C order
    for axis in range(1, n + 1):
        cube = np.logical_or.accumulate(cube, axis=axis)
    table = ~cube
    for axis in range(1, n + 1):
        upper = np.take(cube, [1], axis=axis)
        table = table & np.concatenate([upper, np.ones_like(upper)], axis=axis)
    table = table.reshape(count, size)
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    neg = ((degrees < 0) * weights).sum(axis=1)
    faces = np.arange(size, dtype=np.int64)
    contains_neg = (faces[None, :] & neg[:, None]) == neg[:, None]
    return table & contains_neg


def takayama_delta_a(j: MonomialIdeal, a: MultiDegree | Sequence[int]) -> SimplicialComplex:
    """Δ_a(J) from its facets {F \\ G_a : F ⊇ G_a, x^{a_F} ∈ sat(J_F) \\ J_F}."""
    a = a if isinstance(a, MultiDegree) else MultiDegree.of(a)
    if a.n != j.n:
        raise ValueError("degree length does not match the ring")
    rho = j.rho
    if any(x >= r for x, r in zip(a.a, rho)):
        raise ValueError("degree outside the range a_j < rho_j(J)")
    row = np.array([a.a], dtype=np.int64)
    table = _facet_table(j.array, row)[0]
    neg = a.negative_support
    faces = [int(f) & ~neg for f in np.flatnonzero(table)]
    return SimplicialComplex.from_faces(j.n, faces)


def _has_saturation_excess(j: MonomialIdeal, degrees: np.ndarray, variables: Optional[VertexSet] = None) -> bool:
    """Whether some degree b has x^b ∉ J but x^b ∈ J : x_i^∞ for every i in ``variables``."""
    if j.is_zero or len(degrees) == 0:
        return False
    n = j.n
    if variables is None:
        variables = (1 << n) - 1
    for start in range(0, len(degrees), _CHUNK):
        vm = _violation_masks(j.array, degrees[start:start + _CHUNK])
        outside = ~(vm == 0).any(axis=1)
        inside_all = np.ones(len(vm), dtype=bool)
        for i in range(n):
            if variables >> i & 1:
                inside_all &= ((vm & ~(1 << i)) == 0).any(axis=1)
        if (outside & inside_all).any():
            return True
    return False


def h0_vanishes(j: MonomialIdeal, variables: Optional[VertexSet] = None) -> bool:
    """H^0_m(R/J) = sat(J)/J vanishes.

    ``variables`` restricts the ring (and its maximal ideal) to those
    variables; J must not involve the others.  Membership in J and in each
    J : x_i^∞ only sees exponents up to rho_j, so sat(J) = J can be decided
    on the box 0 <= b_j <= rho_j.
    """
    if variables is not None and any(r and not variables >> k & 1 for k, r in enumerate(j.rho)):
        raise ValueError("the ideal involves a variable outside the ring")
    return not _has_saturation_excess(j, _box(j.rho), variables)


def h1_vanishes(j: MonomialIdeal) -> bool:
    """H^1_m(R/J) = 0: Δ_a connected for a in the box a_j < rho_j, and R_j/J_j of positive depth."""
    everything = (1 << j.n) - 1
    for var in range(1, j.n + 1):
        # J_j lives in the ring without x_j, so x_j takes no part in its saturation
        drop = 1 << (var - 1)
        if not h0_vanishes(restrict(j, drop), everything & ~drop):
            return False
    degrees = _box([r - 1 for r in j.rho])
    for start in range(0, len(degrees), _CHUNK):
        chunk = degrees[start:start + _CHUNK]
        table = _facet_table(j.array, chunk)
        for row in table:
            facets = [int(f) for f in np.flatnonzero(row)]
            if len(facets) > 1 and not is_connected(SimplicialComplex(j.n, tuple(maximize_sets(facets)))):
                return False
    return True


def depth_class_oracle(j: MonomialIdeal) -> DepthClass:
    if not h0_vanishes(j):
        return DepthClass.ZERO
    if not h1_vanishes(j):
        return DepthClass.ONE
    return DepthClass.GE_TWO


def ass_primes_oracle(j: MonomialIdeal) -> list[VertexSet]:
    """Supports C with J : m = P_C for some monomial m below the lcm of the generators."""
    if j.is_zero:
        raise ValueError("the zero ideal has no associated primes to enumerate")
    if j.n > MAX_ASS_VARIABLES:
        raise ValueError(f"colon enumeration is limited to {MAX_ASS_VARIABLES} variables")
    n = j.n
    weights = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    found: set[int] = set()
    box = _box(j.rho)
    gens = j.array
    for start in range(0, len(box), _CHUNK // max(1, len(gens))):
        m = box[start:start + _CHUNK // max(1, len(gens))]
        quo = np.maximum(gens[None, :, :] - m[:, None, :], 0)
        degree = quo.sum(axis=2)
        support = ((quo > 0) * weights).sum(axis=2)
        unit = degree == 1
        prime_support = np.where(unit, support, 0)
        c = np.bitwise_or.reduce(prime_support, axis=1)
        not_member = (degree > 0).all(axis=1)
        every_meets = ((support & c[:, None]) != 0).all(axis=1)
        for cm in np.unique(c[not_member & every_meets]):
            found.add(int(cm))
    return sorted(found, key=lambda s: (bin(s).count("1"), s))


def is_prime_monomial(j: MonomialIdeal) -> Optional[VertexSet]:
    """The support C if J = P_C, else None."""
    c = 0
    for g in j.gens:
        if sum(g) != 1:
            return None
        c |= 1 << g.index(1)
    return c if j.gens else None
