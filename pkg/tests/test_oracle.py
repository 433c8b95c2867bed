import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerdepth.complexes import DepthClass, MultiDegree, is_connected
from powerdepth.corpus import NAMED, cycle
from powerdepth.coverideal import cover_ideal
from powerdepth.hypergraph import graph, minimal_covers, vset
from powerdepth.oracle import (
    MonomialIdeal,
    ass_primes_oracle,
    colon,
    depth_class_oracle,
    edge_ideal,
    h0_vanishes,
    h1_vanishes,
    intersect,
    membership,
    product,
    restrict,
    saturate_maximal,
    saturate_variable,
    square,
    takayama_delta_a,
)

from .conftest import hypergraphs

TRI = edge_ideal(NAMED["triangle"])
TRI2 = square(TRI)


def ideal(n, *gens):
    return MonomialIdeal.of(n, gens)


def test_membership():
    assert membership((1, 1), ideal(2, (1, 0)))
    assert not membership((0, 0), ideal(2, (1, 0)))
    assert not membership((1, 1, 1), TRI2)


def test_products():
    assert product(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))
    expected = ideal(3, (2, 2, 0), (2, 0, 2), (0, 2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2))
    assert TRI2 == expected
    assert square(ideal(2, (1, 1))) == ideal(2, (2, 2))


def test_colon():
    assert colon(ideal(2, (1, 1)), (1, 0)) == ideal(2, (0, 1))
    assert colon(TRI2, (1, 1, 1)) == ideal(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert colon(TRI2, (0, 0, 0)) == TRI2


def test_saturation():
    j = ideal(2, (1, 1))
    assert saturate_maximal(j) == j
    assert membership((1, 1, 1), saturate_maximal(TRI2))
    assert saturate_variable(ideal(1, (2,)), 1).is_unit


def test_restrict():
    assert restrict(ideal(2, (1, 1)), vset([1])) == ideal(2, (0, 1))
    assert restrict(TRI2, vset([1])) == ideal(3, (0, 2, 0), (0, 0, 2), (0, 1, 1))
    assert restrict(TRI2, 0) == TRI2


def test_takayama():
    d0 = takayama_delta_a(TRI2, (0, 0, 0))
    assert sorted(d0.facets) == [vset([1]), vset([2]), vset([3])]
    assert takayama_delta_a(TRI2, (1, 1, 1)).is_empty_face_only
    with pytest.raises(ValueError):
        takayama_delta_a(TRI2, (2, 0, 0))


def test_h0_h1_and_class():
    assert not h0_vanishes(TRI2)
    assert h0_vanishes(square(edge_ideal(cycle(4))))
    assert h0_vanishes(ideal(2, (1, 1)))
    assert h1_vanishes(square(edge_ideal(cycle(6))))
    assert not h1_vanishes(square(edge_ideal(NAMED["triangle-path3"])))
    assert depth_class_oracle(TRI2) is DepthClass.ZERO
    assert depth_class_oracle(square(edge_ideal(NAMED["triangle-path3"]))) is DepthClass.ONE
    assert depth_class_oracle(square(cover_ideal(cycle(4)))) is DepthClass.GE_TWO


def test_localization_uses_smaller_ring():
    # setting x4 = 1 leaves (x5) + I(triangle + 16); the triangle then dominates in k[x1,x2,x3,x5,x6]
    g = graph(6, [(1, 2), (1, 3), (2, 3), (2, 5), (4, 5), (1, 6)])
    local = restrict(square(edge_ideal(g)), vset([4]))
    assert h0_vanishes(local)
    assert not h0_vanishes(local, 63 & ~vset([4]))
    assert depth_class_oracle(square(edge_ideal(g))) is DepthClass.ONE
    with pytest.raises(ValueError):
        h0_vanishes(TRI2, vset([1, 2]))


def test_ass_primes():
    assert ass_primes_oracle(TRI2) == [vset([1, 2]), vset([1, 3]), vset([2, 3]), 7]
    assert ass_primes_oracle(ideal(2, (1, 1))) == [1, 2]
    c5 = cover_ideal(cycle(5))
    assert ass_primes_oracle(square(c5)) == sorted(
        [vset([i, i % 5 + 1]) for i in range(1, 6)], key=lambda c: (bin(c).count("1"), c)
    ) + [31]


def _box(n, top):
    return itertools.product(range(top + 1), repeat=n)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=4), hypergraphs(max_n=4))
def test_intersection_by_membership(h, k):
    n = max(h.n, k.n)
    a = MonomialIdeal.of(n, [tuple(g) + (0,) * (n - h.n) for g in edge_ideal(h).gens])
    b = MonomialIdeal.of(n, [tuple(g) + (0,) * (n - k.n) for g in edge_ideal(k).gens])
    both = intersect(a, b)
    for m in _box(n, 2):
        assert membership(m, both) == (membership(m, a) and membership(m, b))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=5), st.data())
def test_colon_and_saturation_algebra(h, data):
    j = square(edge_ideal(h))
    sat = saturate_maximal(j)
    assert saturate_maximal(sat) == sat
    m = tuple(data.draw(st.lists(st.integers(0, 2), min_size=h.n, max_size=h.n)))
    quotient = colon(j, m)
    for g in j.gens:
        assert membership(g, quotient)
        assert membership(tuple(np.add(g, m)), j)


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_n=5))
def test_minimal_ass_are_minimal_covers(h):
    found = ass_primes_oracle(square(edge_ideal(h)))
    minimal = [c for c in found if not any(d != c and d & c == d for d in found)]
    assert sorted(minimal) == sorted(minimal_covers(h))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=5))
def test_h0_by_box_matches_saturation(h):
    j = square(edge_ideal(h))
    assert h0_vanishes(j) == (saturate_maximal(j) == j)


def test_empty_face_only_needs_connected_convention():
    assert is_connected(takayama_delta_a(TRI2, MultiDegree.of((1, 1, 1))))
