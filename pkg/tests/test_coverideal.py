import itertools

from hypothesis import given, settings

from powerdepth.complexes import DepthClass
from powerdepth.corpus import NAMED, complete_bipartite, cycle, path
from powerdepth.coverideal import (
    analyze_cover_ideal,
    cover_ass_primes,
    cover_depth_class,
    cover_depth_class_facets,
    cover_hypergraph,
    cover_ideal,
    cover_saturating_sets,
    cover_saturating_sets_generic,
    is_complete_intersection,
    s2_equiv_ci,
)
from powerdepth.hypergraph import graph, induced, is_cover, minimal_covers, minimize_sets, section, subsets, vset
from powerdepth.oracle import MonomialIdeal, ass_primes_oracle, depth_class_oracle, square

from .conftest import graphs


def test_cover_hypergraph():
    assert sorted(cover_hypergraph(graph(2, [(1, 2)])).edges) == [1, 2]
    assert sorted(cover_hypergraph(NAMED["triangle"]).edges) == [3, 5, 6]
    assert sorted(cover_hypergraph(cycle(4)).edges) == [vset([1, 3]), vset([2, 4])]
    full = cover_hypergraph(cycle(4), minimal_only=False)
    assert minimize_sets(full.edges) == sorted(cover_hypergraph(cycle(4)).edges)


def test_saturating_sets():
    assert cover_saturating_sets(NAMED["triangle"], 7) == [7]
    assert cover_saturating_sets(graph(2, [(1, 2)]), 3) == [0, 1, 2]
    c = vset([1, 2, 3])
    assert cover_saturating_sets(cycle(4), c) == []
    assert cover_saturating_sets_generic(cycle(4), c) == []


def test_ass_primes():
    c5 = cycle(5)
    primes = cover_ass_primes(c5)
    assert [p.cover for p in primes if p.minimal] == sorted(c5.edges, key=lambda e: e)
    assert [p.cover for p in primes if not p.minimal] == [31]
    assert all(p.minimal for p in cover_ass_primes(complete_bipartite(2, 3)))
    bow = [p.cover for p in cover_ass_primes(NAMED["bowtie"]) if not p.minimal]
    assert sorted(bow) == [vset([1, 2, 3]), vset([3, 4, 5])]


def test_depth_class_named():
    assert cover_depth_class(NAMED["triangle+edge"]) is DepthClass.ONE
    assert cover_depth_class(NAMED["bowtie"]) is DepthClass.ONE
    assert cover_depth_class(cycle(5)) is DepthClass.ZERO
    assert cover_depth_class(path(3)) is None
    assert analyze_cover_ideal(path(3)).depth_class is DepthClass.ONE


def test_forbidden_configurations_miss_some_graphs():
    # a triangle with a two-edge tail: Δ_a for a = 1 on {1,2,3,4} has facets {2,3,4} and {1,5}
    g = graph(5, [(1, 2), (1, 5), (2, 3), (2, 4), (3, 4)])
    assert cover_depth_class(g) is DepthClass.GE_TWO
    assert cover_depth_class_facets(g) is DepthClass.ONE
    assert depth_class_oracle(square(cover_ideal(g))) is DepthClass.ONE
    # K5: every pair of triangles is joined through a third
    k5 = graph(5, itertools.combinations(range(1, 6), 2))
    assert cover_depth_class(k5) is DepthClass.ONE
    assert depth_class_oracle(square(cover_ideal(k5))) is DepthClass.GE_TWO


def test_complete_intersection():
    assert is_complete_intersection(cover_ideal(complete_bipartite(2, 3)))
    assert not is_complete_intersection(cover_ideal(cycle(5)))
    assert is_complete_intersection(MonomialIdeal.of(3, [(1, 0, 0), (0, 1, 1)]))
    assert s2_equiv_ci(complete_bipartite(1, 3))
    assert s2_equiv_ci(cycle(4))
    assert not s2_equiv_ci(path(4))
    rep = analyze_cover_ideal(cycle(4))
    assert rep.ci and rep.cm_note and rep.depth_class is DepthClass.GE_TWO
    assert analyze_cover_ideal(path(4)).cm_note is None


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_cover_generators_are_minimal_covers(g):
    brute = [c for c in subsets(g.vertices) if is_cover(g, c)]
    assert sorted(cover_hypergraph(g).edges) == minimize_sets(brute)
    gens = {sum(1 << k for k, e in enumerate(m) if e) for m in cover_ideal(g).gens}
    assert gens == set(minimal_covers(g))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_sections_of_cover_hypergraph(g):
    hg = cover_hypergraph(g)
    for c in subsets(g.vertices):
        assert minimize_sets(induced(hg, c).edges) == sorted(minimal_covers(section(g, c)))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_saturating_classification(g):
    hg = cover_hypergraph(g)
    for c in subsets(g.vertices):
        if is_cover(hg, c):
            assert cover_saturating_sets(g, c) == cover_saturating_sets_generic(g, c)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6))
def test_against_oracle(g):
    j2 = square(cover_ideal(g))
    assert [p.cover for p in cover_ass_primes(g)] == ass_primes_oracle(j2)
    assert cover_depth_class_facets(g) is depth_class_oracle(j2)
