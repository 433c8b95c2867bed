import itertools
import math

import pytest
from hypothesis import given, settings

from powerdepth.complexes import DepthClass, MultiDegree, SimplicialComplex, is_connected
from powerdepth.corpus import NAMED, complete_bipartite, cycle, path, uniform_complete
from powerdepth.depth1 import (
    delta_a_combinatorial,
    depth_class_graph,
    depth_ge_2_bipartite,
    depth_ge_2_bipartite_edgewise,
    depth_ge_2_graph,
    graph_depth_conditions,
    hypergraph_depth_report,
    independence_complex,
    skeleton_diameter_ok,
)
from powerdepth.hypergraph import bit, graph, neighborhood, vset
from powerdepth.oracle import depth_class_oracle, edge_ideal, square, takayama_delta_a

from .conftest import graphs, hypergraphs


def test_independence_complex():
    assert sorted(independence_complex(NAMED["triangle"]).facets) == [1, 2, 4]
    assert sorted(independence_complex(cycle(4)).facets) == [vset([1, 3]), vset([2, 4])]
    assert sorted(independence_complex(graph(2, [(1, 2)])).facets) == [1, 2]


def test_delta_a_low_degrees():
    h = NAMED["triangle-path2"]
    base = independence_complex(h)
    assert delta_a_combinatorial(h, (0,) * 5) == base
    for i in range(5):
        a = [0] * 5
        a[i] = 1
        assert delta_a_combinatorial(h, a) == base


def test_delta_a_two_vertices_is_union_of_stars():
    h = NAMED["triangle-path3"]
    base = independence_complex(h)
    for i, j in itertools.combinations(range(1, 7), 2):
        if (bit(i) | bit(j)) in h.edges:
            continue
        a = MultiDegree.from_support(6, bit(i) | bit(j))
        assert delta_a_combinatorial(h, a) == base.star(i).union(base.star(j))


def test_delta_a_triangle_is_outside_of_neighbourhood():
    g = NAMED["triangle-path3"]
    base = independence_complex(g)
    a = MultiDegree.from_support(6, vset([1, 2, 3]))
    outside = g.vertices & ~neighborhood(g, vset([1, 2, 3]))
    assert delta_a_combinatorial(g, a) == base.induced(outside)


def test_delta_a_rejects_non_squarefree():
    with pytest.raises(ValueError):
        delta_a_combinatorial(NAMED["triangle"], (2, 0, 0))


def test_is_connected():
    assert is_connected(SimplicialComplex.from_faces(3, [vset([1, 2]), vset([2, 3])]))
    assert not is_connected(SimplicialComplex.from_faces(2, [1, 2]))
    assert is_connected(SimplicialComplex.from_faces(3, [0]))


def test_skeleton_diameter():
    assert skeleton_diameter_ok(uniform_complete(4, 3))
    # independent pairs of 2K2 form a 4-cycle
    assert skeleton_diameter_ok(graph(4, [(1, 2), (3, 4)]))
    assert not skeleton_diameter_ok(path(4))
    # vertex 2 is adjacent to both others, so it is cut off in the skeleton
    assert not skeleton_diameter_ok(path(3))
    assert depth_class_oracle(square(edge_ideal(path(3)))) is DepthClass.ONE


def test_graph_examples():
    one = graph_depth_conditions(NAMED["triangle-path3"])
    assert one.diameter_ok and not one.triangles_ok
    two = graph_depth_conditions(NAMED["triangle-fork"])
    assert not two.diameter_ok and two.triangles_ok
    assert not depth_ge_2_graph(NAMED["triangle-path3"])
    assert not depth_ge_2_graph(NAMED["triangle-fork"])
    assert depth_ge_2_graph(cycle(6))
    assert depth_class_graph(NAMED["triangle"]) is DepthClass.ZERO
    assert depth_class_graph(NAMED["triangle-path3"]) is DepthClass.ONE
    # the complement of the 4-cycle is two disjoint edges
    assert graph_depth_conditions(cycle(4)).complement_diameter == math.inf
    assert depth_class_graph(cycle(4)) is DepthClass.ONE


def test_bipartite_criterion():
    assert not depth_ge_2_bipartite(cycle(4), vset([1, 3]), vset([2, 4]))
    assert not depth_ge_2_bipartite(path(4), vset([1, 3]), vset([2, 4]))
    assert not depth_ge_2_bipartite(complete_bipartite(2, 3), vset([1, 2]), vset([3, 4, 5]))
    assert depth_ge_2_bipartite(cycle(6), vset([1, 3, 5]), vset([2, 4, 6]))
    p5 = path(5)
    # vertex 3 sees the whole side {2, 4}, yet the complement has diameter 2
    assert not depth_ge_2_bipartite(p5, vset([2, 4]), vset([1, 3, 5]))
    assert depth_ge_2_bipartite_edgewise(p5, vset([2, 4]), vset([1, 3, 5]))
    assert depth_class_oracle(square(edge_ideal(p5))) is DepthClass.GE_TWO
    assert not depth_ge_2_bipartite_edgewise(cycle(4), vset([1, 3]), vset([2, 4]))
    with pytest.raises(ValueError):
        depth_ge_2_bipartite(cycle(4), vset([1, 2]), vset([3, 4]))


def test_hypergraph_report():
    rep = hypergraph_depth_report(uniform_complete(4, 3))
    assert rep.diameter_ok and not rep.depth_zero
    assert rep.depth_class is DepthClass.ONE
    rep = hypergraph_depth_report(NAMED["triangle"], use_oracle=False)
    assert rep.depth_zero and rep.depth_class is DepthClass.ZERO
    assert hypergraph_depth_report(cycle(5)).depth_class is depth_class_oracle(square(edge_ideal(cycle(5))))


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=5))
def test_facets_match_takayama(h):
    j = square(edge_ideal(h))
    for a in itertools.product((0, 1), repeat=h.n):
        if all(x < r for x, r in zip(a, j.rho)):
            assert delta_a_combinatorial(h, a) == takayama_delta_a(j, a)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6))
def test_graph_class_matches_oracle(g):
    assert depth_class_graph(g) is depth_class_oracle(square(edge_ideal(g)))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6))
def test_bipartite_matches_general(g):
    from powerdepth.hypergraph import is_bipartite

    sides = is_bipartite(g)
    if sides is not None:
        assert depth_ge_2_bipartite_edgewise(g, *sides) == depth_ge_2_graph(g)
        # the vertex-wise condition is sufficient but not necessary
        if depth_ge_2_bipartite(g, *sides):
            assert depth_ge_2_graph(g)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=5))
def test_depth_two_needs_small_diameter(h):
    if depth_class_oracle(square(edge_ideal(h))) is DepthClass.GE_TWO:
        assert skeleton_diameter_ok(h)
