import math

import pytest

from powerdepth.corpus import NAMED, complete, cycle, path
from powerdepth.hypergraph import (
    Hypergraph,
    HypergraphError,
    complement_graph,
    contract,
    graph,
    graph_diameter,
    induced,
    induced_odd_cycles,
    is_bipartite,
    is_cover,
    link,
    minimal_covers,
    neighborhood,
    parse_text,
    section,
    to_text,
    triangles,
    vset,
)

TRI = graph(3, [(1, 2), (1, 3), (2, 3)])


def edges_of(h):
    return sorted(h.edge_lists())


def test_section():
    assert edges_of(section(TRI, vset([1, 2]))) == [[1, 2]]
    assert section(TRI, TRI.vertices).edges == TRI.edges
    h = Hypergraph.from_edges(5, [(1, 2, 3), (3, 4, 5)])
    assert edges_of(section(h, vset([1, 2, 3, 4]))) == [[1, 2, 3]]


def test_induced_keeps_empty_edge():
    assert edges_of(induced(graph(3, [(1, 2), (2, 3)]), vset([2]))) == [[2]]
    h = induced(graph(4, [(1, 2), (3, 4)]), vset([1, 2]))
    assert sorted(h.edges) == [0, vset([1, 2])]
    assert h.has_empty_edge
    assert induced(TRI, TRI.vertices).edges == TRI.edges


def test_link_and_contract():
    assert edges_of(link(graph(3, [(1, 2), (1, 3)]), 1)) == [[2], [3]]
    assert link(Hypergraph.from_edges(1, [(1,)]), 1).edges == (0,)
    assert link(Hypergraph.derived(3, [vset([2, 3])], 7), 1).edges == ()
    assert edges_of(contract(graph(3, [(1, 2), (2, 3)]), 2)) == [[1], [3]]
    h = Hypergraph.derived(5, [vset([1, 2]), vset([3, 4])], vset(range(1, 6)))
    assert contract(h, 5).edges == h.edges
    assert edges_of(contract(TRI, 1)) == [[2], [2, 3], [3]]


def test_covers():
    assert is_cover(TRI, vset([1, 2]))
    assert not is_cover(TRI, vset([1]))
    assert is_cover(Hypergraph.derived(3, [], 7), 0)
    assert minimal_covers(TRI) == [vset([1, 2]), vset([1, 3]), vset([2, 3])]
    assert minimal_covers(graph(2, [(1, 2)])) == [1, 2]
    assert sorted(minimal_covers(path(3))) == sorted([vset([2]), vset([1, 3])])


def test_neighborhood_and_triangles():
    g = NAMED["triangle-path2"]
    assert neighborhood(g, vset([1, 2, 3])) == vset([1, 2, 3, 4])
    assert neighborhood(graph(2, [(1, 2)]), vset([1])) == vset([2])
    assert neighborhood(g, 0) == 0
    assert triangles(TRI) == [7]
    assert triangles(cycle(4)) == []
    assert sorted(triangles(NAMED["bowtie"])) == [vset([1, 2, 3]), vset([3, 4, 5])]


def test_induced_odd_cycles():
    assert induced_odd_cycles(cycle(5)) == [vset(range(1, 6))]
    assert induced_odd_cycles(cycle(4)) == []
    assert induced_odd_cycles(NAMED["triangle-edge"]) == [vset([1, 2, 3])]
    # a chord splits the 5-cycle into a triangle and an (even) 4-cycle
    chorded = graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)])
    assert induced_odd_cycles(chorded) == [vset([1, 2, 3])]


def test_complement_and_diameter():
    assert complement_graph(complete(4)).edges == ()
    c5 = cycle(5)
    comp = complement_graph(c5)
    assert len(comp.edges) == 5 and induced_odd_cycles(comp) == [c5.vertices]
    assert graph_diameter(path(3)) == 2
    assert graph_diameter(graph(4, [(1, 2), (3, 4)])) == math.inf
    assert graph_diameter(complete(5)) == 1


def test_bipartite():
    left, right = is_bipartite(cycle(4))
    assert {left, right} == {vset([1, 3]), vset([2, 4])}
    assert is_bipartite(TRI) is None
    left, right = is_bipartite(cycle(6))
    assert {left, right} == {vset([1, 3, 5]), vset([2, 4, 6])}


def test_parse_round_trip():
    text = "# a triangle\nn 3\n1 2\n1 3  # comment\n2 3\n"
    h = parse_text(text)
    assert h == TRI
    assert parse_text(to_text(h)) == h


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("n 3\n1 2\n2 x\n", "line 3"),
        ("n 65\n1 2\n", "line 1"),
        ("n 3\n1 2\n", "vertex 3"),
        ("n 3\n1 4\n", "line 2"),
        ("1 2\n", "line 1"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(HypergraphError, match=fragment):
        parse_text(text)


def test_vertex_limit():
    Hypergraph.from_edges(64, [(i, i % 64 + 1) for i in range(1, 65)])
    with pytest.raises(HypergraphError):
        Hypergraph.from_edges(65, [(1, 2)])
