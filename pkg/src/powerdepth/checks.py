"""Instance-wise cross-checks between the combinatorial side and the oracle.

Each check returns True (agree), False (disagree) or None (not applicable).
``run_checks`` bundles the relevant ones for an instance; the crosscheck
command and the acceptance tests both go through here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .assoc import (
    ass_primes_general,
    ass_primes_graph,
    symbolic_equals_square,
    symbolic_equals_square_monomial_form,
)
from .complexes import DepthClass
from .coverideal import (
    cover_ass_primes,
    cover_depth_class,
    cover_depth_class_facets,
    cover_hypergraph,
    cover_ideal,
    cover_saturating_sets,
    cover_saturating_sets_generic,
)
from .depth1 import delta_a_combinatorial, depth_class_graph, skeleton_diameter_ok
from .hypergraph import Hypergraph, is_cover, subsets
from .oracle import (
    ass_primes_oracle,
    depth_class_oracle,
    edge_ideal,
    square,
    takayama_delta_a,
)
from .saturating import (
    find_2_saturating_set,
    is_2_saturating,
    satisfies_saturating_characterization,
)


@dataclass(frozen=True)
class CheckConfig:
    """Which of the more expensive checks to run."""

    literal_vs_characterization: bool = True
    delta_facets: bool = True
    guided_ass: bool = True
    max_vertices_expensive: int = 5


@dataclass
class InstanceResult:
    hypergraph: Hypergraph
    ideal: str
    oracle_class: Optional[DepthClass]
    outcomes: dict[str, Optional[bool]] = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.outcomes.items() if v is False]


def _covers(primes) -> list[int]:
    return sorted((p.cover for p in primes), key=lambda c: (bin(c).count("1"), c))


def _literal_vs_characterization(h: Hypergraph) -> bool:
    return all(
        (is_2_saturating(h, u) is not None) == satisfies_saturating_characterization(h, u)
        for u in subsets(h.vertices)
    )


def _delta_facets(h: Hypergraph, j) -> bool:
    rho = j.rho
    for a in itertools.product((0, 1), repeat=h.n):
        if any(x >= r for x, r in zip(a, rho)):
            continue
        if delta_a_combinatorial(h, a) != takayama_delta_a(j, a):
            return False
    return True


def edge_checks(h: Hypergraph, cfg: CheckConfig = CheckConfig()) -> InstanceResult:
    j = square(edge_ideal(h))
    oc = depth_class_oracle(j)
    oracle_ass = ass_primes_oracle(j)
    res = InstanceResult(h, "edge", oc)
    out = res.outcomes
    small = h.n <= cfg.max_vertices_expensive
    enumerated = _covers(ass_primes_general(h, "enumerate"))
    out["ass_enumerate_vs_oracle"] = enumerated == oracle_ass
    out["depth_zero_vs_oracle"] = (find_2_saturating_set(h) is not None) == (oc is DepthClass.ZERO)
    if h.is_graph:
        out["depth_class_graph_vs_oracle"] = depth_class_graph(h) == oc
        fast = _covers(ass_primes_graph(h))
        out["ass_graph_vs_oracle"] = fast == oracle_ass
        out["ass_enumerate_vs_graph"] = enumerated == fast
    if cfg.guided_ass and (small or not h.is_graph):
        out["ass_guided_vs_enumerate"] = _covers(ass_primes_general(h, "guided")) == enumerated
    out["symbolic_vs_monomial_form"] = symbolic_equals_square(h).equal == symbolic_equals_square_monomial_form(h)
    out["ge_two_implies_diameter"] = None if oc is not DepthClass.GE_TWO else skeleton_diameter_ok(h)
    if cfg.literal_vs_characterization and small:
        out["literal_vs_characterization"] = _literal_vs_characterization(h)
    if cfg.delta_facets and small:
        out["delta_facets_vs_oracle"] = _delta_facets(h, j)
    return res


def cover_checks(g: Hypergraph, cfg: CheckConfig = CheckConfig()) -> InstanceResult:
    j = square(cover_ideal(g))
    oc = depth_class_oracle(j)
    res = InstanceResult(g, "cover", oc)
    out = res.outcomes
    thm = cover_depth_class(g)
    out["cover_depth_class_vs_oracle"] = None if thm is None else thm == oc
    out["cover_depth_facets_vs_oracle"] = cover_depth_class_facets(g) == oc
    out["cover_ass_vs_oracle"] = _covers(cover_ass_primes(g)) == ass_primes_oracle(j)
    if g.n <= cfg.max_vertices_expensive:
        hg = cover_hypergraph(g)
        out["cover_saturating_vs_generic"] = all(
            cover_saturating_sets(g, c) == cover_saturating_sets_generic(g, c)
            for c in subsets(g.vertices)
            if is_cover(hg, c)
        )
    return res


CHECKERS: dict[str, Callable[[Hypergraph, CheckConfig], InstanceResult]] = {
    "edge": edge_checks,
    "cover": cover_checks,
}


def run_checks(h: Hypergraph, ideal: str = "edge", cfg: CheckConfig = CheckConfig()) -> InstanceResult:
    try:
        checker = CHECKERS[ideal]
    except KeyError:
        raise ValueError(f"unknown ideal kind {ideal!r}") from None
    return checker(h, cfg)
