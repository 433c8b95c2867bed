"""Command-line front end: analyze, crosscheck, gen."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from . import corpus
from .assoc import AssociatedPrime, ass_primes_general, ass_primes_graph, symbolic_equals_square
from .checks import CheckConfig, InstanceResult, run_checks
from .coverideal import (
    analyze_cover_ideal,
    cover_depth_class_facets,
    cover_ideal,
)
from .depth1 import graph_depth_conditions, hypergraph_depth_report
from .hypergraph import Hypergraph, HypergraphError, members, parse_text, size, to_text
from .oracle import MAX_ASS_VARIABLES, ass_primes_oracle, depth_class_oracle, edge_ideal, square

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREE = 3


def _set(mask: int) -> list[int]:
    return members(mask)


def _prime_entry(p: AssociatedPrime) -> dict[str, Any]:
    entry: dict[str, Any] = {
        "cover": _set(p.cover),
        "minimal": p.minimal,
        "saturating_set": _set(p.saturating_set),
        "certificate": p.certificate.kind.value,
        "certificate_verified": p.certificate.verify(),
    }
    if p.origin_triangles:
        entry["origin_triangles"] = [_set(t) for t in p.origin_triangles]
    return entry


def _prime_key(c: int) -> tuple[int, int]:
    return (size(c), c)


def _edge_report(h: Hypergraph) -> tuple[dict[str, Any], Optional[str], list[int]]:
    if h.is_graph:
        cond = graph_depth_conditions(h)
        cls = cond.depth_class.value
        if cond.dominating_triangle is not None:
            by = f"dominating triangle {_set(cond.dominating_triangle)}"
        elif cond.depth_ge_2:
            by = "complement diameter <= 2 and every triangle leaves a connected outside"
        elif not cond.diameter_ok:
            by = f"complement diameter {cond.complement_diameter} > 2"
        else:
            by = f"triangles with bad outside: {[_set(t) for t in cond.bad_triangles]}"
        primes = ass_primes_graph(h)
    else:
        rep = hypergraph_depth_report(h, use_oracle=h.n <= MAX_ASS_VARIABLES)
        if rep.depth_zero:
            cls, by = "ZERO", f"2-saturating set {_set(rep.certificate.u)}"
        elif rep.oracle_class is not None:
            cls, by = rep.oracle_class.value, "oracle (no 2-saturating set; higher depth has no combinatorial test here)"
        else:
            cls, by = None, "positive depth (no 2-saturating set); class beyond that undecided"
        primes = ass_primes_general(h)
    sym = symbolic_equals_square(h)
    witness = None
    if sym.witness is not None:
        w = sym.witness
        witness = {"edges": [_set(w.f1), _set(w.f2), _set(w.f3)], "intersection": _set(w.intersection)}
    report = {
        "depth": {"class": cls, "decided_by": by},
        "ass_primes": [_prime_entry(p) for p in primes],
        "symbolic_power": {"equals_square": sym.equal, "witness": witness},
    }
    if not h.is_graph:
        report["depth"]["skeleton_diameter_ok"] = hypergraph_depth_report(h, use_oracle=False).diameter_ok
    return report, cls, [p.cover for p in primes]


def _cover_report(g: Hypergraph) -> tuple[dict[str, Any], Optional[str], list[int]]:
    rep = analyze_cover_ideal(g)
    exact = cover_depth_class_facets(g).value
    report = {
        "depth": {
            "class": rep.depth_class.value,
            "decided_by": rep.depth_source,
            "facet_class": exact,
        },
        "ass_primes": [_prime_entry(p) for p in rep.ass_primes],
        "cover": {"ci": rep.ci, "s2": rep.ci, "cm_note": rep.cm_note},
    }
    return report, rep.depth_class.value, [p.cover for p in rep.ass_primes]


def build_report(h: Hypergraph, ideal: str = "edge", oracle: bool = False) -> dict[str, Any]:
    """The structured analysis of one instance (the payload of ``analyze``)."""
    if ideal == "cover":
        if not h.is_graph:
            raise HypergraphError("the cover ideal is only defined here for graphs (all edges of size 2)")
        body, cls, covers = _cover_report(h)
        j = cover_ideal(h)
    elif ideal == "edge":
        body, cls, covers = _edge_report(h)
        j = edge_ideal(h)
    else:
        raise ValueError(f"unknown ideal kind {ideal!r}")
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "instance": {"n": h.n, "edges": h.edge_lists(), "ideal": ideal},
    }
    report.update(body)
    if oracle:
        j2 = square(j)
        oc = depth_class_oracle(j2).value
        oa = ass_primes_oracle(j2)
        report["oracle"] = {
            "class": oc,
            "ass_primes": [_set(c) for c in oa],
            "class_agrees": oc == cls,
            "ass_agrees": sorted(covers, key=_prime_key) == oa,
        }
    return report


def flatten(data: Any, prefix: str = "") -> list[tuple[str, Any]]:
    """Leaf paths of a JSON-like value; lists of scalars stay as leaves."""
    if isinstance(data, dict):
        out = []
        for k, v in data.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else k)
        return out
    if isinstance(data, list) and any(isinstance(x, (dict, list)) and not _scalar_list(x) for x in data):
        out = []
        for k, v in enumerate(data):
            out += flatten(v, f"{prefix}[{k}]")
        return out
    return [(prefix, data)]


def _scalar_list(x: Any) -> bool:
    return isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)


def render_text(report: dict[str, Any]) -> str:
    """One ``path: json-value`` line per leaf, so text and JSON carry the same data."""
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in flatten(report)) + "\n"


def parse_rendered_text(text: str) -> list[tuple[str, Any]]:
    out = []
    for line in text.splitlines():
        key, _, value = line.partition(": ")
        out.append((key, json.loads(value)))
    return out


def worker_count() -> int:
    cap = os.environ.get("POWERDEPTH_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise SystemExit(f"POWERDEPTH_THREADS must be an integer, got {cap!r}")
    return n


def _check_one(args: tuple[str, str, CheckConfig]) -> InstanceResult:
    text, ideal, cfg = args
    return run_checks(parse_text(text), ideal, cfg)


@dataclass
class CrosscheckSummary:
    instances: int
    passed: dict[str, int]
    failed: dict[str, int]
    first_failure: Optional[InstanceResult]
    seconds: float

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def as_dict(self) -> dict[str, Any]:
        first = None
        if self.first_failure is not None:
            first = {
                "n": self.first_failure.hypergraph.n,
                "edges": self.first_failure.hypergraph.edge_lists(),
                "failed": self.first_failure.failed,
            }
        return {
            "schema_version": SCHEMA_VERSION,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": first,
            "seconds": round(self.seconds, 3),
        }


def crosscheck(
    instances: Iterable[Hypergraph],
    ideal: str = "edge",
    cfg: CheckConfig = CheckConfig(),
    workers: Optional[int] = None,
) -> CrosscheckSummary:
    start = time.perf_counter()
    # aggregate in a deterministic order: sort by the canonical text encoding
    texts = sorted((to_text(h) for h in instances), key=lambda t: (len(t.splitlines()), t))
    jobs = [(t, ideal, cfg) for t in texts]
    workers = workers or worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=64))
    else:
        results = [_check_one(job) for job in jobs]
    passed: dict[str, int] = {}
    failed: dict[str, int] = {}
    first = None
    for res in results:
        for name, verdict in res.outcomes.items():
            passed.setdefault(name, 0)
            failed.setdefault(name, 0)
            if verdict is True:
                passed[name] += 1
            elif verdict is False:
                failed[name] += 1
                if first is None:
                    first = res
    return CrosscheckSummary(len(results), passed, failed, first, time.perf_counter() - start)


GEN_KINDS = ("cycle", "path", "complete", "complete-bipartite", "triangle-path", "random", "random-graph", "named")


def generate(kind: str, params: argparse.Namespace) -> Hypergraph:
    if kind == "cycle":
        return corpus.cycle(params.n)
    if kind == "path":
        return corpus.path(params.n)
    if kind == "complete":
        return corpus.complete(params.n)
    if kind == "complete-bipartite":
        return corpus.complete_bipartite(params.m, params.p)
    if kind == "triangle-path":
        return corpus.triangle_path(params.tail)
    if kind in ("random", "random-graph"):
        size_lo, size_hi = (2, 2) if kind == "random-graph" else (1, params.max_edge_size)
        cfg = corpus.RandomHypergraphConfig(
            n_min=params.n, n_max=params.n, max_edges=params.edges,
            min_edge_size=size_lo, max_edge_size=size_hi,
        )
        return corpus.random_hypergraph(random.Random(params.seed), cfg)
    if kind == "named":
        h = corpus.named(params.name)
        if h is None:
            raise ValueError(f"unknown example {params.name!r}; known: {', '.join(sorted(corpus.NAMED))}")
        return h
    raise ValueError(f"unknown kind {kind!r}")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="powerdepth", description="Depth and associated primes of second powers of squarefree monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one hypergraph file")
    a.add_argument("file", help="input file, or - for stdin")
    a.add_argument("--ideal", choices=("edge", "cover"), default="edge")
    a.add_argument("--oracle", action="store_true", help="also run the algebraic oracle and compare")
    a.add_argument("--json", action="store_true")

    c = sub.add_parser("crosscheck", help="compare the combinatorial side with the oracle on a corpus")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-graphs", type=int, metavar="N", help="every covered labeled graph on N <= 6 vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="seeded random instances")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--ideal", choices=("edge", "cover"), default="edge")
    c.add_argument("--dump", default="counterexample.txt", help="where to write the first counterexample")
    c.add_argument("--json", action="store_true")

    g = sub.add_parser("gen", help="emit an instance in the input format")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--n", type=int, default=5)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--p", type=int, default=3)
    g.add_argument("--tail", type=int, default=2)
    g.add_argument("--edges", type=int, default=6)
    g.add_argument("--max-edge-size", type=int, default=3)
    g.add_argument("--name", default="triangle")
    g.add_argument("--seed", type=int, default=0)
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        h = parse_text(_read(args.file))
        report = build_report(h, args.ideal, args.oracle)
    except (HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(json.dumps(report, indent=2) + "\n" if args.json else render_text(report))
    oracle = report.get("oracle")
    if oracle and not (oracle["class_agrees"] and oracle["ass_agrees"]):
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.all_graphs is not None:
        if not 2 <= args.all_graphs <= 6:
            print("error: --all-graphs needs 2 <= N <= 6", file=sys.stderr)
            return EXIT_PARSE
        instances: list[Hypergraph] = list(corpus.covered_graphs(args.all_graphs))
    else:
        cfg = corpus.RandomHypergraphConfig()
        if args.ideal == "cover":
            cfg = corpus.RandomHypergraphConfig(n_min=3, n_max=6, max_edges=9, min_edge_size=2, max_edge_size=2)
        instances = corpus.random_hypergraphs(args.random, args.seed, cfg)
    summary = crosscheck(instances, args.ideal)
    if args.json:
        print(json.dumps(summary.as_dict(), indent=2))
    else:
        print(render_text(summary.as_dict()), end="")
    if summary.first_failure is not None:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(f"# failed: {', '.join(summary.first_failure.failed)}\n")
            fh.write(to_text(summary.first_failure.hypergraph))
        print(f"first counterexample written to {args.dump}", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_DISAGREE


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        h = generate(args.kind, args)
    except (ValueError, HypergraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(to_text(h))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    handler = {"analyze": cmd_analyze, "crosscheck": cmd_crosscheck, "gen": cmd_gen}[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
