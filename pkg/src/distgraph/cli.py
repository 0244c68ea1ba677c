"""Batch command-line interface.

graph6 is the only graph interchange format and JSON the only structured
output format; "-" reads graph6 lines from stdin, one JSON document per
line.  Parallelism defaults to the DG_JOBS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from .cayley import distance_identity_check, group_table, validate_connection_set
from .distance import is_self_two_distance
from .enumeration import SearchFilter, search_self_two_distance
from .families import basic_family, named_graph, paley, prop23_construction
from .graph import Graph, metrics
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .patterns import pattern_report
from .verify import (
    conjecture_scan,
    srg_parameters,
    verify_classification,
    verify_no_cubic,
)

_FILTER_FLAGS = {
    "c4-free": "require_c4_free",
    "diamond-free": "require_diamond_free",
    "disjoint-triangles": "require_disjoint_triangles",
}


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DG_JOBS", "1")))
    except ValueError:
        return 1


def _analyze_one(g: Graph) -> dict:
    m = metrics(g)
    pat = pattern_report(g)
    ok, _ = is_self_two_distance(g)
    srg = srg_parameters(g)
    return {
        "schema": "distgraph.analysis/1",
        "graph6": encode_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "metrics": {
            "diameter": None if m.diameter == float("inf") else m.diameter,
            "girth": None if m.girth == float("inf") else m.girth,
            "triangle_count": m.triangle_count,
            "max_degree": m.max_degree,
            "degree_histogram": {str(k): v for k, v in sorted(m.degree_histogram.items())},
            "component_count": m.component_count,
            "two_connected": m.two_connected,
        },
        "patterns": {
            "has_c4_subgraph": pat.has_c4_subgraph,
            "has_diamond": pat.has_diamond,
            "triangles_pairwise_disjoint": pat.triangles_pairwise_disjoint,
            "has_induced_claw": pat.has_induced_claw,
            "has_c5c3_subgraph": pat.has_c5c3_subgraph,
            "witnesses": pat.witnesses,
        },
        "is_self_two_distance": ok,
        "srg_parameters": None if srg is None else asdict(srg),
    }


def _cmd_analyze(args: argparse.Namespace) -> int:
    if args.graph == "-":
        codes = [line for line in (ln.strip() for ln in sys.stdin) if line]
    else:
        codes = [args.graph]
    for code in codes:
        report = _analyze_one(decode_graph6(code))
        print(json.dumps(report, sort_keys=True) if args.json else json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = args.spec
    if ":" in spec:
        kind, _, arg = spec.partition(":")
        if kind in ("cycle", "path", "complete"):
            g = basic_family(kind, int(arg))
        elif kind == "prop23":
            g = prop23_construction(decode_graph6(arg))
        elif kind == "paley":
            g = paley(int(arg))
        else:
            raise ValueError(f"unknown generator: {spec!r}")
    else:
        names = {"c5c3": "c5c3", "diamond": "diamond", "fig511": "fig_5_1_1", "fig512": "fig_5_1_2", "petersen": "petersen"}
        if spec not in names:
            raise ValueError(f"unknown generator: {spec!r}")
        g = named_graph(names[spec])
    print(encode_graph6(g))
    return 0


def _build_filter(args: argparse.Namespace) -> SearchFilter:
    kwargs = {"connected_only": bool(getattr(args, "connected", False))}
    flt = getattr(args, "filter", None)
    if flt:
        kwargs[_FILTER_FLAGS[flt]] = True
    return SearchFilter(**kwargs)


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_search(args: argparse.Namespace) -> int:
    cert = search_self_two_distance(
        args.n, _build_filter(args), jobs=args.jobs, ceiling=max(10, args.n)
    )
    _emit(cert.to_json(), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    target = args.claim
    if target == "no-cubic":
        reports = [verify_no_cubic(args.max_n, jobs=args.jobs)]
    elif target == "conjectures":
        reports = list(conjecture_scan(args.max_n, jobs=args.jobs))
    else:
        family = {"c4free": "c4_free", "disjoint-triangles": "disjoint_triangles", "diamond-free": "diamond_free"}[target]
        reports = [verify_classification(family, args.max_n, jobs=args.jobs)]
    bad = False
    for rep in reports:
        _emit(rep.to_json(), args.out)
        bad = bad or rep.status != "confirmed"
    return 1 if bad else 0


def _cmd_cayley(args: argparse.Namespace) -> int:
    kind, _, m = args.group.partition(":")
    table = group_table(kind, int(m))
    s = validate_connection_set(table, frozenset(int(x) for x in args.set.split(",")))
    rep = distance_identity_check(table, s)
    _emit(
        {
            "schema": "distgraph.cayley-identity/1",
            "group": args.group,
            "set": sorted(s),
            "holds": rep.holds,
            "connection_set_used": sorted(rep.connection_set_used),
        },
        args.out,
    )
    return 0 if rep.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distgraph", description="2-distance graph toolkit: analysis, search, verification"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="metrics, patterns, predicate and SRG parameters for graph6 input")
    p.add_argument("graph", help="graph6 string, or - to read lines from stdin")
    p.add_argument("--json", action="store_true", help="compact one-line JSON per graph")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("gen", help="emit a named or parameterized construction as graph6")
    p.add_argument("spec", help="cycle:n | path:n | complete:n | c5c3 | diamond | fig511 | fig512 | petersen | prop23:<graph6> | paley:q")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("search", help="exhaustive self 2-distance scan on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--filter", choices=sorted(_FILTER_FLAGS))
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="re-verify a known classification or scan the conjectures")
    p.add_argument("claim", choices=["c4free", "disjoint-triangles", "diamond-free", "no-cubic", "conjectures"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cayley", help="check the distance-two Cayley connection-set identity")
    p.add_argument("--group", required=True, help="cyclic:m or dihedral:m")
    p.add_argument("--set", required=True, help="comma-separated connection set element indices")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cayley)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
