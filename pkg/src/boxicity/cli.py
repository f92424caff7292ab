"""Command line entry point: ``boxicity <command> ...``.

Exit codes: 0 success, 1 verification or bound-check failure, 2 input error,
3 capacity cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import box, combinatorics, cub, oracle
from .errors import CapacityError, InputError
from .graph import FAMILIES, Graph, bipartition_of, generate, read_graph, to_edge_list_text, to_graph6, write_graph
from .intervals import representation_from_json, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _dump(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cover(g: Graph, approx: bool, cap: int) -> tuple[combinatorics.VertexCover, str]:
    if approx:
        return combinatorics.approx_vertex_cover(g), "approx"
    return combinatorics.min_vertex_cover(g, cap), "exact"


def cmd_gen(args: argparse.Namespace) -> int:
    params = {k: getattr(args, k) for k in ("n", "n1", "n2", "p", "seed") if getattr(args, k) is not None}
    g = generate(args.family, **params)
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(to_graph6(g) + "\n" if args.format == "graph6" else to_edge_list_text(g))
    return EXIT_OK


def bound_report(g: Graph, approx: bool = False, cap: int = combinatorics.COVER_CAP) -> dict:
    cover, kind = _cover(g, approx, cap)
    t = len(cover)
    report: dict = {
        "n": g.n,
        "m": g.m,
        "t": t,
        "cover_kind": kind,
        "cover": sorted(cover.vertices),
        "cub_bound": cub.cub_bound(g.n, t),
        "box_bound": box.box_bound(t),
    }
    achieved = {
        "cub_vc": len(cub.build_cub_representation(g, cover)),
        "box_vc": len(box.build_box_representation(g, cover)),
    }
    bip = bipartition_of(g)
    if bip:
        report["bipartite_bound"] = box.bipartite_bound(len(bip.side1), len(bip.side2))
        achieved["box_bipartite"] = len(box.build_bipartite_box_representation(g, bip, cap))
    if g.n <= combinatorics.SEARCH_CAP:
        report["remark2_bound"] = combinatorics.matching_box_bound(g)
    report["achieved"] = achieved
    return report


def cmd_bounds(args: argparse.Namespace) -> int:
    report = bound_report(read_graph(args.input), args.approx, args.cap)
    _emit(_dump(report) + "\n", args.out)
    ach = report["achieved"]
    ok = ach["cub_vc"] <= report["cub_bound"] and ach["box_vc"] <= report["box_bound"]
    if "box_bipartite" in ach:
        ok = ok and ach["box_bipartite"] <= report["bipartite_bound"]
    return EXIT_OK if ok else EXIT_FAIL


def cmd_construct(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    if args.method == "box-bipartite":
        bip = bipartition_of(g)
        if not bip:
            raise InputError(f"graph is not bipartite (odd cycle {list(bip.cycle)})")
        rep = box.build_bipartite_box_representation(g, bip, args.cap)
    else:
        cover, _ = _cover(g, args.approx, args.cap)
        build = cub.build_cub_representation if args.method == "cub-vc" else box.build_box_representation
        rep = build(g, cover)
    report = verify(rep)
    if not report:
        sys.stderr.write(_dump(report.as_dict()) + "\n")
        return EXIT_FAIL
    _emit(rep.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    try:
        text = Path(args.rep).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.rep}: {exc}") from None
    report = verify(representation_from_json(text, g))
    _emit(_dump(report.as_dict()) + "\n", args.out)
    return EXIT_OK if report else EXIT_FAIL


def cmd_exact(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    run = oracle.exact_boxicity if args.what == "boxicity" else oracle.exact_cubicity
    result = run(g, max_k=args.max_k)
    _emit(_dump(result.as_dict()) + "\n", args.out)
    return EXIT_CAP if result.capped else EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else oracle.CHECKS
    report = oracle.survey(args.n, checks)
    _emit(report.to_jsonl(), args.out)
    for g6, name in report.violations:
        sys.stderr.write(f"violation: {g6} {name}\n")
    return EXIT_FAIL if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxicity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist", help="stdout format")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="input", required=True, help="graph file (.g6 or edge list)")
        p.add_argument("--out")
        p.add_argument("--cap", type=int, default=combinatorics.COVER_CAP, help="exact vertex cover cap")

    p = sub.add_parser("bounds", help="vertex-cover bounds and achieved dimensions")
    common(p)
    p.add_argument("--approx", action="store_true", help="use the 2-approximate cover")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="write a verified representation as JSON")
    common(p)
    p.add_argument("--method", required=True, choices=("cub-vc", "box-vc", "box-bipartite"))
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a representation file against a graph")
    common(p)
    p.add_argument("--rep", required=True, help="representation JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact boxicity or cubicity of a small graph")
    p.add_argument("what", choices=("boxicity", "cubicity"))
    common(p)
    p.add_argument("--max-k", type=int, default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("survey", help="exhaustive bound checks over all graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default="", help=f"comma list from {','.join(oracle.CHECKS)}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        sys.stderr.write(f"capacity: {exc}\n")
        return EXIT_CAP
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
