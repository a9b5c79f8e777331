"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
input or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .coloring_complex import MAX_VERTICES, EmptyComplexError, coloring_complex
from .corpus import DEFAULT_SEED, random_corpus
from .hodge import (
    HodgeReport,
    group_algebra_checks,
    homology_dims,
    hodge_dims_euler,
    hodge_dims_kernel,
    verify_main_theorem,
)
from .signed_graph import GraphParseError, SignedGraph, chromatic_coefficients, chromatic_polynomial, parse_graph

DEFAULT_GUARD = 4


class UsageError(Exception):
    pass


def _tuple(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _load(path: str) -> SignedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _guard(g: SignedGraph, args, default: int = DEFAULT_GUARD):
    limit = MAX_VERTICES if args.allow_large else (max(default, 5) if args.slow else default)
    if g.n > limit:
        hint = "" if args.allow_large else " (use --allow-large)"
        raise UsageError(f"n={g.n} exceeds the size guard {limit}{hint}")
    if g.is_empty():
        raise UsageError("Δ_G is undefined: the graph has no edge or half-edge")


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        json.dump(data, sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        for line in lines:
            print(line)


def cmd_chroma(args) -> int:
    g = _load(args.file)
    poly = chromatic_polynomial(g)
    c = chromatic_coefficients(g, poly)
    _emit(args, {"chromatic": list(poly.coeffs), "c": list(c)}, [str(poly), f"c = {_tuple(c)}"])
    return 0


def cmd_complex(args) -> int:
    g = _load(args.file)
    _guard(g, args, MAX_VERTICES)
    cx = coloring_complex(g)
    fv = cx.f_vector()
    _emit(
        args,
        {"f_vector": list(fv), "facets": len(cx.facets)},
        [f"f-vector (grades -1..{g.n - 2}) = {_tuple(fv)}", f"facets = {len(cx.facets)}"],
    )
    return 0


def cmd_hodge(args) -> int:
    g = _load(args.file)
    _guard(g, args, MAX_VERTICES)
    cx = coloring_complex(g)
    hom, eul, ker = homology_dims(cx), hodge_dims_euler(cx), hodge_dims_kernel(cx)
    _emit(
        args,
        {"homology": list(hom), "hodge_euler": list(eul), "hodge_kernel": list(ker)},
        [
            f"reduced homology (grades -1..{g.n - 2}) = {_tuple(hom)}",
            f"hodge dims, euler method  (j = 0..{g.n - 1}) = {_tuple(eul)}",
            f"hodge dims, kernel method (j = 0..{g.n - 1}) = {_tuple(ker)}",
        ],
    )
    return 0 if eul == ker else 1


def _report_lines(rep: HodgeReport) -> list[str]:
    lines = [
        f"graph: {rep.graph}",
        f"chromatic: {rep.chromatic}",
        f"homology: {_tuple(rep.homology)}",
        f"hodge (euler): {_tuple(rep.hodge_euler)}",
        f"hodge (kernel): {_tuple(rep.hodge_kernel)}",
    ]
    for name, chk in rep.checks.items():
        status = "ok" if chk.passed else "FAIL"
        extra = f" ({len(chk.skipped)} skipped)" if chk.skipped else ""
        lines.append(f"  {status:4} {name}: {chk.cases} cases{extra}")
        for f in chk.failures[:5]:
            lines.append(f"       {f}")
    word = "PASS" if rep.verdict else "FAIL"
    rel = "=" if rep.verdict else "!="
    lines.append(f"verdict: {word} c = {_tuple(rep.c)} {rel} hodge dims {_tuple(rep.hodge_kernel)}")
    return lines


def _verify(g: SignedGraph, slow: bool) -> HodgeReport:
    rep = verify_main_theorem(g, block_diagonal=True if slow else None, switching=True)
    rep.checks["group_algebra"] = group_algebra_checks(min(max(g.n - 1, 1), 4 if slow else 3))
    return rep


def cmd_verify(args) -> int:
    g = _load(args.file)
    _guard(g, args)
    rep = _verify(g, args.slow)
    _emit(args, rep.to_json(), _report_lines(rep))
    return 0 if rep.passed else 1


def _verify_item(item):
    g, slow = item
    return _verify(g, slow)


def cmd_corpus(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    graphs = random_corpus(args.n, args.count, args.seed)
    if graphs:
        _guard(graphs[0], args)
    items = [(g, args.slow) for g in graphs]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_item, items))
    else:
        reports = [_verify_item(it) for it in items]
    ok = all(r.passed for r in reports)
    data = {
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "items": [{"index": i, "graph": r.graph.to_text(), "report": r.to_json()} for i, r in enumerate(reports)],
        "passed": ok,
    }
    lines = []
    for i, r in enumerate(reports):
        status = "PASS" if r.passed else "FAIL " + ",".join(r.failed_checks() or ["verdict"])
        lines.append(f"[{i:3}] {status}  {r.graph}  c = {_tuple(r.c)}")
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} graphs passed")
    _emit(args, data, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")
    common.add_argument("--allow-large", action="store_true", help=f"raise the size guard to n <= {MAX_VERTICES}")
    common.add_argument("--slow", action="store_true", help="rank-4 group algebra identities, n = 5 allowed")

    parser = argparse.ArgumentParser(prog="signedhodge", description="Signed-graph chromatic polynomials and Hodge decompositions.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for name, helptext in (
        ("chroma", "chromatic polynomial and coefficients"),
        ("complex", "f-vector and facet count of the coloring complex"),
        ("hodge", "homology and Hodge dimensions (two methods)"),
        ("verify", "all checks and the coefficient/Hodge verdict"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="graph file")
    p = sub.add_parser("corpus", parents=[common], help="verify seeded random graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


COMMANDS = {"chroma": cmd_chroma, "complex": cmd_complex, "hodge": cmd_hodge, "verify": cmd_verify, "corpus": cmd_corpus}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, EmptyComplexError) as exc:
        print(f"signedhodge: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
