"""Command-line surface for batch computation and verification.

Subcommands: enumerate | multiply | diff | homology | massey | formality |
verify | export-dot.  Exit codes: 0 success, 1 verification failure,
2 bad configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraContext, Flavor, differential, grading, graded_pieces_up_to, multiply
from .formality import (
    formality_table,
    formality_verdict,
    massey3,
    nonformal_certificate,
    is_massey_admissible3,
    single_grading_massey_data,
)
from .homology import complexes_up_to, homology_ranks, homology_table, theorem_basis, verify_splitting
from .istates import is_far
from .quiver import export_dot, verify_presentation
from .symmetry import symmetry_report
from .textforms import element_text, parse_element

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def _context(args: argparse.Namespace) -> AlgebraContext:
    S = frozenset(int(p) for p in args.S.split(",") if p) if args.S else frozenset()
    return AlgebraContext(args.n, args.k, S, Flavor(args.flavor))


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate(args: argparse.Namespace) -> int:
    ctx = _context(args)
    rows = []
    states = ctx.istates()
    for x in states:
        for y in states:
            for alex2, terms in sorted(graded_pieces_up_to(ctx, x, y, args.cap).items()):
                rows.append({"x": x.text(), "y": y.text(), "alex2": list(alex2), "dim": len(terms)})
    payload = {"schema": "ks-alg/1", "ctx": str(ctx), "cap": args.cap, "pieces": rows}
    lines = [f"{r['x']} -> {r['y']}  alex2={r['alex2']}  dim={r['dim']}" for r in rows]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_multiply(args: argparse.Namespace) -> int:
    ctx = _context(args)
    a = parse_element(ctx, args.a)
    b = parse_element(ctx, args.b)
    out = element_text(multiply(a, b))
    _emit(args, {"schema": "ks-alg/1", "ctx": str(ctx), "product": out}, [out])
    return EXIT_OK


def cmd_diff(args: argparse.Namespace) -> int:
    ctx = _context(args)
    a = parse_element(ctx, args.a)
    out = element_text(differential(a))
    _emit(args, {"schema": "ks-alg/1", "ctx": str(ctx), "differential": out}, [out])
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    ctx = _context(args)
    table = homology_table(ctx, args.cap)
    ok = True
    for piece in table["pieces"]:
        x = ctx_istate(ctx, piece["x"])
        y = ctx_istate(ctx, piece["y"])
        reps = theorem_basis(ctx, x, y, tuple(piece["alex2"]))
        counts: dict[str, int] = {}
        for t in reps:
            m = str(grading(ctx, t).maslov)
            counts[m] = counts.get(m, 0) + 1
        piece["theorem_counts"] = counts
        piece["match"] = counts == piece["ranks"]
        ok = ok and piece["match"]
    lines = [
        f"{p['x']} -> {p['y']}  alex2={p['alex2']}  ranks={p['ranks']}  match={p['match']}"
        for p in table["pieces"]
    ]
    lines.append("all pieces match" if ok else "MISMATCH")
    _emit(args, table, lines)
    return EXIT_OK if ok else EXIT_FAIL


def ctx_istate(ctx: AlgebraContext, text: str):
    from .istates import IState

    return IState.parse(text, ctx.n)


def cmd_massey(args: argparse.Namespace) -> int:
    ctx = _context(args)
    found = nonformal_certificate(ctx)
    if found is None:
        payload = {"schema": "ks-alg/1", "ctx": str(ctx), "certificate": None}
        _emit(args, payload, [f"{ctx}: no standard non-formality sequence applies"])
        return EXIT_OK
    a1, a2, a3 = found["sequence"]
    admissible = is_massey_admissible3(ctx, a1, a2, a3)
    payload = {
        "schema": "ks-alg/1",
        "ctx": str(ctx),
        "family": found["family"],
        "sequence": [element_text(a) for a in (a1, a2, a3)],
        "admissible": admissible,
    }
    lines = [f"sequence ({payload['sequence'][0]}; {payload['sequence'][1]}; {payload['sequence'][2]})"]
    if admissible:
        res = massey3(ctx, a1, a2, a3, check=False)
        payload["product"] = element_text(res.product_class)
        payload["expected"] = element_text(found["expected"])
        lines.append(f"triple product class: {payload['product']}")
    if args.single_grading:
        payload["single_grading"] = single_grading_massey_data(ctx, args.cap)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_formality(args: argparse.Namespace) -> int:
    if args.table:
        verdicts = formality_table(args.n, certify_n_max=args.n if args.certify else 0, cap=args.cap)
        payload = {"schema": "ks-alg/1", "verdicts": [v.as_json() for v in verdicts]}
        lines = [
            f"{v.ctx}: {'formal' if v.formal else 'non-formal'} ({v.kind})" for v in verdicts
        ]
        _emit(args, payload, lines)
        return EXIT_OK
    if args.k is None:
        raise ValueError("-k is required without --table")
    ctx = _context(args)
    v = formality_verdict(ctx, certify=args.certify, cap=args.cap)
    payload = {"schema": "ks-alg/1", **v.as_json()}
    _emit(args, payload, [f"{ctx}: {'formal' if v.formal else 'non-formal'} ({v.kind})"])
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context(args)
    reports = [verify_presentation(ctx), symmetry_report(ctx, cap=min(args.cap, 6), seed=args.seed)]
    states = ctx.istates()
    for x in states:
        for y in states:
            if not is_far(x, y):
                reports.append(verify_splitting(ctx, x, y, min(args.cap, 8)))
    mismatches = []
    for x in states:
        for y in states:
            for alex2, c in complexes_up_to(ctx, x, y, args.cap).items():
                ranks = homology_ranks(c)
                counts: dict[int, int] = {}
                for t in theorem_basis(ctx, x, y, alex2):
                    m = grading(ctx, t).maslov
                    counts[m] = counts.get(m, 0) + 1
                if {m: r for m, r in counts.items() if r} != ranks:
                    mismatches.append(f"homology mismatch at {x},{y},{alex2}")
    reports.append({"ctx": str(ctx), "ok": not mismatches, "failures": mismatches})
    try:
        verdict = formality_verdict(ctx, certify=True, cap=args.cap).as_json()
        reports.append({"ctx": str(ctx), **verdict, "ok": True})
    except AssertionError as exc:
        reports.append({"ctx": str(ctx), "kind": "formality", "ok": False, "failures": [str(exc)]})
    ok = all(r.get("ok", False) for r in reports)
    payload = {"schema": "ks-alg/1", "ctx": str(ctx), "ok": ok, "reports": reports}
    lines = []
    for r in reports:
        status = "pass" if r.get("ok") else "FAIL"
        lines.append(f"[{status}] {r.get('kind', r.get('family', 'suite'))}: {r.get('ctx')}")
        for f in r.get("failures", [])[:5]:
            lines.append(f"    {f}")
    lines.append("all suites pass" if ok else "FAILURES present")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export_dot(args: argparse.Namespace) -> int:
    ctx = _context(args)
    print(export_dot(ctx))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ksalg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_k: bool = True) -> None:
        p.add_argument("-n", type=int, required=True, help="ambient width")
        if need_k:
            p.add_argument("-k", type=int, required=True, help="I-state size")
        p.add_argument("-S", default="", help="orientation set, comma-separated lines")
        p.add_argument(
            "--flavor", default="b", choices=[f.value for f in Flavor], help="algebra flavor"
        )
        p.add_argument("--cap", type=int, default=12, help="total alex2 degree cap")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("enumerate", help="graded piece dimension table")
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("multiply", help="product of two elements")
    common(p)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_multiply)

    p = sub.add_parser("diff", help="differential of an element")
    common(p)
    p.add_argument("a")
    p.set_defaults(fn=cmd_diff)

    p = sub.add_parser("homology", help="homology ranks vs closed-form counts")
    common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("massey", help="standard Massey certificate for the context")
    common(p)
    p.add_argument("--single-grading", action="store_true", help="collapsed-grading data")
    p.set_defaults(fn=cmd_massey)

    p = sub.add_parser("formality", help="formality verdict (single context or table)")
    common(p, need_k=False)
    p.add_argument("-k", type=int, default=None, help="I-state size (omit with --table)")
    p.add_argument("--table", action="store_true", help="all contexts up to n")
    p.add_argument("--certify", action="store_true", help="attach machine certificates")
    p.set_defaults(fn=cmd_formality)

    p = sub.add_parser("verify", help="run all verification suites for the context")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export-dot", help="DOT digraph of the quiver")
    common(p)
    p.set_defaults(fn=cmd_export_dot)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
