"""Command-line front end: ``beireg analyze|oracle|verify|examples|gen|export-dot``.

Exit codes: 0 success, 1 verification failures, 2 parse error, 3 input is
not a tree, 4 oracle size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import family_gstm_reg, gstm_member, thm_lower, thm_upper
from .constructions import fig2_tree, gamma_tree, jewel_tree
from .graph import NotATreeError, ParseError, parse_graph, prufer_decode, random_tree, validate_tree
from .jewels import jewel_profile
from .oracle import FieldSpec, OracleCapExceeded, max_vars_from_env, oracle_with_table
from .report import analyze_tree, to_dot
from .verify import ALL_CHECKS, run_verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_NOT_TREE, EXIT_CAP = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _read_graph(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}") from None


def _read_tree(path: str):
    g = _read_graph(path)
    try:
        return validate_tree(g)
    except NotATreeError as exc:
        raise _Exit(EXIT_NOT_TREE, f"{path}: not a tree: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    report = analyze_tree(_read_tree(args.file))
    print(report.to_json() if args.json else report.render())
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    max_vars = args.max_vars if args.max_vars is not None else max_vars_from_env()
    try:
        reg, table = oracle_with_table(g, FieldSpec(args.char), max_vars=max_vars, full_table=args.betti)
    except OracleCapExceeded as exc:
        raise _Exit(EXIT_CAP, str(exc)) from None
    if args.betti:
        print(json.dumps({"reg": reg, "betti": table.to_dict()}, indent=2))
    else:
        print(reg)
    return EXIT_OK


def cmd_verify(args) -> int:
    max_vars = args.max_vars if args.max_vars is not None else max_vars_from_env()
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise _Exit(EXIT_PARSE, f"unknown checks: {sorted(unknown)}")
    report = run_verify(
        args.random,
        args.max_n,
        args.seed,
        args.exhaustive_n,
        field=FieldSpec(args.char),
        max_vars=max_vars,
        formula_only=args.formula_only,
        checks=checks,
        jobs=args.jobs,
    )
    d = report.to_dict()
    if args.json:
        print(json.dumps(d, indent=2, sort_keys=True))
    else:
        print(f"cases: {d['cases']} (oracle-backed: {d['oracle_cases']})")
        for name, count in d["checks"].items():
            print(f"  {name:<20} {count}")
        print(f"failures: {len(d['failures'])}")
        for f in d["failures"]:
            print(f"  FAIL {f['check']}: {f['tree']} expected {f['expected']}, observed {f['observed']}")
        print(f"characteristic divergences / findings: {len(d['divergences'])}")
        for f in d["divergences"]:
            print(f"  {f['check']}: {f['tree']} {f['observed']}")
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- examples

def example_fig2() -> dict:
    t = fig2_tree()
    r = analyze_tree(t)
    return {"expected": 12, "thm_lower": r.thm_lower, "thm_upper": r.thm_upper, "exact": r.estimate.exact,
            "mm": [r.mm_lower, r.mm_upper], "iv_lower": r.iv_lower}


def example_gamma(ds=range(3, 7)) -> list[dict]:
    rows = []
    for d in ds:
        t = gamma_tree(d)
        pr = jewel_profile(t)
        rows.append({
            "d": d,
            "iv": pr.iv, "s": pr.s, "D_G": pr.d_g,
            "thm_upper": thm_upper(pr),
            "closed_form": 5 * d - (d + 1) // 3,
            "star_bound": 5 * d,
            "gap": 5 * d - thm_upper(pr),
            "thm_lower": thm_lower(pr),
        })
    return rows


def example_jewel(field: FieldSpec = FieldSpec()) -> dict:
    t = jewel_tree()
    pr = jewel_profile(t)
    reg, _ = oracle_with_table(t, field, max_vars=2 * t.n)
    return {"oracle": reg, "one_jewel_formula": pr.iv + pr.centers[0][1] - 1}


FAMILY_CASES = [(s, t, m) for s, t in ((0, 2), (1, 1), (2, 0), (1, 2)) for m in (0, 1)]


def example_family(field: FieldSpec = FieldSpec()) -> list[dict]:
    rows = []
    for s, t, m in FAMILY_CASES:
        g = gstm_member(s, t, m)
        reg, _ = oracle_with_table(g, field, max_vars=2 * g.n)
        rows.append({"s": s, "t": t, "m": m, "vertices": g.n, "formula": family_gstm_reg(s, t, m), "oracle": reg})
    return rows


def cmd_examples(args) -> int:
    which = ["fig2", "gamma", "jewel", "family"] if args.which == "all" else [args.which]
    out = {}
    for w in which:
        t0 = time.perf_counter()
        out[w] = {"fig2": example_fig2, "gamma": example_gamma, "jewel": example_jewel,
                  "family": example_family}[w]()
        if not args.json:
            _print_example(w, out[w], time.perf_counter() - t0)
    if args.json:
        print(json.dumps(out, indent=2))
    return EXIT_OK


def _mark(ok: bool) -> str:
    return "ok" if ok else "MISMATCH"


def _print_example(which: str, res, secs: float) -> None:
    if which == "fig2":
        ok = res["thm_lower"] == res["thm_upper"] == res["exact"] == res["expected"]
        print(f"fig2: expected reg = {res['expected']}; computed thm_lower = {res['thm_lower']}, "
              f"thm_upper = {res['thm_upper']}, exact = {res['exact']}  [{_mark(ok)}]")
        print(f"      Matsuda-Murai {res['mm'][0]}..{res['mm'][1]}, iv+1 = {res['iv_lower']}")
    elif which == "gamma":
        print("gamma:  d  thm_upper  5d-floor((d+1)/3)  5d bound  gap  thm_lower")
        for r in res:
            ok = r["thm_upper"] == r["closed_form"]
            print(f"      {r['d']:>3} {r['thm_upper']:>10} {r['closed_form']:>18} {r['star_bound']:>9} "
                  f"{r['gap']:>4} {r['thm_lower']:>10}  [{_mark(ok)}]")
    elif which == "jewel":
        ok = res["oracle"] == res["one_jewel_formula"]
        print(f"jewel: oracle reg = {res['oracle']}, iv + D(c) - 1 = {res['one_jewel_formula']}  [{_mark(ok)}]")
    elif which == "family":
        print("family G(s,t,m;c):  s  t  m  2s+t  oracle")
        for r in res:
            print(f"                  {r['s']:>3}{r['t']:>3}{r['m']:>3}{r['formula']:>6}{r['oracle']:>8}  "
                  f"[{_mark(r['formula'] == r['oracle'])}]")
    print(f"      ({secs:.2f}s)")


# ---------------------------------------------------------------- gen / dot

def cmd_gen(args) -> int:
    if args.prufer is not None:
        try:
            seq = [int(x) for x in args.prufer.replace(",", " ").split()]
            t = prufer_decode(seq, len(seq) + 2)
        except ValueError as exc:
            raise _Exit(EXIT_PARSE, f"bad Prüfer sequence: {exc}") from None
    else:
        t = random_tree(args.random, args.seed)
    _emit(t.to_edge_list(), args.output)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _emit(to_dot(_read_tree(args.file)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="beireg", description="Regularity bounds for binomial edge ideals of trees.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="jewel profile, bounds and estimate for a tree")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    o = sub.add_parser("oracle", help="brute-force reg(S/J_G) via the initial ideal")
    o.add_argument("file")
    o.add_argument("--char", type=int, default=32003, help="field characteristic (prime)")
    o.add_argument("--max-vars", type=int, default=None, help="ring-variable cap (default 20 or $BEIREG_MAX_VARS)")
    o.add_argument("--betti", action="store_true", help="emit the full Betti table as JSON")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="cross-check the bounds against the oracle")
    v.add_argument("--random", type=int, default=0, help="number of random trees")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--exhaustive-n", type=int, default=0, help="all labeled trees up to this size")
    v.add_argument("--formula-only", action="store_true", help="skip oracle-backed checks")
    v.add_argument("--checks", default=None, help=f"comma list from {','.join(ALL_CHECKS)}")
    v.add_argument("--char", type=int, default=32003)
    v.add_argument("--max-vars", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("examples", help="reproduce the worked examples")
    e.add_argument("--which", choices=["fig2", "gamma", "jewel", "family", "all"], default="all")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)

    g = sub.add_parser("gen", help="emit an edge list")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--random", type=int, metavar="N", help="uniform random labeled tree on N vertices")
    src.add_argument("--prufer", metavar="SEQ", help='Prüfer sequence, e.g. "1 1"')
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("export-dot", help="DOT drawing with jewel centers highlighted")
    d.add_argument("file")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"beireg: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"beireg: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
