"""Randomized and exhaustive cross-checks of the bounds against the oracle."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .bounds import RuleConflict, estimate, exact_rules, matsuda_murai_bounds, thm_lower, thm_upper
from .graph import (
    SimpleGraph,
    Tree,
    all_labeled_trees,
    attach_clique,
    attach_pendants,
    attach_star_via_leaf,
    delete_edge,
    delete_vertex,
    g_e_completion,
    prufer_encode,
    random_tree,
    split_with_labels,
)
from .jewels import jewel_profile
from .oracle import DEFAULT_FIELD, GF2, FieldSpec, OracleCapExceeded, oracle_reg

ALL_CHECKS = (
    "sandwich",
    "exactness",
    "jewel-free-iff",
    "matsuda-murai",
    "betti-splitting",
    "gluing",
    "additivity",
    "char",
)
FORMULA_CHECKS = ("formula-order", "estimate-additivity")
GLUING_BASE_MAX = 5


@dataclass
class VerifyReport:
    cases: int = 0
    oracle_cases: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    divergences: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyReport") -> None:
        self.cases += other.cases
        self.oracle_cases += other.oracle_cases
        for k, v in other.checks.items():
            self.checks[k] = self.checks.get(k, 0) + v
        self.failures += other.failures
        self.divergences += other.divergences

    def to_dict(self) -> dict:
        key = lambda d: (d["check"], d["tree"])
        return {
            "cases": self.cases,
            "oracle_cases": self.oracle_cases,
            "checks": dict(sorted(self.checks.items())),
            "failures": sorted(self.failures, key=key),
            "divergences": sorted(self.divergences, key=key),
            "ok": self.ok,
        }


def encode_tree(t: SimpleGraph) -> str:
    return " ".join(f"{u}-{v}" for u, v in t.sorted_edges())


class _Case:
    def __init__(self, t: Tree, report: VerifyReport, field: FieldSpec, max_vars: int):
        self.t = t
        self.report = report
        self.field = field
        self.max_vars = max_vars
        self._cache: dict[tuple, int] = {}

    def reg(self, g: SimpleGraph) -> int:
        key = (g.n, g.edges)
        if key not in self._cache:
            self._cache[key] = oracle_reg(g, self.field, max_vars=self.max_vars)
        return self._cache[key]

    def check(self, name: str, ok: bool, expected: str, observed) -> None:
        self.report.checks[name] = self.report.checks.get(name, 0) + 1
        if not ok:
            self.report.failures.append(
                {"check": name, "tree": encode_tree(self.t), "expected": expected, "observed": observed}
            )


def _formula_checks(case: _Case) -> None:
    t = case.t
    lo, hi = thm_lower(t), thm_upper(t)
    case.check("formula-order", lo <= hi, "thm_lower <= thm_upper", {"thm_lower": lo, "thm_upper": hi})
    if t.n < 2:
        return
    try:
        est = estimate(t)
    except (ValueError, RuleConflict) as exc:
        case.check("estimate-additivity", False, "estimate succeeds", str(exc))
        return
    pieces = split_with_labels(t)
    if len(pieces) > 1:
        parts = [estimate(p) for p, _ in pieces]
        ok = est.lower == sum(p.lower for p in parts) and est.upper == sum(p.upper for p in parts)
        case.check(
            "estimate-additivity",
            ok,
            "estimate adds over degree-2 pieces",
            {"whole": [est.lower, est.upper], "pieces": [[p.lower, p.upper] for p in parts]},
        )


def _oracle_checks(case: _Case, checks: Iterable[str]) -> None:
    t = case.t
    checks = set(checks)
    r = case.reg(t)
    pr = jewel_profile(t)
    if "sandwich" in checks:
        lo, hi = thm_lower(pr), thm_upper(pr)
        case.check("sandwich", lo <= r <= hi, "thm_lower <= reg <= thm_upper",
                   {"thm_lower": lo, "reg": r, "thm_upper": hi})
        est = estimate(t)
        case.check("sandwich", est.lower <= r <= est.upper, "estimate.lower <= reg <= estimate.upper",
                   {"lower": est.lower, "reg": r, "upper": est.upper})
    if "exactness" in checks:
        found = exact_rules(t)
        if found is not None:
            case.check("exactness", found[0] == r, f"rule {found[1]} is exact", {"rule": found[0], "reg": r})
        est = estimate(t)
        if est.exact is not None:
            case.check("exactness", est.exact == r, "estimate.exact == reg", {"exact": est.exact, "reg": r})
    if "jewel-free-iff" in checks:
        case.check("jewel-free-iff", (r == pr.iv + 1) == (pr.s == 0), "reg == iv+1 iff jewel-free",
                   {"reg": r, "iv": pr.iv, "s": pr.s})
    if "matsuda-murai" in checks:
        lo, hi = matsuda_murai_bounds(t)
        case.check("matsuda-murai", lo <= r <= hi, "spine <= reg <= n-1", {"spine": lo, "reg": r, "n-1": hi})
    if "betti-splitting" in checks:
        for u, v in t.sorted_edges():
            if t.degree(u) != 1 and t.degree(v) != 1:
                continue
            rest = delete_edge(t, u, v)
            rhs = max(case.reg(rest), case.reg(g_e_completion(rest, u, v)) + 1)
            case.check("betti-splitting", r == rhs, "reg G = max(reg G\\e, reg (G\\e)_e + 1)",
                       {"edge": [u, v], "lhs": r, "rhs": rhs})
    if "additivity" in checks:
        pieces = split_with_labels(t)
        if len(pieces) > 1:
            total = sum(case.reg(p) for p, _ in pieces)
            case.check("additivity", r == total, "reg adds over a free-vertex decomposition",
                       {"reg": r, "sum": total})
    if "gluing" in checks and t.n <= GLUING_BASE_MAX:
        for v in t.vertices:
            for s in (2, 3):
                lhs = case.reg(attach_star_via_leaf(t, v, s))
                rhs = 1 + case.reg(attach_clique(t, v, s))
                case.check("gluing-star", lhs == rhs, "reg Gbar_s^v = 1 + reg G_s^v",
                           {"v": v, "s": s, "lhs": lhs, "rhs": rhs})
        for v in t.leaves():
            (w,) = t.neighbors(v)
            for s in (1, 2):
                for k in (2, 3):
                    lhs = case.reg(attach_clique(attach_pendants(t, v, s), v, k))
                    rhs = 1 + case.reg(attach_clique(delete_vertex(t, v), w, s + k))
                    case.check("gluing-leaf", lhs == rhs, "reg G_{s,t}^v = 1 + reg (G\\v)_{s+t}^w",
                               {"v": v, "s": s, "t": k, "lhs": lhs, "rhs": rhs})
    if "char" in checks and case.field != GF2:
        r2 = oracle_reg(t, GF2, max_vars=case.max_vars)
        if r2 != r:
            case.report.divergences.append(
                {"check": "char", "tree": encode_tree(t), "expected": "same over GF(2)",
                 "observed": {str(case.field.characteristic): r, "2": r2}}
            )
        case.report.checks["char"] = case.report.checks.get("char", 0) + 1


def check_tree(
    t: Tree,
    *,
    field: FieldSpec = DEFAULT_FIELD,
    max_vars: int = 20,
    formula_only: bool = False,
    checks: Iterable[str] = ALL_CHECKS,
) -> VerifyReport:
    report = VerifyReport(cases=1)
    case = _Case(t, report, field, max_vars)
    _formula_checks(case)
    if formula_only or t.n < 2 or 2 * t.n > max_vars:
        return report
    try:
        _oracle_checks(case, checks)
        report.oracle_cases = 1
    except OracleCapExceeded as exc:
        report.checks["skipped-cap"] = report.checks.get("skipped-cap", 0) + 1
        report.divergences.append({"check": "cap", "tree": encode_tree(t), "expected": "within cap",
                                   "observed": str(exc)})
    return report


def _run_one(args) -> VerifyReport:
    seq, n, kw = args
    t = random_tree(n, seq) if isinstance(seq, int) else _decode(seq, n)
    return check_tree(t, **kw)


def _decode(seq, n):
    from .graph import prufer_decode

    if n == 1:
        return Tree(1, frozenset())
    return prufer_decode(list(seq), n)


def corpus(random_count: int = 0, max_n: int = 8, seed: int = 0, exhaustive_n: int = 0):
    """Work items ``(seed_or_prufer, n)``: every labeled tree up to ``exhaustive_n``, then random ones."""
    items = []
    for n in range(2, exhaustive_n + 1):
        for t in all_labeled_trees(n):
            items.append((tuple(prufer_encode(t)), n))
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(2, max(2, max_n))
        items.append((rng.randrange(2**32), n))
    return items


def run_verify(
    random_count: int = 0,
    max_n: int = 8,
    seed: int = 0,
    exhaustive_n: int = 0,
    *,
    field: FieldSpec = DEFAULT_FIELD,
    max_vars: int = 20,
    formula_only: bool = False,
    checks: Iterable[str] = ALL_CHECKS,
    jobs: int = 1,
) -> VerifyReport:
    kw = dict(field=field, max_vars=max_vars, formula_only=formula_only, checks=tuple(checks))
    work = [(s, n, kw) for s, n in corpus(random_count, max_n, seed, exhaustive_n)]
    report = VerifyReport()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for part in pool.map(_run_one, work, chunksize=16):
                report.merge(part)
    else:
        for item in work:
            report.merge(_run_one(item))
    return report
