"""The nine acceptance criteria, one test each.

Every test records a line in RESULTS (printed as a pass/fail table at the end
of the run by conftest.py) and prints the same line immediately.
"""

import random
import time
from contextlib import contextmanager

from beireg.bounds import family_gstm_reg, gstm_member, thm_lower, thm_upper
from beireg.cli import FAMILY_CASES, example_fig2, example_gamma
from beireg.constructions import jewel_tree
from beireg.graph import (
    all_labeled_trees,
    complete_graph,
    delete_edge,
    g_e_completion,
    path_graph,
    random_tree,
    star_graph,
)
from beireg.jewels import jewel_profile
from beireg.oracle import oracle_reg
from beireg.verify import check_tree

RESULTS: dict[int, tuple[bool, str, float, str]] = {}


@contextmanager
def criterion(num: int, desc: str, budget: float | None = None):
    info = {"detail": ""}
    t0 = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        secs = time.perf_counter() - t0
        if ok and budget is not None and secs > budget:
            ok = False
            info["detail"] += f" over budget {budget:.0f}s"
        RESULTS[num] = (ok, desc, secs, info["detail"].strip())
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {desc}  ({secs:.1f}s) {info['detail'].strip()}")
    if budget is not None:
        assert secs <= budget, f"criterion {num} took {secs:.1f}s > {budget}s"


def test_criterion_1_fig2_tree():
    with criterion(1, "fig2 tree (two adjacent centers): thm_lower = thm_upper = exact = 12", budget=1.0) as info:
        res = example_fig2()
        info["detail"] = f"lower={res['thm_lower']} upper={res['thm_upper']} exact={res['exact']}"
        assert res["thm_lower"] == res["thm_upper"] == res["exact"] == 12


def test_criterion_2_gamma_table():
    with criterion(2, "Gamma_v table d=3..6: thm_upper = 5d - floor((d+1)/3), gap to 5d grows", budget=1.0) as info:
        rows = example_gamma(range(3, 7))
        uppers = [r["thm_upper"] for r in rows]
        gaps = [r["star_bound"] - r["thm_upper"] for r in rows]
        info["detail"] = f"upper={uppers} gaps={gaps}"
        assert uppers == [14, 19, 23, 28]
        assert all(r["thm_upper"] == 5 * r["d"] - (r["d"] + 1) // 3 for r in rows)
        assert gaps == sorted(gaps) and gaps[-1] > gaps[0]


def test_criterion_3_oracle_anchors():
    with criterion(3, "oracle anchors: P_n -> n-1, K_1r -> 2, K_t -> 1", budget=30.0) as info:
        got = {}
        for n in range(2, 7):
            got[f"P{n}"] = (oracle_reg(path_graph(n)), n - 1)
        for r in range(2, 5):
            got[f"K1,{r}"] = (oracle_reg(star_graph(r)), 2)
        for t in (3, 4):
            got[f"K{t}"] = (oracle_reg(complete_graph(t)), 1)
        bad = {k: v for k, v in got.items() if v[0] != v[1]}
        info["detail"] = f"{len(got)} anchors, {len(bad)} wrong"
        assert not bad, bad


def test_criterion_4_exhaustive_sandwich():
    with criterion(4, "every labeled tree on <= 7 vertices: sandwich and jewel-free iff", budget=600.0) as info:
        count = 0
        violations = []
        for n in range(2, 8):
            for t in all_labeled_trees(n):
                r = oracle_reg(t)
                pr = jewel_profile(t)
                lo, hi = thm_lower(pr), thm_upper(pr)
                if not lo <= r <= hi or (r == pr.iv + 1) != (pr.s == 0):
                    violations.append((t.sorted_edges(), lo, r, hi))
                count += 1
        info["detail"] = f"{count} trees, {len(violations)} violations"
        assert count == sum(n ** (n - 2) for n in range(2, 8))
        assert not violations, violations[:5]


def test_criterion_5_one_jewel():
    with criterion(5, "10-vertex jewel: oracle = 6 = iv + D(c) - 1", budget=600.0) as info:
        t = jewel_tree()
        pr = jewel_profile(t)
        r = oracle_reg(t, max_vars=20)
        formula = pr.iv + pr.centers[0][1] - 1
        info["detail"] = f"oracle={r} formula={formula}"
        assert r == formula == 6


def test_criterion_6_betti_splitting():
    with criterion(6, "pendant-edge splitting recursion on 50 seeded trees, n <= 7", budget=900.0) as info:
        rng = random.Random(2024)
        edges_checked = 0
        violations = []
        for _ in range(50):
            n = rng.randint(2, 7)
            t = random_tree(n, rng.randrange(2**32))
            r = oracle_reg(t)
            for u, v in t.sorted_edges():
                if t.degree(u) != 1 and t.degree(v) != 1:
                    continue
                rest = delete_edge(t, u, v)
                rhs = max(oracle_reg(rest), oracle_reg(g_e_completion(rest, u, v)) + 1)
                edges_checked += 1
                if r != rhs:
                    violations.append((t.sorted_edges(), (u, v), r, rhs))
        info["detail"] = f"{edges_checked} pendant edges, {len(violations)} violations"
        assert edges_checked >= 50
        assert not violations, violations[:5]


def test_criterion_7_gluing_lemmas():
    with criterion(7, "gluing identities (star vs clique; clique+whiskers at a leaf), bases <= 5 vertices") as info:
        star = leaf = 0
        failures = []
        for n in range(2, 6):
            for seed in range(3):
                rep = check_tree(random_tree(n, seed), checks=("gluing",), max_vars=40)
                star += rep.checks.get("gluing-star", 0)
                leaf += rep.checks.get("gluing-leaf", 0)
                failures += rep.failures
        info["detail"] = f"star-lemma {star}, leaf-lemma {leaf}, {len(failures)} violations"
        assert star >= 10 and leaf >= 10
        assert not failures, failures[:3]


def test_criterion_8_family():
    with criterion(8, "G(s,t,m;c) minimal members: oracle = 2s + t") as info:
        rows = []
        for s, t, m in FAMILY_CASES:
            g = gstm_member(s, t, m)
            rows.append((s, t, m, oracle_reg(g, max_vars=2 * g.n), family_gstm_reg(s, t, m)))
        bad = [r for r in rows if r[3] != r[4]]
        info["detail"] = f"{len(rows)} members, {len(bad)} wrong"
        assert len(rows) == 8 and not bad, bad


def test_criterion_9_formula_order():
    with criterion(9, "thm_upper >= thm_lower on 10000 random trees, n <= 40", budget=10.0) as info:
        rng = random.Random(9)
        bad = 0
        for _ in range(10_000):
            t = random_tree(rng.randint(1, 40), rng.randrange(2**32))
            pr = jewel_profile(t)
            bad += thm_upper(pr) < thm_lower(pr)
        info["detail"] = f"{bad} violations"
        assert bad == 0
