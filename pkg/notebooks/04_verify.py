"""
Cross-checking the formulas against the oracle
==============================================

A small verify run: every labeled tree on up to 5 vertices plus a batch of
random ones, with every oracle-backed check switched on.  Then a
formula-only sweep over large trees.

Run:  python notebooks/04_verify.py
"""

import json
import time

from beireg import run_verify

t0 = time.perf_counter()
rep = run_verify(random_count=30, max_n=7, seed=1, exhaustive_n=5)
print(f"{rep.cases} cases in {time.perf_counter() - t0:.1f}s")
print(json.dumps(rep.checks, indent=1, sort_keys=True))
print("failures:", rep.failures)
print("GF(2) vs GF(32003) divergences:", rep.divergences)

t0 = time.perf_counter()
rep = run_verify(random_count=10_000, max_n=40, seed=9, formula_only=True)
print(f"formula-only: {rep.cases} trees, {len(rep.failures)} failures, {time.perf_counter() - t0:.1f}s")
