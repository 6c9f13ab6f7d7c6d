"""Serializable analysis reports and DOT export."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bounds import RegularityEstimate, estimate, matsuda_murai_bounds, thm_lower, thm_upper
from .graph import Tree, validate_tree
from .jewels import JewelProfile, jewel_profile

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AnalyzeReport:
    n: int
    edges: tuple[tuple[int, int], ...]
    profile: JewelProfile
    mm_lower: int
    mm_upper: int
    iv_lower: int
    thm_lower: int
    thm_upper: int
    estimate: RegularityEstimate

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "profile": self.profile.to_dict(),
            "bounds": {
                "mm_lower": self.mm_lower,
                "mm_upper": self.mm_upper,
                "iv_lower": self.iv_lower,
                "thm_lower": self.thm_lower,
                "thm_upper": self.thm_upper,
            },
            "estimate": self.estimate.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "AnalyzeReport":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        b = d["bounds"]
        return cls(
            n=d["n"],
            edges=tuple(tuple(e) for e in d["edges"]),
            profile=JewelProfile.from_dict(d["profile"]),
            mm_lower=b["mm_lower"],
            mm_upper=b["mm_upper"],
            iv_lower=b["iv_lower"],
            thm_lower=b["thm_lower"],
            thm_upper=b["thm_upper"],
            estimate=RegularityEstimate.from_dict(d["estimate"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "AnalyzeReport":
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        pr = self.profile
        est = self.estimate
        rows = [
            ("vertices", self.n),
            ("internal vertices iv", pr.iv),
            ("jewel centers (c, D)", ", ".join(f"({c}, {d})" for c, d in pr.centers) or "-"),
            ("s / D_G", f"{pr.s} / {pr.d_g}"),
            ("center components", ", ".join(map(str, pr.components)) or "-"),
            ("p / e_G", f"{pr.p} / {pr.e_g}"),
            ("C_G (mu)", f"{list(pr.c_g)} ({pr.mu})"),
            ("Matsuda-Murai", f"{self.mm_lower} <= reg <= {self.mm_upper}"),
            ("iv + 1", self.iv_lower),
            ("theorem bounds", f"{self.thm_lower} <= reg <= {self.thm_upper}"),
            ("estimate", f"[{est.lower}, {est.upper}]"),
            ("exact", est.exact if est.exact is not None else "unknown"),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines.append("trace:")
        for step in est.trace:
            span = f"{step.piece[0]}..{step.piece[-1]}" if len(step.piece) > 1 else str(step.piece[0])
            lines.append(f"  {step.rule:<18} piece {span:<10} {step.contribution}")
        return "\n".join(lines)


def analyze_tree(t: Tree) -> AnalyzeReport:
    t = validate_tree(t)
    pr = jewel_profile(t)
    lo, hi = matsuda_murai_bounds(t)
    return AnalyzeReport(
        n=t.n,
        edges=tuple(t.sorted_edges()),
        profile=pr,
        mm_lower=lo,
        mm_upper=hi,
        iv_lower=pr.iv + 1,
        thm_lower=thm_lower(pr),
        thm_upper=thm_upper(pr),
        estimate=estimate(t),
    )


def to_dot(t: Tree, name: str = "T") -> str:
    """DOT rendering with jewel centers filled and ``C_G`` vertices boxed."""
    t = validate_tree(t)
    pr = jewel_profile(t)
    centers = dict(pr.centers)
    cg = set(pr.c_g)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in t.vertices:
        if v in centers:
            lines.append(f'  {v} [style=filled, fillcolor="gold", label="{v}\\nD={centers[v]}"];')
        elif v in cg:
            lines.append(f'  {v} [shape=box, style=filled, fillcolor="lightblue"];')
        else:
            lines.append(f"  {v};")
    for u, v in t.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
