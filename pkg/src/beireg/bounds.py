"""Closed-form regularity bounds for trees and the estimation pipeline.

All values refer to ``reg(S/J_G)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    SimpleGraph,
    Tree,
    attach_clique,
    attach_pendants,
    attach_star_via_leaf,
    spine,
    split_with_labels,
    validate_tree,
)
from .jewels import JewelProfile, is_caterpillar, jewel_profile, trim_caterpillars


def matsuda_murai_bounds(t: Tree) -> tuple[int, int]:
    """``(l, n-1)`` with ``l`` the spine length; every tree path is induced."""
    t = validate_tree(t)
    return spine(t).length, t.n - 1


def _profile(t) -> JewelProfile:
    return t if isinstance(t, JewelProfile) else jewel_profile(t)


def thm_upper(t: Tree | JewelProfile) -> int:
    pr = _profile(t)
    return pr.iv + 1 + pr.d_g - 2 * pr.s - pr.e_g - sum(k // 3 for k in pr.components)


def thm_lower(t: Tree | JewelProfile) -> int:
    pr = _profile(t)
    value = pr.iv + 1 + pr.d_g - 3 * pr.s - pr.mu + pr.p
    other = pr.iv + 1 + pr.d_g - 2 * pr.s - pr.mu - sum(k - 1 for k in pr.components)
    assert value == other, (value, other)
    return value


RULE_ORDER = ("one-jewel", "corollary", "caterpillar", "jewel-free")


class RuleConflict(AssertionError):
    pass


def applicable_rules(t: Tree) -> dict[str, int]:
    """Every exact-regularity rule that applies to ``t``, with its value."""
    t = validate_tree(t)
    pr = jewel_profile(t)
    out: dict[str, int] = {}
    if t.n >= 2:
        if pr.s >= 1 and pr.mu == 0 and all(k <= 2 for k in pr.components):
            out["corollary"] = pr.iv + 1 + pr.d_g - 2 * pr.s - pr.e_g
        if pr.s == 1:
            out["one-jewel"] = pr.iv + pr.centers[0][1] - 1
        if pr.s == 0:
            out["jewel-free"] = pr.iv + 1
    l = is_caterpillar(t)
    if l is not None:
        out["caterpillar"] = l
    return out


def exact_rules(t: Tree) -> tuple[int, str] | None:
    """First applicable rule in :data:`RULE_ORDER`; overlapping rules must agree."""
    rules = applicable_rules(t)
    if not rules:
        return None
    if len(set(rules.values())) > 1:
        raise RuleConflict(f"exact rules disagree on {validate_tree(t).sorted_edges()}: {rules}")
    name = next(r for r in RULE_ORDER if r in rules)
    return rules[name], name


def family_gstm_reg(s: int, t: int, m: int) -> int:
    """Regularity ``2s + t`` of the family ``G(s, t, m; c)``."""
    if min(s, t, m) < 0:
        raise ValueError("family parameters must be non-negative")
    if s + t < 2:
        raise ValueError("the formula needs s + t >= 2")
    return 2 * s + t


def gstm_member(s: int, t: int, m: int, star_size: int = 3, clique_size: int = 3) -> SimpleGraph:
    """A member of ``G(s, t, m; c)`` with center ``c = 1``.

    Glues ``s`` stars ``K_{1,star_size}`` by a leaf, ``t`` cliques
    ``K_{clique_size}`` and ``m`` whiskers at vertex 1.
    """
    if star_size < 3 or clique_size < 3:
        raise ValueError("stars need >= 3 leaves and cliques >= 3 vertices")
    g = SimpleGraph(1, frozenset())
    for _ in range(s):
        g = attach_star_via_leaf(g, 1, star_size)
    for _ in range(t):
        g = attach_clique(g, 1, clique_size)
    return attach_pendants(g, 1, m)


# ---------------------------------------------------------------- pipeline

@dataclass(frozen=True)
class TraceStep:
    rule: str
    piece: tuple[int, ...]
    contribution: str

    def to_dict(self) -> dict:
        return {"rule": self.rule, "piece": list(self.piece), "contribution": self.contribution}

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        return cls(d["rule"], tuple(d["piece"]), d["contribution"])


@dataclass(frozen=True)
class RegularityEstimate:
    lower: int
    upper: int
    exact: int | None = None
    trace: tuple[TraceStep, ...] = field(default=())

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")
        if self.exact is not None and not self.lower == self.exact == self.upper:
            raise ValueError("an exact value must close the interval")

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "trace": [s.to_dict() for s in self.trace],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RegularityEstimate":
        return cls(d["lower"], d["upper"], d["exact"], tuple(TraceStep.from_dict(s) for s in d["trace"]))


def _piece_estimate(piece: Tree, labels: list[int], trace: list[TraceStep]) -> tuple[int, int, bool]:
    ident = tuple(labels)
    trim = trim_caterpillars(piece)
    credit = trim.length_credit
    for r in trim.replaced:
        trace.append(
            TraceStep(
                "caterpillar-trim",
                ident,
                f"+{r.spine_length - 2} (spine {r.spine_length} at vertex "
                f"{labels[r.vertex - 1] if r.vertex else '?'} -> star K_1,{r.star_size})",
            )
        )
    core = trim.trimmed
    found = exact_rules(core)
    if found is not None:
        value, name = found
        trace.append(TraceStep(name, ident, f"{value}"))
        return value + credit, value + credit, True
    lo_mm, hi_mm = matsuda_murai_bounds(core)
    lo, hi = max(thm_lower(core), lo_mm), min(thm_upper(core), hi_mm)
    exact = lo == hi
    trace.append(TraceStep("bounds", ident, f"[{lo}, {hi}]" + (" (coincide)" if exact else "")))
    return lo + credit, hi + credit, exact


def estimate(t: Tree) -> RegularityEstimate:
    """Split at degree-2 vertices, trim caterpillars, then apply rules or bounds per piece."""
    t = validate_tree(t)
    if t.n == 1:
        return RegularityEstimate(0, 0, 0, (TraceStep("edgeless", (1,), "0"),))
    pieces = split_with_labels(t)
    trace: list[TraceStep] = []
    if len(pieces) > 1:
        trace.append(TraceStep("degree-2-split", tuple(t.vertices), f"{len(pieces)} pieces"))
    lo = hi = 0
    all_exact = True
    for piece, labels in pieces:
        a, b, ex = _piece_estimate(piece, labels, trace)
        lo += a
        hi += b
        all_exact &= ex
    if len(pieces) > 1:
        trace.append(TraceStep("gluing-sum", tuple(t.vertices), f"[{lo}, {hi}]"))
    return RegularityEstimate(lo, hi, lo if all_exact else None, tuple(trace))
