import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beireg.bounds import (
    RULE_ORDER,
    RegularityEstimate,
    applicable_rules,
    estimate,
    exact_rules,
    family_gstm_reg,
    gstm_member,
    matsuda_murai_bounds,
    thm_lower,
    thm_upper,
)
from beireg.constructions import caterpillar, fig2_tree, gamma_tree, jewel_tree, two_jewel_chain
from beireg.graph import SimpleGraph, path_graph, random_tree, split_at_degree_two, star_graph, validate_tree
from beireg.jewels import jewel_profile, trim_caterpillars
from beireg.oracle import oracle_reg

trees = st.builds(lambda n, seed: random_tree(n, seed), st.integers(1, 40), st.integers(0, 10**9))


def T(g):
    return validate_tree(g)


def test_matsuda_murai_examples():
    assert matsuda_murai_bounds(T(path_graph(4))) == (3, 3)
    assert matsuda_murai_bounds(T(star_graph(3))) == (2, 3)
    assert matsuda_murai_bounds(fig2_tree()) == (5, 19)


def test_fig2_bounds():
    assert thm_upper(fig2_tree()) == 12
    assert thm_lower(fig2_tree()) == 12


def test_jewel_bounds():
    assert thm_lower(jewel_tree()) == 6
    assert thm_upper(jewel_tree()) == 6


@pytest.mark.parametrize("d,upper,lower", [(3, 14, 12), (4, 19, 16), (5, 23, 20), (6, 28, 24)])
def test_gamma_bounds(d, upper, lower):
    t = gamma_tree(d)
    assert thm_upper(t) == upper == 5 * d - (d + 1) // 3
    assert thm_lower(t) == lower
    assert jewel_profile(t).iv == 3 * d + 1


def test_jewel_free_bounds_collapse():
    for t in (T(path_graph(7)), T(star_graph(5)), caterpillar([3, 2, 4])):
        pr = jewel_profile(t)
        assert pr.s == 0
        assert thm_lower(t) == thm_upper(t) == pr.iv + 1


@given(trees)
@settings(max_examples=500)
def test_upper_at_least_lower(t):
    pr = jewel_profile(t)
    gap = thm_upper(pr) - thm_lower(pr)
    assert gap == sum(k - 1 - k // 3 for k in pr.components) - pr.e_g + pr.mu >= 0


# ---------------------------------------------------------------- exact rules

def test_exact_rules_examples():
    assert exact_rules(T(path_graph(6))) == (5, "caterpillar")
    assert applicable_rules(T(path_graph(6))) == {"caterpillar": 5, "jewel-free": 5}
    assert exact_rules(jewel_tree()) == (6, "one-jewel")
    assert applicable_rules(jewel_tree())["corollary"] == 6
    assert exact_rules(fig2_tree()) == (12, "corollary")
    assert exact_rules(two_jewel_chain()) is None


def test_rule_order_is_total():
    assert sorted(RULE_ORDER) == sorted({"one-jewel", "corollary", "caterpillar", "jewel-free"})


@given(trees)
@settings(max_examples=500)
def test_overlapping_rules_agree(t):
    if t.n < 2:
        return  # the closed forms assume at least one edge
    rules = applicable_rules(t)
    assert len(set(rules.values())) <= 1
    if rules:
        assert thm_lower(t) <= next(iter(rules.values())) <= thm_upper(t)


def test_family_formula():
    assert family_gstm_reg(2, 0, 0) == 4
    assert family_gstm_reg(0, 2, 1) == 2
    assert family_gstm_reg(3, 0, 0) == 6
    with pytest.raises(ValueError):
        family_gstm_reg(1, 0, 3)


def test_family_member_with_three_stars_is_the_jewel():
    g = T(gstm_member(3, 0, 0))
    pr = jewel_profile(g)
    assert pr.iv == 4 and pr.centers == ((1, 3),)
    assert exact_rules(g) == (6, "one-jewel") and family_gstm_reg(3, 0, 0) == 6


def test_family_member_shape():
    g = gstm_member(1, 1, 2)
    # hub, 3 star vertices, 2 clique vertices, 2 whiskers
    assert g.n == 1 + 3 + 2 + 2 and g.degree(1) == 1 + 2 + 2
    with pytest.raises(ValueError):
        gstm_member(1, 1, 0, star_size=2)


@pytest.mark.parametrize("s,t,m", [(0, 2, 0), (1, 1, 0), (2, 0, 1), (0, 3, 0)])
def test_family_matches_oracle(s, t, m):
    g = gstm_member(s, t, m)
    assert oracle_reg(g, max_vars=2 * g.n) == family_gstm_reg(s, t, m)


# ---------------------------------------------------------------- estimate

def test_estimate_fig2():
    est = estimate(fig2_tree())
    assert est.exact == 12
    assert [s.rule for s in est.trace] == ["corollary"]


def test_estimate_p4():
    est = estimate(T(path_graph(4)))
    assert est.exact == 3
    rules = [s.rule for s in est.trace]
    assert rules[0] == "degree-2-split" and rules[-1] == "gluing-sum" and rules.count("caterpillar") == 3


def test_estimate_two_jewel_chain():
    est = estimate(two_jewel_chain())
    assert (est.lower, est.upper, est.exact) == (9, 10, None)
    assert est.trace[-1].rule == "bounds"


def test_estimate_gamma():
    est = estimate(gamma_tree(3))
    assert est.lower >= 12 and est.upper <= 14


def test_estimate_single_vertex():
    est = estimate(T(SimpleGraph(1, frozenset())))
    assert est.exact == 0


def test_estimate_uses_caterpillar_credit():
    # jewel, then leaf 5 continues as a spine-3 caterpillar 5-11-12-14
    t = T(SimpleGraph.from_edges(list(jewel_tree().edges) + [(5, 11), (11, 12), (11, 13), (12, 14), (12, 15),
                                                              (12, 16)]))
    est = estimate(t)
    assert est.exact == 6 + 3
    rules = [s.rule for s in est.trace]
    assert rules == ["degree-2-split", "one-jewel", "caterpillar-trim", "caterpillar", "gluing-sum"]
    assert est.trace[2].contribution.startswith("+1")


def test_estimate_validation():
    with pytest.raises(ValueError):
        RegularityEstimate(3, 2)
    with pytest.raises(ValueError):
        RegularityEstimate(2, 4, 3)


@given(trees)
@settings(max_examples=300)
def test_estimate_within_theorem_bounds_and_additive(t):
    est = estimate(t)
    assert RegularityEstimate.from_dict(est.to_dict()) == est
    if t.n < 2:
        return
    lo_mm, hi_mm = matsuda_murai_bounds(t)
    assert lo_mm <= est.lower and est.upper <= hi_mm
    pieces = split_at_degree_two(t)
    parts = [estimate(p) for p in pieces]
    assert est.lower == sum(p.lower for p in parts)
    assert est.upper == sum(p.upper for p in parts)


@given(st.integers(2, 9), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_estimate_contains_oracle(n, seed):
    t = random_tree(n, seed)
    r = oracle_reg(t, max_vars=18)
    est = estimate(t)
    assert est.lower <= r <= est.upper
    if est.exact is not None:
        assert est.exact == r


def test_rules_consistent_exhaustive():
    from beireg.graph import all_labeled_trees

    for n in range(2, 8):
        for t in all_labeled_trees(n):
            exact_rules(t)  # raises RuleConflict on disagreement
