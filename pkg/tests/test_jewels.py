import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beireg.constructions import caterpillar, fig2_tree, gamma_tree, jewel_tree, two_jewel_chain
from beireg.graph import GraphError, attach_pendants, path_graph, random_tree, spine, split_with_labels, star_graph, validate_tree
from beireg.jewels import (
    JewelProfile,
    d_value,
    is_caterpillar,
    jewel_profile,
    jewel_subgraph,
    n_geq,
    trim_caterpillars,
)
from beireg.oracle import oracle_reg

trees = st.builds(lambda n, seed: random_tree(n, seed), st.integers(2, 30), st.integers(0, 10**6))


def test_n_geq_examples():
    assert n_geq(path_graph(4), 2, 2) == {3}
    assert n_geq(star_graph(3), 1, 3) == frozenset()
    assert n_geq(fig2_tree(), 1, 3) == {2, 3, 4, 5}


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_profile_path(n):
    pr = jewel_profile(validate_tree(path_graph(n)))
    assert (pr.s, pr.d_g, pr.p, pr.e_g, pr.mu, pr.iv) == (0, 0, 0, 0, 0, n - 2)


def test_profile_jewel():
    pr = jewel_profile(jewel_tree())
    assert pr.iv == 4 and pr.centers == ((1, 3),)
    assert (pr.s, pr.d_g, pr.p, pr.components, pr.e_g, pr.mu) == (1, 3, 1, (1,), 0, 0)


def test_profile_fig2():
    pr = jewel_profile(fig2_tree())
    assert pr.iv == 8 and pr.centers == ((1, 4), (2, 4))
    assert (pr.s, pr.d_g, pr.p, pr.components, pr.e_g, pr.mu) == (2, 8, 1, (2,), 1, 0)


def test_profile_two_jewel_chain():
    pr = jewel_profile(two_jewel_chain())
    assert pr.iv == 7 and pr.s == 2 and pr.d_g == 6 and pr.p == 2 and pr.e_g == 0
    assert pr.c_g == (2,) and pr.mu == 1


def test_profile_gamma():
    pr = jewel_profile(gamma_tree(3))
    assert pr.iv == 10  # 3d + 1
    assert pr.s == 4 and pr.d_g == 12


@given(trees)
@settings(max_examples=200)
def test_profile_invariants(t):
    pr = jewel_profile(t)
    assert sum(pr.components) == pr.s == len(pr.centers)
    assert pr.p == len(pr.components)
    assert pr.d_g == sum(d for _, d in pr.centers)
    assert all(d >= 3 and d_value(t, c) == d for c, d in pr.centers)
    centers = {c for c, _ in pr.centers}
    for v in pr.c_g:
        assert t.degree(v) == 3 and d_value(t, v) == 2 and n_geq(t, v, 3) <= centers
    assert pr.e_g == sum(1 for k in pr.components if k == 2)
    assert JewelProfile.from_dict(pr.to_dict()) == pr


def test_jewel_subgraph():
    g, labels = jewel_subgraph(jewel_tree(), 1)
    assert g.n == 10 and labels == list(range(1, 11))
    g, labels = jewel_subgraph(fig2_tree(), 1)
    assert g.n == 14 and set(labels) == set(range(1, 15))
    with pytest.raises(GraphError):
        jewel_subgraph(validate_tree(star_graph(3)), 1)


def test_is_caterpillar():
    assert is_caterpillar(validate_tree(path_graph(5))) == 4
    assert is_caterpillar(validate_tree(star_graph(3))) == 2
    assert is_caterpillar(jewel_tree()) is None
    assert is_caterpillar(caterpillar([3, 4, 2, 5])) == 5


# ---------------------------------------------------------------- trimming

def test_trim_caterpillar_with_long_spine():
    t = caterpillar([3, 3, 3, 3])
    tr = trim_caterpillars(t)
    assert tr.length_credit > 0
    assert oracle_reg(tr.trimmed, max_vars=24) + tr.length_credit == 5 == oracle_reg(t, max_vars=24)


def test_trim_leaves_small_cases_alone():
    for t in (validate_tree(path_graph(4)), jewel_tree()):
        tr = trim_caterpillars(t)
        assert tr.length_credit == 0 and tr.trimmed == t and not tr.replaced


def test_trim_star_size_counts_caterpillar_leaves():
    # hanging at leaf 1 through 2: internal spine 2, 3, 4 and leaves 5..9
    t = caterpillar([3, 4, 3])
    tr = trim_caterpillars(t)
    (r,) = tr.replaced
    assert (r.vertex, r.spine_length) == (1, 4)
    assert r.star_size == (3 + 4 + 3) - 2 * 4 + 3 == 5
    assert tr.length_credit == 2 and tr.trimmed.n == 6 and tr.trimmed.degree(2) == 5


@given(st.integers(4, 9), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_trim_preserves_regularity(n, seed):
    t = random_tree(n, seed)
    tr = trim_caterpillars(t)
    if tr.length_credit == 0 or 2 * tr.trimmed.n > 22:
        return
    assert oracle_reg(tr.trimmed, max_vars=22) + tr.length_credit == oracle_reg(t, max_vars=22)


@given(trees)
@settings(max_examples=200)
def test_trim_preserves_centers_off_the_caterpillar(t):
    tr = trim_caterpillars(t)
    after = {tr.labels[c - 1]: d for c, d in jewel_profile(tr.trimmed).centers}
    attach = {r.vertex: r.star_size for r in tr.replaced}
    surviving = set(tr.labels) - {None}
    for c, d in jewel_profile(t).centers:
        if c not in surviving:
            continue
        if c in attach and attach[c] < 3:
            continue
        assert c in after
        if c in attach:
            assert after[c] == d


# ---------------------------------------------------------------- structural remarks

@given(trees)
@settings(max_examples=300)
def test_one_jewel_degree_bound(t):
    pr = jewel_profile(t)
    if pr.s != 1:
        return
    c = pr.centers[0][0]
    assert all(d_value(t, v) <= 2 for v in t.vertices if v != c)


def test_one_jewel_degree_bound_on_family():
    pr = jewel_profile(jewel_tree())
    assert all(d_value(jewel_tree(), v) <= 2 for v in range(2, 11)) and pr.s == 1


def _without_degree_two(t):
    g = t
    for v in [v for v in t.vertices if t.degree(v) == 2]:
        g = attach_pendants(g, v, 1)
    return validate_tree(g)


def test_spine_vertices_two_in_are_centers():
    checked = 0
    for seed in range(3000):
        t = _without_degree_two(random_tree(6 + seed % 25, seed))
        pr = jewel_profile(t)
        if pr.s == 0 or trim_caterpillars(t).length_credit:
            continue
        vs = spine(t).vertices
        centers = {c for c, _ in pr.centers}
        assert vs[2] in centers and vs[-3] in centers, t.sorted_edges()
        checked += 1
    assert checked >= 20


def test_spine_vertices_two_in_are_centers_examples():
    for t in (jewel_tree(), fig2_tree(), gamma_tree(3)):
        vs = spine(t).vertices
        centers = {c for c, _ in jewel_profile(t).centers}
        assert vs[2] in centers and vs[-3] in centers


@given(trees)
@settings(max_examples=200)
def test_each_jewel_lies_in_one_piece(t):
    pieces = [set(labels) for _, labels in split_with_labels(t)]
    for c, _ in jewel_profile(t).centers:
        _, vs = jewel_subgraph(t, c)
        assert any(set(vs) <= p for p in pieces)
