import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import Params, family_rank, fig4_family, random_network, random_parents
from tempcontrol.controllability import controlling_centrality
from tempcontrol.gf import FieldAssignment
from tempcontrol.temporal_graph import TemporalNetwork
from tempcontrol.trees import (
    HeterogeneousGroup,
    HomogeneousGroup,
    Subgroup,
    TaxonomyError,
    TreeTaxonomy,
    bounds_heterogeneous,
    bounds_homogeneous,
    bounds_total,
    classify,
    extract_trees,
    node_bounds,
    rank_het_diff_nodes,
    rank_het_same_nodes,
    rank_homogeneous_group,
    rank_independent,
    rank_interdependent,
    tree_from_parents,
)


def _relabel(trees, offset, t0=0):
    out = []
    for tr in trees:
        parents = {c: (p, pid + offset) for c, (p, pid) in tr.parents.items()}
        out.append(tree_from_parents(tr.t + t0, tr.controlled, parents))
    return out


def test_fig3_tree_vectors(fig3):
    trees = extract_trees(fig3, "A")
    assert [tr.t for tr in trees] == [1, 2, 3, 4]
    a = FieldAssignment.random(len(fig3.symbols), fig3.horizon, 8)
    p = a.prime
    a21, c31, d41 = (a[fig3.symbols[k]] for k in [(2, 0, 1), (3, 1, 2), (4, 1, 3)])
    assert trees[0].reachability_vector(a, 4) == [0, 1, a21, a21 * c31 % p, a21 * d41 % p]
    assert trees[3].reachability_vector(a, 4) == [0, 1, 0, 0, 0]
    assert trees[1].paths == trees[2].paths == {0: (), 2: (fig3.symbols[(4, 0, 2)],)}


def test_no_contacts_trees():
    net = TemporalNetwork(list("abc"), 4, [])
    trees = extract_trees(net, "b")
    assert len(trees) == 4
    assert all(tr.nodes == {1} and not tr.pattern for tr in trees)
    assert (bounds_total(classify(trees), 3).lower, bounds_total(classify(trees), 3).upper) == (1, 1)


def test_fig3_taxonomy(fig3):
    tax = classify(extract_trees(fig3, "A"))
    assert len(tax.heterogeneous) == 1
    het = tax.heterogeneous[0]
    assert not het.same_nodes and [tr.t for tr in het.trees] == [1, 4]
    assert len(tax.homogeneous) == 1
    (sub,) = tax.homogeneous[0].interdependent
    assert [tr.t for tr in sub.trees] == [2, 3] and len(sub.shared) == 1
    assert not tax.homogeneous[0].independent.trees
    assert bounds_heterogeneous(tax) == (2, 2)
    assert bounds_homogeneous(tax) == (1, 1)


def test_fig3_bounds(fig3):
    rep = node_bounds(fig3, "A")
    assert (rep.lower, rep.upper) == (2, 3)
    assert rep.lower <= controlling_centrality(fig3, "A").centrality <= rep.upper


def test_fig3_het_rank_matches_field(fig3):
    trees = extract_trees(fig3, "A")
    pair = [trees[0], trees[3]]
    assert rank_het_diff_nodes(pair) == 2 == family_rank(pair, len(fig3.symbols), 4)


def test_fig4a_independent():
    trees, n = fig4_family("a", 2)
    tax = classify(trees)
    assert not tax.heterogeneous and len(tax.homogeneous) == 1
    g = tax.homogeneous[0]
    assert not g.interdependent and len(g.independent) == 2
    assert rank_independent(g.independent.trees, 5) == 2 == family_rank(trees, n, 5)


@pytest.mark.parametrize("kind,n_trees,shared,expected", [("b", 2, 3, 2), ("c", 2, 2, 2), ("b", 6, 3, 2)])
def test_fig4_interdependent(kind, n_trees, shared, expected):
    trees, n = fig4_family(kind, n_trees)
    (g,) = classify(trees).homogeneous
    (sub,) = g.interdependent
    assert len(sub.shared) == shared
    assert rank_interdependent(sub.trees, 5, shared) == expected == family_rank(trees, n, 5)


def test_fig4b_union_fig4c():
    b, nb = fig4_family("b", 2)
    c, nc = fig4_family("c", 2)
    # the c-subgroup reuses the b-subgroup's shared contacts towards C and D
    shared_b = b[0].parents
    c = [
        tree_from_parents(tr.t + 2, 0, {**tr.parents, 2: shared_b[2], 3: shared_b[3]})
        for tr in _relabel(c, nb)
    ]
    group = HomogeneousGroup(
        b[0].pattern,
        5,
        [
            Subgroup(b, frozenset(b[0].interactions & b[1].interactions)),
            Subgroup(c, frozenset(c[0].interactions & c[1].interactions)),
        ],
        Subgroup([], independent=True),
    )
    assert [len(s.shared) for s in group.interdependent] == [3, 2]
    assert rank_homogeneous_group(group) == 3 == family_rank(b + c, nb + nc, 5)


def test_homogeneous_only_independent():
    trees, _ = fig4_family("a", 2)
    group = HomogeneousGroup(trees[0].pattern, 5, [], Subgroup(trees, independent=True))
    assert rank_homogeneous_group(group) == 2


def _same_node_trees(n_trees, k, seed, distinct=True):
    rng = random.Random(seed)
    params = Params()
    trees, seen = [], set()
    while len(trees) < n_trees:
        par = random_parents(rng, list(range(k)))
        pat = frozenset(par.items())
        if distinct and pat in seen:
            continue
        seen.add(pat)
        trees.append(tree_from_parents(len(trees) + 1, 0, {c: (p, params.fresh()) for c, p in par.items()}))
    return trees, params.count


def test_het_same_nodes():
    # three nodes admit only three distinct patterns rooted at o
    trees, n = _same_node_trees(5, 3, 1, distinct=False)
    assert rank_het_same_nodes(trees) == 3 == family_rank(trees, n, 3)
    trees, n = _same_node_trees(6, 4, 1)
    assert rank_het_same_nodes(trees) == 4 == family_rank(trees, n, 4)
    trees, n = _same_node_trees(2, 4, 2)
    assert rank_het_same_nodes(trees) == 2 == family_rank(trees, n, 4)
    assert rank_het_same_nodes(trees[:1]) == 1
    with pytest.raises(TaxonomyError):
        rank_het_same_nodes([])


def test_het_diff_nodes():
    params = Params()
    trees = [
        tree_from_parents(1, 0, {}),
        tree_from_parents(2, 0, {1: (0, params.fresh())}),
        tree_from_parents(3, 0, {1: (0, params.fresh()), 2: (1, params.fresh())}),
    ]
    assert rank_het_diff_nodes(trees) == 3 == family_rank(trees, params.count, 3)
    assert rank_het_diff_nodes(trees[:1]) == 1
    with pytest.raises(TaxonomyError):
        rank_het_diff_nodes([trees[1], tree_from_parents(4, 0, {1: (0, params.fresh())})])


def test_independent_caps_at_node_count():
    trees, _ = fig4_family("a", 7)
    assert rank_independent(trees, 5) == 5
    assert rank_independent(trees[:1], 5) == 1


def test_interdependent_requires_shared():
    trees, _ = fig4_family("b", 2)
    with pytest.raises(TaxonomyError):
        rank_interdependent(trees, 5, 0)


def test_bounds_heterogeneous_direct():
    assert bounds_heterogeneous(TreeTaxonomy()) == (0, 0)
    same, _ = _same_node_trees(3, 4, 3)
    params = Params()
    diff = [tree_from_parents(10, 0, {}), tree_from_parents(11, 0, {1: (0, params.fresh())})]
    tax = TreeTaxonomy([HeterogeneousGroup(same, True), HeterogeneousGroup(diff, False)])
    assert bounds_heterogeneous(tax) == (3, 5)


def test_taxonomy_csv(fig3):
    text = classify(extract_trees(fig3, "A")).to_csv()
    lines = text.splitlines()
    assert lines[0] == "tree_t,family,group_id,subgroup_id,n_nodes,n_shared"
    assert lines[1:] == ["1,het-diff,0,0,4,0", "2,hom-inter,0,0,2,1", "3,hom-inter,0,0,2,1", "4,het-diff,0,0,4,0"]


def test_disjoint_subgroups_formula_never_overshoots():
    """Subgroups with private shared contacts (what the classifier produces):
    the closed form may undershoot the field rank but never exceeds it."""
    rng = random.Random(7)
    for i in range(150):
        k = rng.randint(2, 6)
        par = sorted(random_parents(rng, list(range(k))).items())
        params = Params()
        subs, t = [], 0
        for _ in range(rng.randint(1, 4)):
            sh = {c for c, _ in rng.sample(par, rng.randint(1, len(par)))}
            spid = {c: params.fresh() for c in sh}
            trees = []
            for _ in range(rng.randint(2, 5)):
                t += 1
                trees.append(
                    tree_from_parents(t, 0, {c: (p, spid[c] if c in sh else params.fresh()) for c, p in par})
                )
            subs.append(Subgroup(trees, frozenset(spid.values())))
        group = HomogeneousGroup(frozenset(par), k, subs, Subgroup([], independent=True))
        assert rank_homogeneous_group(group) <= family_rank(group.trees, params.count, k, i)


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_leading_tree_monotone(seed):
    net = random_network(random.Random(seed), max_n=9, max_t=8)
    o = seed % net.n_nodes
    sets = [tr.nodes for tr in extract_trees(net, o)]
    assert all(a >= b for a, b in zip(sets, sets[1:]))


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_sandwich(seed):
    net = random_network(random.Random(seed), max_n=9, max_t=8)
    o = seed % net.n_nodes
    rep = node_bounds(net, o)
    assert rep.lower <= controlling_centrality(net, o).centrality <= rep.upper


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_taxonomy_partitions_trees(seed):
    net = random_network(random.Random(seed), max_n=9, max_t=8)
    trees = extract_trees(net, seed % net.n_nodes)
    tax = classify(trees)
    ts = sorted(tr.t for *_, leaf, _, _ in tax.leaves() for tr in leaf)
    assert ts == [tr.t for tr in trees]
