"""Temporal trees, their taxonomy, and analytic bounds on controlling centrality.

Tree ``t`` (1-based) is the projection of the BFS spanning tree of the TOG
rooted at the controller copy that feeds input ``t``, so its reachability
vector is the counterpart of column ``t`` of ``W_c``. Trees are split into

* a heterogeneous family: trees whose structural pattern is unique. Trees
  sharing a node set form same-node groups, the rest one different-node
  group.
* a homogeneous family: one group per repeated pattern, split into
  interdependent subgroups (connected by shared timed contacts) and one
  independent subgroup.

Node counts in the rank formulas exclude the controller, whose row is zero.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .gf import FieldAssignment
from .temporal_graph import TemporalNetwork
from .tog import bfs_spanning_tree, build_tog

logger = logging.getLogger(__name__)


class TaxonomyError(ValueError):
    """A group handed to a rank formula violates the formula's hypothesis."""


@dataclass(frozen=True)
class TemporalTree:
    """Network-level projection of one BFS spanning tree.

    ``paths[x]`` lists the contact parameter ids on the tree path from the
    controlled node to ``x`` (empty for the controlled node itself).
    """

    t: int
    controlled: int
    paths: dict
    parents: dict

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(self.paths)

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def pattern(self) -> frozenset[tuple[int, int]]:
        return frozenset((par, child) for child, (par, _) in self.parents.items())

    @property
    def interactions(self) -> frozenset[int]:
        return frozenset(pid for _, pid in self.parents.values())

    def reachability_vector(self, assignment: FieldAssignment, n_nodes: int) -> list[int]:
        """Path products; index 0 is the (zero) controller entry."""
        p = assignment.prime
        vec = [0] * (n_nodes + 1)
        for x, path in self.paths.items():
            val = 1
            for pid in path:
                val = val * assignment[pid] % p
            vec[x + 1] = val
        return vec


def tree_from_parents(t: int, controlled: int, parents: dict) -> TemporalTree:
    """Build a tree from ``{child: (parent, pid)}``; paths follow by walking up."""
    paths = {controlled: ()}

    def walk(x):
        if x not in paths:
            par, pid = parents[x]
            paths[x] = walk(par) + (pid,)
        return paths[x]

    for x in parents:
        walk(x)
    return TemporalTree(t, controlled, paths, dict(parents))


def project(spanning, controlled: int, t: int) -> TemporalTree:
    """Collapse a TOG spanning tree onto network nodes (first arrival wins)."""
    parents = {}
    for (node, layer), (pvertex, pid) in sorted(spanning.parent.items(), key=lambda kv: kv[0][1]):
        if pid is None or node in parents or node == controlled:
            continue
        parents[node] = (pvertex[0], pid)
    return tree_from_parents(t, controlled, parents)


def extract_trees(net: TemporalNetwork, controlled_node) -> list[TemporalTree]:
    """Trees ``TT_1..TT_T``; ``TT_t`` is rooted at the controller copy of layer ``t``."""
    tog = build_tog(net, controlled_node)
    o = tog.controlled
    return [project(bfs_spanning_tree(tog, t), o, t) for t in range(1, net.horizon + 1)]


def tree_matrix(
    trees: Sequence[TemporalTree], assignment: FieldAssignment, n_nodes: int
) -> np.ndarray:
    """``W^R``: reachability vectors as columns, ``(N+1) x len(trees)``."""
    cols = [tr.reachability_vector(assignment, n_nodes) for tr in trees]
    if not cols:
        return np.zeros((n_nodes + 1, 0), dtype=object)
    return np.array(cols, dtype=object).T


# -- taxonomy ---------------------------------------------------------------


@dataclass
class Subgroup:
    trees: list[TemporalTree]
    shared: frozenset[int] = frozenset()
    independent: bool = False

    def __len__(self) -> int:
        return len(self.trees)


@dataclass
class HomogeneousGroup:
    pattern: frozenset
    n_nodes: int
    interdependent: list[Subgroup]
    independent: Subgroup

    @property
    def trees(self) -> list[TemporalTree]:
        out = [tr for sg in self.interdependent for tr in sg.trees]
        return out + list(self.independent.trees)


@dataclass
class HeterogeneousGroup:
    trees: list[TemporalTree]
    same_nodes: bool

    def __len__(self) -> int:
        return len(self.trees)


@dataclass
class TreeTaxonomy:
    heterogeneous: list[HeterogeneousGroup] = field(default_factory=list)
    homogeneous: list[HomogeneousGroup] = field(default_factory=list)

    @property
    def n_heterogeneous(self) -> int:
        return sum(len(g) for g in self.heterogeneous)

    @property
    def n_homogeneous(self) -> int:
        return sum(len(g.trees) for g in self.homogeneous)

    def leaves(self) -> list[tuple[str, int, int, list[TemporalTree], int, int]]:
        """``(family, group_id, subgroup_id, trees, |V|, |I|)`` per leaf."""
        out = []
        for gi, g in enumerate(self.heterogeneous):
            fam = "het-same" if g.same_nodes else "het-diff"
            nv = max(tr.size for tr in g.trees)
            out.append((fam, gi, 0, g.trees, nv, 0))
        for gi, g in enumerate(self.homogeneous):
            for si, sg in enumerate(g.interdependent):
                out.append(("hom-inter", gi, si, sg.trees, g.n_nodes, len(sg.shared)))
            if g.independent.trees:
                out.append(
                    ("hom-indep", gi, len(g.interdependent), g.independent.trees, g.n_nodes, 0)
                )
        return out

    def to_csv(self) -> str:
        lines = ["tree_t,family,group_id,subgroup_id,n_nodes,n_shared"]
        rows = []
        for fam, gi, si, trees, nv, ni in self.leaves():
            for tr in trees:
                rows.append((tr.t, fam, gi, si, nv, ni))
        for r in sorted(rows):
            lines.append(",".join(str(x) for x in r))
        return "\n".join(lines) + "\n"


def _components(trees: list[TemporalTree]) -> list[list[TemporalTree]]:
    """Connected components of the shares-a-timed-contact relation."""
    parent = list(range(len(trees)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, tr in enumerate(trees):
        for pid in tr.interactions:
            if pid in owner:
                parent[find(i)] = find(owner[pid])
            else:
                owner[pid] = i
    comps: dict[int, list[TemporalTree]] = defaultdict(list)
    for i, tr in enumerate(trees):
        comps[find(i)].append(tr)
    return sorted(comps.values(), key=lambda c: c[0].t)


def classify(trees: Sequence[TemporalTree]) -> TreeTaxonomy:
    by_pattern: dict[frozenset, list[TemporalTree]] = defaultdict(list)
    for tr in trees:
        by_pattern[tr.pattern].append(tr)
    tax = TreeTaxonomy()

    singles = [b[0] for b in by_pattern.values() if len(b) == 1]
    by_nodes: dict[frozenset, list[TemporalTree]] = defaultdict(list)
    for tr in singles:
        by_nodes[tr.nodes].append(tr)
    different = []
    for group in by_nodes.values():
        if len(group) >= 2:
            tax.heterogeneous.append(HeterogeneousGroup(sorted(group, key=lambda x: x.t), True))
        else:
            different.extend(group)
    tax.heterogeneous.sort(key=lambda g: g.trees[0].t)
    if different:
        tax.heterogeneous.append(HeterogeneousGroup(sorted(different, key=lambda x: x.t), False))

    for pattern, bucket in by_pattern.items():
        if len(bucket) < 2:
            continue
        bucket = sorted(bucket, key=lambda x: x.t)
        inter, indep = [], []
        for comp in _components(bucket):
            if len(comp) == 1:
                indep.extend(comp)
                continue
            shared = frozenset.intersection(*(tr.interactions for tr in comp))
            inter.append(Subgroup(comp, shared))
        tax.homogeneous.append(
            HomogeneousGroup(pattern, bucket[0].size, inter, Subgroup(indep, independent=True))
        )
    tax.homogeneous.sort(key=lambda g: g.trees[0].t if g.trees else 0)
    return tax


# -- rank formulas ----------------------------------------------------------


def rank_het_same_nodes(group: Sequence[TemporalTree]) -> int:
    """``min(|V|, n)`` for heterogeneous trees over one node set."""
    if not group:
        raise TaxonomyError("empty group")
    return min(group[0].size, len(group))


def rank_het_diff_nodes(group: Sequence[TemporalTree]) -> int:
    """Group size; node sets must be pairwise distinct."""
    sets = [tr.nodes for tr in group]
    if len(set(sets)) != len(sets):
        raise TaxonomyError("duplicate node sets in a different-node group")
    return len(group)


def rank_independent(subgroup: Sequence[TemporalTree], n_nodes: int) -> int:
    return min(n_nodes, len(subgroup))


def rank_interdependent(subgroup: Sequence[TemporalTree], n_nodes: int, shared: int) -> int:
    """``min(|V| - |I|, n)`` where ``I`` is the set of contacts all members share."""
    if shared < 1:
        raise TaxonomyError("interdependent subgroup without shared contacts")
    return min(n_nodes - shared, len(subgroup))


def rank_homogeneous_group(group: HomogeneousGroup) -> int:
    """Closed-form rank of one homogeneous group.

    ``min(min(sum_w r_w, max_w(|V| - |I_w|)) + r_indep, |V|)``. A connected
    subgroup whose members share no contact common to all of them falls
    back to the independent cap ``min(|V|, n)``.
    """
    nv = group.n_nodes
    ranks, caps = [], []
    for sg in group.interdependent:
        if sg.shared:
            ranks.append(rank_interdependent(sg.trees, nv, len(sg.shared)))
            caps.append(nv - len(sg.shared))
        else:
            logger.debug("subgroup %s has empty common contact set", [t.t for t in sg.trees])
            ranks.append(rank_independent(sg.trees, nv))
            caps.append(nv)
    inter = min(sum(ranks), max(caps)) if ranks else 0
    indep = rank_independent(group.independent.trees, nv) if group.independent.trees else 0
    return min(inter + indep, nv)


def heterogeneous_group_rank(group: HeterogeneousGroup) -> int:
    if group.same_nodes:
        return rank_het_same_nodes(group.trees)
    return rank_het_diff_nodes(group.trees)


def bounds_heterogeneous(tax: TreeTaxonomy) -> tuple[int, int]:
    ranks = [heterogeneous_group_rank(g) for g in tax.heterogeneous]
    return (max(ranks, default=0), sum(ranks))


def bounds_homogeneous(tax: TreeTaxonomy) -> tuple[int, int]:
    ranks = [rank_homogeneous_group(g) for g in tax.homogeneous]
    return (max(ranks, default=0), sum(ranks))


@dataclass
class BoundsReport:
    node: int
    lower: int
    upper: int
    het: tuple[int, int]
    hom: tuple[int, int]
    het_ranks: list[int]
    hom_ranks: list[int]

    @property
    def gap(self) -> int:
        return self.upper - self.lower


def bounds_total(tax: TreeTaxonomy, n_nodes: int, node: int = -1) -> BoundsReport:
    het = bounds_heterogeneous(tax)
    hom = bounds_homogeneous(tax)
    lower = max(het[0], hom[0])
    upper = min(het[1] + hom[1], n_nodes)
    return BoundsReport(
        node,
        lower,
        upper,
        het,
        hom,
        [heterogeneous_group_rank(g) for g in tax.heterogeneous],
        [rank_homogeneous_group(g) for g in tax.homogeneous],
    )


def node_bounds(net: TemporalNetwork, node) -> BoundsReport:
    o = net.index(node)
    return bounds_total(classify(extract_trees(net, o)), net.n_nodes, o)
