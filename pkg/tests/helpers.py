"""Shared instance builders for the test-suite."""

from __future__ import annotations

import random

from tempcontrol.gf import FieldAssignment, generic_rank
from tempcontrol.temporal_graph import ContactEvent, TemporalNetwork, from_contacts
from tempcontrol.trees import TemporalTree, tree_from_parents, tree_matrix

TABLE_I = {
    ("A", "B"): [1, 2, 3, 4],
    ("B", "C"): [4, 6],
    ("C", "D"): [2, 3],
    ("D", "E"): [3, 4, 5, 6],
    ("E", "F"): [1, 3],
    ("B", "F"): [5, 6],
    ("C", "F"): [4, 5, 6],
}

# Contact letters follow the worked example's weight labels: a=(A,B), b=(A,C),
# c=(B,C), d=(B,D); the digit after the letter is the snapshot.
FIG3 = [(1, "A", "B"), (2, "A", "B"), (3, "B", "C"), (4, "B", "D"), (4, "A", "C")]


def table_i_text() -> str:
    rows = sorted((t, u, v) for (u, v), ts in TABLE_I.items() for t in ts)
    return "".join(f"{t}\t{u}\t{v}\n" for t, u, v in rows)


def fig3_network() -> TemporalNetwork:
    return from_contacts(FIG3, labels="ABCD")


def random_network(rng: random.Random, max_n=10, max_t=8, p_range=(0.05, 0.5)) -> TemporalNetwork:
    n = rng.randint(1, max_n)
    horizon = rng.randint(1, max_t)
    p = rng.uniform(*p_range)
    events = [
        ContactEvent(t, u, v)
        for t in range(1, horizon + 1)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return TemporalNetwork([f"n{i}" for i in range(n)], horizon, events)


# -- synthetic tree families -------------------------------------------------


class Params:
    """Hands out fresh parameter ids."""

    def __init__(self):
        self.count = 0

    def fresh(self) -> int:
        self.count += 1
        return self.count - 1


def random_parents(rng: random.Random, nodes: list[int]) -> dict[int, int]:
    """Random rooted tree on ``nodes`` (root ``nodes[0]``) as ``{child: parent}``."""
    order = [nodes[0]] + rng.sample(nodes[1:], len(nodes) - 1)
    return {x: rng.choice(order[:i]) for i, x in enumerate(order) if i}


def family_rank(trees: list[TemporalTree], n_params: int, n_nodes: int, seed: int = 0) -> int:
    best = 0
    for k in range(3):
        a = FieldAssignment.random(max(n_params, 1), 1, seed * 7 + k)
        best = max(best, generic_rank(tree_matrix(trees, a, n_nodes)))
    return best


def fig4_family(kind: str, n_trees: int) -> tuple[list[TemporalTree], int]:
    """Trees over A=0 -> B=1 -> {C=2, D=3, F=4} as drawn for independent (a),
    three-shared (b) and two-shared (c) families."""
    params = Params()
    shared = {x: params.fresh() for x in (2, 3, 4)}
    trees = []
    for i in range(n_trees):
        a = params.fresh()
        if kind == "a":
            kids = {x: params.fresh() for x in (2, 3, 4)}
        elif kind == "b":
            kids = dict(shared)
        elif kind == "c":
            kids = {2: shared[2], 3: shared[3], 4: params.fresh()}
        else:
            raise ValueError(kind)
        parents = {1: (0, a), **{x: (1, pid) for x, pid in kids.items()}}
        trees.append(tree_from_parents(i + 1, 0, parents))
    return trees, params.count


def prop3_family(rng: random.Random, share: float = 0.5):
    """Same node set, pairwise distinct patterns, each tree owning >= 1 private edge."""
    k = rng.randint(2, 7)
    nodes = list(range(k))
    n = rng.randint(1, 9)
    params = Params()
    edge_pid: dict[tuple[int, int], int] = {}
    patterns, trees = set(), []
    attempts = 0
    while len(trees) < n and attempts < 200:
        attempts += 1
        par = random_parents(rng, nodes)
        pat = frozenset((p, c) for c, p in par.items())
        if pat in patterns:
            continue
        patterns.add(pat)
        private = rng.choice(list(par))
        parents = {}
        for c, p in par.items():
            if c == private:
                parents[c] = (p, params.fresh())
            elif (p, c) in edge_pid and rng.random() < share:
                parents[c] = (p, edge_pid[(p, c)])
            else:
                parents[c] = (p, params.fresh())
                edge_pid.setdefault((p, c), parents[c][1])
        trees.append(tree_from_parents(len(trees) + 1, 0, parents))
    return trees, params.count, k


def prop4_family(rng: random.Random, share: float = 0.5):
    """Nested, pairwise distinct node sets (as produced by leading trees)."""
    n_total = rng.randint(2, 9)
    sizes = sorted(rng.sample(range(1, n_total + 1), rng.randint(1, n_total)))
    order = [0] + rng.sample(range(1, n_total), n_total - 1)
    params = Params()
    edge_pid: dict[tuple[int, int], int] = {}
    trees = []
    for i, s in enumerate(sizes):
        par = random_parents(rng, order[:s])
        parents = {}
        for c, p in par.items():
            if (p, c) in edge_pid and rng.random() < share:
                parents[c] = (p, edge_pid[(p, c)])
            else:
                parents[c] = (p, params.fresh())
                edge_pid.setdefault((p, c), parents[c][1])
        trees.append(tree_from_parents(i + 1, 0, parents))
    rng.shuffle(trees)
    return trees, params.count, n_total


def homogeneous_family(rng: random.Random, n_shared: int | None):
    """One random pattern repeated; ``n_shared`` edges common to all trees
    (None means fully independent trees)."""
    k = rng.randint(2, 8)
    par = random_parents(rng, list(range(k)))
    n = rng.randint(2 if n_shared else 1, 9)
    params = Params()
    edges = sorted(par.items())
    shared_edges = set()
    if n_shared:
        shared_edges = {c for c, _ in rng.sample(edges, min(n_shared, len(edges)))}
    shared_pid = {c: params.fresh() for c in shared_edges}
    trees = []
    for i in range(n):
        parents = {
            c: (p, shared_pid[c] if c in shared_edges else params.fresh()) for c, p in edges
        }
        trees.append(tree_from_parents(i + 1, 0, parents))
    return trees, params.count, k, len(shared_edges)
