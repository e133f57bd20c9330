"""Discretized controllability matrix and controlling centrality.

The centrality of node ``o`` is the generic rank of
``W_c = [G_T...G_2 H_1, ..., G_T H_{T-1}, H_T]`` with
``G_k = I + T_k A'_k`` and ``H_k = T_k b_o``. Generic rank is measured by
evaluating every free parameter at a random point of GF(p) and taking the
best of several trials; an unlucky draw can only lower the rank.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .gf import DEFAULT_PRIME, FieldAssignment, derive_seed, generic_rank
from .temporal_graph import TemporalNetwork


@dataclass(frozen=True)
class CentralityConfig:
    prime: int = DEFAULT_PRIME
    trials: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass
class CentralityReport:
    node: int
    centrality: int
    trials: int
    ranks: list[int] = field(default_factory=list)


def assignment_for(
    net: TemporalNetwork, node: int, trial: int, config: CentralityConfig
) -> FieldAssignment:
    seed = derive_seed(config.seed, node, trial)
    return FieldAssignment.random(len(net.symbols), net.horizon, seed, config.prime)


def assemble_wc(
    net: TemporalNetwork, controlled_node, assignment: FieldAssignment
) -> np.ndarray:
    """``W_c`` as an ``N x T`` object array of field elements.

    All columns advance together: when snapshot ``j`` is applied, only the
    columns ``k < j`` (inputs already injected) are touched. Each contact
    costs one pass over those columns, so the total is ``O(T * |events|)``.
    """
    o = net.index(controlled_node)
    N, T, p = net.n_nodes, net.horizon, assignment.prime
    state = [[0] * T for _ in range(N)]
    state[o] = [assignment.interval(k) for k in range(1, T + 1)]
    for j in range(2, T + 1):
        snap = net.snapshots[j]
        if not snap:
            continue
        h = assignment.interval(j)
        active = j - 1
        deltas: dict[int, list[int]] = {}
        for u, v, pid in snap:
            w = assignment[pid] * h % p
            su, sv = state[u], state[v]
            du = deltas.setdefault(u, [0] * active)
            dv = deltas.setdefault(v, [0] * active)
            for k in range(active):
                if sv[k]:
                    du[k] += w * sv[k]
                if su[k]:
                    dv[k] += w * su[k]
        for i, d in deltas.items():
            row = state[i]
            for k in range(active):
                if d[k]:
                    row[k] = (row[k] + d[k]) % p
    return np.array(state, dtype=object).reshape(N, T)


def wc_rank(net: TemporalNetwork, controlled_node, assignment: FieldAssignment) -> int:
    return generic_rank(assemble_wc(net, controlled_node, assignment), assignment.prime)


def controlling_centrality(
    net: TemporalNetwork, controlled_node, config: CentralityConfig | None = None
) -> CentralityReport:
    config = config or CentralityConfig()
    o = net.index(controlled_node)
    ranks = [wc_rank(net, o, assignment_for(net, o, k, config)) for k in range(config.trials)]
    return CentralityReport(o, max(ranks), config.trials, ranks)


def _centrality_job(args):
    net, node, config = args
    return controlling_centrality(net, node, config)


def all_centralities(
    net: TemporalNetwork, config: CentralityConfig | None = None, workers: int = 1
) -> list[CentralityReport]:
    """Reports for every node, in node order."""
    config = config or CentralityConfig()
    jobs = [(net, i, config) for i in net.nodes]
    if workers <= 1:
        return [_centrality_job(j) for j in jobs]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(_centrality_job, jobs))


def solve_mod(a: list[list[int]], b: list[int], p: int) -> list[int] | None:
    """One solution of ``a x = b`` over GF(p), or None if inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[x % p for x in a[i]] + [b[i] % p] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][n] for i in range(r, m)):
        return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def steer_inputs(wc: np.ndarray, target: list[int], prime: int) -> list[int] | None:
    """Input sequence ``u`` with ``W_c u = target`` over GF(p).

    A diagnostic for the controllable subspace: any target in the column
    span of ``W_c`` is reachable from the zero state, others return None.
    """
    a = [[int(x) for x in row] for row in wc]
    return solve_mod(a, list(target), prime)


def controllable_rows(wc: np.ndarray, prime: int) -> list[int]:
    """Greedy maximal set of linearly independent rows of ``W_c``."""
    chosen: list[int] = []
    for i in range(wc.shape[0]):
        if generic_rank(wc[chosen + [i]], prime) == len(chosen) + 1:
            chosen.append(i)
    return chosen
