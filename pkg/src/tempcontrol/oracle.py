"""Brute-force references for small instances.

These take deliberately different routes from the engine: dense matrix
products over the rationals with fraction-free elimination for ranks, and
boolean powers of the full TOG adjacency matrix for reachability.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .temporal_graph import TemporalNetwork
from .tog import CONTROLLER, build_tog


class OracleRefusal(ValueError):
    """Instance exceeds the oracle's size caps."""


@dataclass(frozen=True)
class OracleConfig:
    max_nodes: int = 10
    max_horizon: int = 8
    trials: int = 3
    seed: int = 0
    value_range: int = 10**6

    def check(self, net: TemporalNetwork) -> None:
        if net.n_nodes > self.max_nodes or net.horizon > self.max_horizon:
            raise OracleRefusal(
                f"oracle capped at N<={self.max_nodes}, T<={self.max_horizon}; "
                f"got N={net.n_nodes}, T={net.horizon}"
            )


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        for i in range(rank + 1, m):
            ai = a[i]
            a[i] = [(pr[c] * ai[j] - ai[c] * pr[j]) // prev for j in range(n)]
        prev = pr[c]
        rank += 1
        if rank == m:
            break
    return rank


def _rational_wc(net: TemporalNetwork, o: int, rng: random.Random, span: int) -> list[list[int]]:
    N, T = net.n_nodes, net.horizon
    vals = [Fraction(rng.randint(1, span), rng.randint(1, span)) for _ in net.events]
    gs = []
    for t in range(1, T + 1):
        g = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
        for u, v, pid in net.snapshots[t]:
            g[u][v] += vals[pid]
            g[v][u] += vals[pid]
        gs.append(g)

    def matmul(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(N)) for j in range(N)] for i in range(N)]

    cols = []
    for k in range(1, T + 1):
        prod = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
        for j in range(T, k, -1):
            prod = matmul(prod, gs[j - 1])
        cols.append([prod[i][o] for i in range(N)])
    # clear denominators column by column; rank is unchanged
    out = []
    for col in cols:
        d = lcm(*(x.denominator for x in col))
        out.append([int(x * d) for x in col])
    return [list(r) for r in zip(*out)]


def brute_rank_wc(net: TemporalNetwork, o, config: OracleConfig | None = None) -> int:
    """Reference centrality: max rank over rational random valuations."""
    config = config or OracleConfig()
    config.check(net)
    o = net.index(o)
    rng = random.Random(config.seed * 1_000_003 + o)
    return max(
        bareiss_rank(_rational_wc(net, o, rng, config.value_range)) for _ in range(config.trials)
    )


def tog_adjacency(net: TemporalNetwork, source) -> tuple[np.ndarray, dict]:
    tog = build_tog(net, source)
    index = {v: i for i, v in enumerate(tog.vertices())}
    adj = np.zeros((len(index), len(index)), dtype=bool)
    for e in tog.edges():
        adj[index[(e.tail, e.layer)], index[(e.head, e.layer + 1)]] = True
    return adj, index


def _bool_power(a: np.ndarray, k: int) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=bool)
    base = a.copy()
    while k:
        if k & 1:
            result = (result.astype(np.int64) @ base.astype(np.int64)) > 0
        base = (base.astype(np.int64) @ base.astype(np.int64)) > 0
        k >>= 1
    return result


def brute_reachability(
    net: TemporalNetwork, source, t0: int, config: OracleConfig | None = None
) -> set[int]:
    """Nodes whose last-layer copy is hit by the ``(T+1-t0)``-th power row of the controller copy."""
    config = config or OracleConfig()
    config.check(net)
    T = net.horizon
    if not 0 <= t0 <= T:
        raise ValueError(f"t0 must be in 0..{T}")
    adj, index = tog_adjacency(net, source)
    row = _bool_power(adj, T + 1 - t0)[index[(CONTROLLER, t0)]]
    return {i for i in net.nodes if row[index[(i, T + 1)]]}
