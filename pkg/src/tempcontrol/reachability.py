"""Controller rows of the dynamic communicability matrices and W*.

Row vectors have length ``N + 1``: index 0 is the controller, index
``i + 1`` is network node ``i``. The discount scalars of the real-valued
communicability matrix are fixed to 1; they only rescale free parameters
and leave every generic rank unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldAssignment, generic_rank
from .temporal_graph import TemporalNetwork


@dataclass(frozen=True)
class AugmentedSnapshot:
    """Sparse pattern of ``A*_t``: controller row on top of ``A_t``.

    ``entries`` holds ``(row, col, pid)`` with ``pid=None`` for the fixed
    controller entry ``(0, o+1)``.
    """

    t: int
    size: int
    entries: tuple[tuple[int, int, int | None], ...]

    @classmethod
    def build(cls, net: TemporalNetwork, controlled: int, t: int) -> "AugmentedSnapshot":
        o = net.index(controlled)
        entries = [(0, o + 1, None)]
        for u, v, pid in net.snapshots[t]:
            entries.append((u + 1, v + 1, pid))
            entries.append((v + 1, u + 1, pid))
        return cls(t, net.n_nodes + 1, tuple(entries))

    def pattern(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=bool)
        for r, c, _ in self.entries:
            m[r, c] = True
        return m


def _step_row(row: list[int], net: TemporalNetwork, t: int, values, p: int) -> list[int]:
    """``row @ (I* + A*_t)`` for a row with zero controller entry."""
    out = list(row)
    for u, v, pid in net.snapshots[t]:
        w = values[pid]
        out[v + 1] = (out[v + 1] + row[u + 1] * w) % p
        out[u + 1] = (out[u + 1] + row[v + 1] * w) % p
    return out


def communicability_row(
    net: TemporalNetwork, controlled_node, t: int, assignment: FieldAssignment
) -> list[int]:
    """Controller row of ``Q_t = (I*+A*_t)(I*+A*_{t+1})...(I*+A*_T)`` in GF(p)."""
    T = net.horizon
    if not 1 <= t <= T:
        raise ValueError(f"start time must be in 1..{T}, got {t}")
    o = net.index(controlled_node)
    p = assignment.prime
    # row 0 of (I* + A*_t) is the injection e_{o+1}; snapshot t itself is unused
    row = [0] * (net.n_nodes + 1)
    row[o + 1] = 1
    for j in range(t + 1, T + 1):
        row = _step_row(row, net, j, assignment.values, p)
    return row


def communicability_pattern(net: TemporalNetwork, controlled_node, t: int) -> set[int]:
    """Nonzero support of the controller row of ``Q_t`` as network node ids.

    Every entry is a sum of path monomials with unit coefficients, so the
    boolean propagation is the exact symbolic support.
    """
    return reachable_set(net, controlled_node, t)


@dataclass(frozen=True)
class ReachabilityMatrix:
    """``W*`` over GF(p): column ``t`` is the transposed controller row of ``Q_t``."""

    values: np.ndarray  # (N+1) x T, object dtype of Python ints
    pattern: np.ndarray  # (N+1) x T, bool
    prime: int

    def rank(self) -> int:
        return generic_rank(self.values, self.prime)

    @property
    def wc_block(self) -> np.ndarray:
        return self.values[1:]

    def to_csv(self, labels) -> str:
        """Zero/nonzero pattern, one row per node."""
        T = self.values.shape[1]
        lines = ["row," + ",".join(str(t) for t in range(1, T + 1))]
        names = ["I", *labels]
        for name, prow in zip(names, self.pattern):
            lines.append(name + "," + ",".join("1" if x else "0" for x in prow))
        return "\n".join(lines) + "\n"


def assemble_w_star(
    net: TemporalNetwork, controlled_node, assignment: FieldAssignment
) -> ReachabilityMatrix:
    T = net.horizon
    cols = [communicability_row(net, controlled_node, t, assignment) for t in range(1, T + 1)]
    values = np.array(cols, dtype=object).T
    pattern = np.zeros(values.shape, dtype=bool)
    for t in range(1, T + 1):
        for i in communicability_pattern(net, controlled_node, t):
            pattern[i + 1, t - 1] = True
    return ReachabilityMatrix(values, pattern, assignment.prime)


def reachable_set(net: TemporalNetwork, source, from_time: int) -> set[int]:
    """Nodes whose final-layer copy is reachable from ``source`` entering at ``from_time``.

    The source is injected at layer ``from_time + 1``, so contacts at
    snapshots ``from_time + 1 .. T`` carry it, one hop per snapshot.
    """
    T = net.horizon
    if not 0 <= from_time <= T:
        raise ValueError(f"from_time must be in 0..{T}")
    s = net.index(source)
    reached = {s}
    for t in range(from_time + 1, T + 1):
        new = set(reached)
        for u, v, _ in net.snapshots[t]:
            if u in reached:
                new.add(v)
            if v in reached:
                new.add(u)
        reached = new
    return reached
