"""Prime-field arithmetic: random parameter valuations and exact rank."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

# 2**61 - 1 (Mersenne prime)
DEFAULT_PRIME = 2305843009213693951


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def derive_seed(*parts: int) -> np.random.SeedSequence:
    """Order-independent child seed for e.g. ``(master, node, trial)``."""
    return np.random.SeedSequence([int(p) & 0xFFFFFFFFFFFFFFFF for p in parts])


@dataclass(frozen=True)
class FieldAssignment:
    """A valuation of every free parameter in ``GF(prime)``.

    ``intervals[k-1]`` is the sampling interval of snapshot ``k``; unit
    steps by default.
    """

    prime: int
    values: tuple[int, ...]
    intervals: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.prime <= 10**6 or not is_prime(self.prime):
            raise ValueError(f"modulus must be a prime > 1e6, got {self.prime}")
        if any(not 0 < v < self.prime for v in self.values):
            raise ValueError("parameter values must lie in [1, p-1]")
        if any(h <= 0 for h in self.intervals):
            raise ValueError("sampling intervals must be positive")

    @classmethod
    def random(
        cls,
        n_params: int,
        horizon: int,
        seed=None,
        prime: int = DEFAULT_PRIME,
        intervals: Sequence[int] | None = None,
    ) -> "FieldAssignment":
        """Uniform nonzero values; ``seed`` may be an int or a SeedSequence."""
        rng = np.random.default_rng(seed)
        vals = rng.integers(1, prime, size=n_params, dtype=np.uint64) if prime < 2**63 else None
        if vals is None:
            r = random.Random(int(rng.integers(2**63)))
            values = tuple(r.randrange(1, prime) for _ in range(n_params))
        else:
            values = tuple(int(v) for v in vals)
        if intervals is None:
            intervals = (1,) * horizon
        elif len(intervals) != horizon:
            raise ValueError("need one sampling interval per snapshot")
        plain_seed = seed if isinstance(seed, int) else None
        return cls(prime, values, tuple(int(h) for h in intervals), plain_seed)

    def __getitem__(self, pid: int) -> int:
        return self.values[pid]

    def interval(self, t: int) -> int:
        return self.intervals[t - 1] % self.prime

    def scaled(self, factor: int) -> "FieldAssignment":
        """Same values with every sampling interval multiplied by ``factor``."""
        return FieldAssignment(
            self.prime, self.values, tuple(h * factor for h in self.intervals), self.seed
        )


def _as_rows(matrix, p: int) -> list[list[int]]:
    if hasattr(matrix, "toarray"):
        matrix = matrix.toarray()
    rows = []
    for row in matrix:
        r = [int(x) % p for x in row]
        if any(r):
            rows.append(r)
    return rows


def generic_rank(matrix, prime: int = DEFAULT_PRIME) -> int:
    """Exact rank of ``matrix`` over ``GF(prime)`` by Gaussian elimination.

    Accepts nested sequences, numpy arrays (any integer or object dtype)
    or scipy sparse matrices. Entries are reduced modulo ``prime``.
    """
    p = prime
    rows = _as_rows(matrix, p)
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        prow = [x * inv % p for x in prow]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass
class RankTrials:
    """Ranks from several independent valuations; max is the generic rank."""

    ranks: list[int] = field(default_factory=list)

    @property
    def best(self) -> int:
        return max(self.ranks)

    @property
    def mode(self) -> int:
        vals = sorted(set(self.ranks))
        return max(vals, key=lambda r: (self.ranks.count(r), r))
