"""Bernoulli random temporal networks.

Every unordered pair flips an independent coin of bias ``p`` at every
snapshot. Each snapshot draws from its own stream seeded by
``(seed, t)``, so snapshots can be generated in any order or in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import derive_seed
from .temporal_graph import ContactEvent, TemporalNetwork


@dataclass(frozen=True)
class SynthConfig:
    n_nodes: int
    p: float
    horizon: int
    seed: int = 0

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ValueError("need at least two nodes")
        if not 0 <= self.p < 1:
            raise ValueError("contact probability must be in [0, 1)")
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "SynthConfig":
        """From ``"N,p,T"``."""
        try:
            n, p, t = text.split(",")
            return cls(int(n), float(p), int(t), seed)
        except ValueError as exc:
            raise ValueError(f"expected N,p,T, got {text!r}") from exc


def snapshot_contacts(config: SynthConfig, t: int) -> list[tuple[int, int]]:
    n = config.n_nodes
    iu, iv = np.triu_indices(n, k=1)
    rng = np.random.default_rng(derive_seed(config.seed, t))
    hit = rng.random(iu.size) < config.p
    return list(zip(iu[hit].tolist(), iv[hit].tolist()))


def generate(config: SynthConfig) -> TemporalNetwork:
    events = [
        ContactEvent(t, u, v)
        for t in range(1, config.horizon + 1)
        for u, v in snapshot_contacts(config, t)
    ]
    labels = [str(i) for i in range(config.n_nodes)]
    return TemporalNetwork(labels, config.horizon, events)
