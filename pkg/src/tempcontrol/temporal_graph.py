"""Temporal network data model and contact-list ingestion."""

from __future__ import annotations

import io
import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, TextIO

logger = logging.getLogger(__name__)

_SPLIT = re.compile(r"[,\t ]+")


class ParseError(ValueError):
    """Raised for malformed contact-list input."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class ContactEvent:
    """An undirected contact between nodes ``u < v`` at snapshot ``t``."""

    t: int
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("self-contact")
        if self.t < 1:
            raise ValueError(f"snapshot index must be >= 1, got {self.t}")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)


class SymbolTable:
    """One free parameter per timed contact.

    Ids are dense ``0..len-1`` in the sorted order of events. Both
    directions of a contact resolve to the same id.
    """

    def __init__(self, events: Iterable[ContactEvent]):
        self.events: tuple[ContactEvent, ...] = tuple(sorted(set(events)))
        self._ids = {e: i for i, e in enumerate(self.events)}

    def __len__(self) -> int:
        return len(self.events)

    def __getitem__(self, key) -> int:
        t, u, v = key
        if u > v:
            u, v = v, u
        return self._ids[ContactEvent(t, u, v)]

    def __contains__(self, key) -> bool:
        t, u, v = key
        return u != v and ContactEvent(t, min(u, v), max(u, v)) in self._ids

    def event(self, pid: int) -> ContactEvent:
        return self.events[pid]

    def time(self, pid: int) -> int:
        return self.events[pid].t


class TemporalNetwork:
    """Immutable snapshot sequence ``G^1..G^T`` over a fixed node set.

    Nodes are dense integers ``0..N-1``; ``labels[i]`` keeps the original
    identifier. ``snapshots[t]`` (1-based) lists ``(u, v, pid)`` triples of
    the contacts active at ``t``.
    """

    def __init__(
        self,
        labels: Iterable[str],
        horizon: int,
        events: Iterable[ContactEvent],
    ):
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        self.horizon = int(horizon)
        if len(self.labels) < 1:
            raise ValueError("a network needs at least one node")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate node labels")
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")
        self.symbols = SymbolTable(events)
        n = len(self.labels)
        for e in self.symbols.events:
            if e.t > self.horizon:
                raise ValueError(f"event {e} beyond horizon {self.horizon}")
            if e.v >= n:
                raise ValueError(f"event {e} references unknown node")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        snaps: list[list[tuple[int, int, int]]] = [[] for _ in range(self.horizon + 1)]
        neigh: list[set[int]] = [set() for _ in range(n)]
        for pid, e in enumerate(self.symbols.events):
            snaps[e.t].append((e.u, e.v, pid))
            neigh[e.u].add(e.v)
            neigh[e.v].add(e.u)
        self.snapshots: tuple[tuple[tuple[int, int, int], ...], ...] = tuple(
            tuple(s) for s in snaps
        )
        self._neighbors = tuple(frozenset(s) for s in neigh)

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def events(self) -> tuple[ContactEvent, ...]:
        return self.symbols.events

    @property
    def nodes(self) -> range:
        return range(self.n_nodes)

    def index(self, node) -> int:
        """Resolve a label (or an in-range integer id) to a node id."""
        if isinstance(node, str):
            try:
                return self._index[node]
            except KeyError:
                raise KeyError(f"unknown node {node!r}") from None
        if isinstance(node, int) and 0 <= node < self.n_nodes:
            return node
        raise KeyError(f"unknown node {node!r}")

    def neighbors(self, node) -> frozenset[int]:
        return self._neighbors[self.index(node)]

    def adjacency(self, t: int) -> dict[int, list[tuple[int, int]]]:
        """Sorted neighbor lists ``{u: [(w, pid), ...]}`` of snapshot ``t``."""
        adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for u, v, pid in self.snapshots[t]:
            adj[u].append((v, pid))
            adj[v].append((u, pid))
        for lst in adj.values():
            lst.sort()
        return dict(adj)

    def snapshot_matrix(self, t: int):
        """Symmetric 0/1 pattern ``A_t`` as a scipy CSR matrix."""
        from scipy.sparse import csr_matrix

        rows, cols = [], []
        for u, v, _ in self.snapshots[t]:
            rows += [u, v]
            cols += [v, u]
        n = self.n_nodes
        return csr_matrix(([1] * len(rows), (rows, cols)), shape=(n, n), dtype=int)

    def without(self, nodes) -> "TemporalNetwork":
        """Copy with ``nodes`` and all their contacts removed."""
        drop = {self.index(x) for x in nodes}
        keep = [i for i in self.nodes if i not in drop]
        if not keep:
            raise ValueError("cannot remove every node")
        remap = {old: new for new, old in enumerate(keep)}
        events = [
            ContactEvent(e.t, remap[e.u], remap[e.v])
            for e in self.events
            if e.u in remap and e.v in remap
        ]
        return TemporalNetwork([self.labels[i] for i in keep], self.horizon, events)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalNetwork):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.horizon == other.horizon
            and self.events == other.events
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.horizon, self.events))

    def __repr__(self) -> str:
        return (
            f"TemporalNetwork(N={self.n_nodes}, T={self.horizon}, "
            f"events={len(self.events)})"
        )

    def labelled_events(self) -> set[tuple[int, str, str]]:
        """Events as ``(t, label_u, label_v)`` with labels sorted."""
        out = set()
        for e in self.events:
            a, b = sorted((self.labels[e.u], self.labels[e.v]))
            out.add((e.t, a, b))
        return out


def from_contacts(
    contacts: Iterable[tuple[int, str, str]],
    horizon: int | None = None,
    labels: Iterable[str] | None = None,
) -> TemporalNetwork:
    """Build a network from ``(t, u, v)`` triples with 1-based snapshot indices.

    Labels are interned in order of first appearance unless ``labels`` fixes
    the node order (and may add isolated nodes).
    """
    contacts = list(contacts)
    order: dict[str, int] = {}
    if labels is not None:
        for lab in labels:
            order.setdefault(str(lab), len(order))
    events = set()
    for t, u, v in contacts:
        iu = order.setdefault(str(u), len(order))
        iv = order.setdefault(str(v), len(order))
        events.add(ContactEvent(int(t), iu, iv))
    if horizon is None:
        horizon = max((e.t for e in events), default=1)
    return TemporalNetwork(list(order), horizon, events)


@dataclass
class ParseStats:
    lines: int = 0
    self_loops: int = 0
    duplicates: int = 0
    raw_times: list[int] = field(default_factory=list)


def parse_contact_list(
    stream: TextIO | str,
    window: int = 1,
    rebase: bool = True,
    stats: ParseStats | None = None,
) -> TemporalNetwork:
    """Parse ``t u v`` lines (tab, comma or space separated).

    With ``rebase`` (the default) distinct raw times are ranked, and every
    ``window`` consecutive ranks share one snapshot. Without it raw times are
    bucketed as ``(t - origin) // window + 1`` with ``origin`` 1 (0 if a zero
    timestamp occurs), so gaps in time survive as empty snapshots and
    1-based input with ``window=1`` keeps its indices.
    Self-contacts are dropped and counted in ``stats.self_loops``.
    """
    if window < 1:
        raise ValueError("window width must be >= 1")
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    stats = stats if stats is not None else ParseStats()
    rows: list[tuple[int, str, str]] = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = _SPLIT.split(line)
        if len(parts) != 3:
            raise ParseError(f"expected 't u v', got {line!r}", lineno)
        t_raw, u, v = parts
        try:
            t = int(t_raw)
        except ValueError:
            raise ParseError(f"bad timestamp {t_raw!r}", lineno) from None
        if t < 0:
            raise ParseError(f"negative timestamp {t}", lineno)
        stats.lines += 1
        if u == v:
            stats.self_loops += 1
            continue
        rows.append((t, u, v))
    if stats.lines == 0:
        raise ParseError("empty contact list")
    if stats.self_loops:
        logger.warning("dropped %d self-contact line(s)", stats.self_loops)
    if not rows:
        raise ParseError("no usable contacts (all lines were self-contacts)")

    if rebase:
        distinct = sorted({t for t, _, _ in rows})
        rank = {t: i for i, t in enumerate(distinct)}
        snap = {t: rank[t] // window + 1 for t in distinct}
    else:
        origin = min(1, min(t for t, _, _ in rows))
        snap = {t: (t - origin) // window + 1 for t, _, _ in rows}
    stats.raw_times = sorted(snap)

    # node order: first appearance in time-sorted input keeps ids stable
    rows.sort(key=lambda r: r[0])
    mapped = [(snap[t], u, v) for t, u, v in rows]
    net = from_contacts(mapped)
    stats.duplicates = len(mapped) - len(net.events)
    return net


def to_contact_list(net: TemporalNetwork, sep: str = "\t") -> str:
    """Serialize to the contact-list text format, one event per line."""
    lines = [f"# N={net.n_nodes} T={net.horizon}"]
    for e in net.events:
        lines.append(sep.join((str(e.t), net.labels[e.u], net.labels[e.v])))
    return "\n".join(lines) + "\n"


def aggregated_degree(net: TemporalNetwork, node) -> int:
    """Number of distinct nodes ``node`` ever contacts."""
    return len(net.neighbors(node))
