"""Time-ordered graph (TOG) of a temporal network with one controller.

Vertices are ``(node, layer)`` pairs. Network nodes have copies in layers
``1..T+1``; the controller ``CONTROLLER`` has copies in layers ``0..T``.
A contact at snapshot ``t`` links layer ``t`` to layer ``t+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .temporal_graph import TemporalNetwork

CONTROLLER = -1

TIME_FLOW = "time"
INTERACTION = "interaction"
INJECTION = "injection"


class TogEdge(NamedTuple):
    kind: str
    layer: int  # layer of the tail; the head sits in layer + 1
    tail: int
    head: int
    pid: int | None


@dataclass(frozen=True)
class TimeOrderedGraph:
    net: TemporalNetwork
    controlled: int

    @property
    def horizon(self) -> int:
        return self.net.horizon

    @property
    def n_nodes(self) -> int:
        return self.net.n_nodes

    def vertices(self) -> Iterator[tuple[int, int]]:
        T = self.horizon
        for t in range(T + 1):
            yield (CONTROLLER, t)
        for t in range(1, T + 2):
            for i in self.net.nodes:
                yield (i, t)

    def edges(self) -> Iterator[TogEdge]:
        T, o = self.horizon, self.controlled
        for t in range(1, T + 1):
            for i in self.net.nodes:
                yield TogEdge(TIME_FLOW, t, i, i, None)
            for u, v, pid in self.net.snapshots[t]:
                yield TogEdge(INTERACTION, t, u, v, pid)
                yield TogEdge(INTERACTION, t, v, u, pid)
        for t in range(T + 1):
            yield TogEdge(INJECTION, t, CONTROLLER, o, None)

    def successors(self, vertex: tuple[int, int]) -> list[tuple[tuple[int, int], int | None]]:
        """Out-neighbors in tie-break order: time-flow first, then by node id."""
        node, layer = vertex
        if node == CONTROLLER:
            return [((self.controlled, layer + 1), None)] if 0 <= layer <= self.horizon else []
        if layer > self.horizon:
            return []
        out = [((node, layer + 1), None)]
        out += [((w, layer + 1), pid) for w, pid in self._adj(layer).get(node, ())]
        return out

    def _adj(self, t: int):
        cache = self.__dict__.setdefault("_adj_cache", {})
        if t not in cache:
            cache[t] = self.net.adjacency(t)
        return cache[t]

    def edge_count(self) -> dict[str, int]:
        counts = {TIME_FLOW: 0, INTERACTION: 0, INJECTION: 0}
        for e in self.edges():
            counts[e.kind] += 1
        return counts

    def dump(self) -> str:
        """Edge list: ``kind from_layer from_node to_node pid`` per line."""
        labels = self.net.labels
        name = lambda i: "I" if i == CONTROLLER else labels[i]  # noqa: E731
        lines = []
        for e in self.edges():
            pid = "-" if e.pid is None else str(e.pid)
            lines.append(f"{e.kind}\t{e.layer}\t{name(e.tail)}\t{name(e.head)}\t{pid}")
        return "\n".join(lines) + "\n"


def build_tog(net: TemporalNetwork, controlled_node) -> TimeOrderedGraph:
    return TimeOrderedGraph(net, net.index(controlled_node))


@dataclass(frozen=True)
class SpanningTree:
    """BFS spanning tree of the TOG rooted at a controller copy.

    ``parent`` maps each non-root vertex to ``(parent_vertex, pid)``; pid is
    ``None`` for time-flow and injection edges.
    """

    root: tuple[int, int]
    parent: dict

    @property
    def vertices(self) -> set[tuple[int, int]]:
        return {self.root, *self.parent}

    def layer_nodes(self, layer: int) -> set[int]:
        return {v for v, t in self.parent if t == layer}

    def path(self, vertex) -> list[tuple[int, int]]:
        """Vertices from the root down to ``vertex``."""
        out = [vertex]
        while vertex != self.root:
            vertex = self.parent[vertex][0]
            out.append(vertex)
        return out[::-1]


def bfs_spanning_tree(tog: TimeOrderedGraph, root_time: int) -> SpanningTree:
    """BFS tree of everything reachable from the controller copy at ``root_time``.

    The sweep is layer-synchronous: for each layer, the time-flow edges of
    the whole frontier are taken first, then interaction edges from frontier
    nodes in ascending id order to ascending neighbor ids. This keeps every
    later copy of an already reached node on its own time-flow chain, so the
    tree projects onto a tree over network nodes.
    """
    T = tog.horizon
    if not 0 <= root_time <= T:
        raise ValueError(f"root time must be in 0..{T}")
    root = (CONTROLLER, root_time)
    o = tog.controlled
    parent: dict = {(o, root_time + 1): (root, None)}
    frontier = [o]
    for layer in range(root_time + 1, T + 1):
        nxt = list(frontier)
        seen = set(frontier)
        for u in frontier:
            parent[(u, layer + 1)] = ((u, layer), None)
        adj = tog._adj(layer)
        for u in sorted(frontier):
            for w, pid in adj.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    parent[(w, layer + 1)] = ((u, layer), pid)
        frontier = nxt
    return SpanningTree(root, parent)


def projected_nodes(tree: SpanningTree) -> set[int]:
    """Network nodes present in the final layer of the tree."""
    last = max(t for _, t in tree.vertices)
    return tree.layer_nodes(last)
