"""Per-node analysis and the CSV tables behind the figures."""

from __future__ import annotations

import csv
import io
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from scipy.stats import spearmanr

from .controllability import CentralityConfig, controlling_centrality
from .temporal_graph import TemporalNetwork, aggregated_degree
from .trees import classify, bounds_total, extract_trees


@dataclass(frozen=True)
class NodeResult:
    node: int
    label: str
    centrality: int
    lower: int
    upper: int
    degree: int
    taxonomy_csv: str = ""

    @property
    def gap(self) -> int:
        return self.upper - self.lower

    @property
    def violates(self) -> bool:
        return not self.lower <= self.centrality <= self.upper


def analyze_node(net: TemporalNetwork, node, config: CentralityConfig) -> NodeResult:
    o = net.index(node)
    rep = controlling_centrality(net, o, config)
    tax = classify(extract_trees(net, o))
    b = bounds_total(tax, net.n_nodes, o)
    res = NodeResult(o, net.labels[o], rep.centrality, b.lower, b.upper, aggregated_degree(net, o))
    if res.violates:
        res = replace(res, taxonomy_csv=tax.to_csv())
    return res


def _job(args):
    return analyze_node(*args)


def analyze(
    net: TemporalNetwork,
    config: CentralityConfig | None = None,
    nodes=None,
    workers: int = 1,
) -> list[NodeResult]:
    """Centrality and bounds for ``nodes`` (all by default), in node order."""
    config = config or CentralityConfig()
    ids = sorted({net.index(x) for x in nodes}) if nodes is not None else list(net.nodes)
    jobs = [(net, i, config) for i in ids]
    if workers <= 1 or len(jobs) < 2:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def centrality_table(results: list[NodeResult]) -> str:
    return _csv(
        ["node", "S_M", "lower", "upper", "aggregated_degree"],
        [(r.label, r.centrality, r.lower, r.upper, r.degree) for r in results],
    )


def fig5_table(results: list[NodeResult]) -> str:
    return _csv(
        ["node", "calculated", "lower", "upper"],
        [(r.label, r.centrality, r.lower, r.upper) for r in results],
    )


def fig6_table(results: list[NodeResult]) -> str:
    return _csv(
        ["node", "aggregated_degree", "gap"],
        [(r.label, r.degree, r.gap) for r in results],
    )


def degree_means(results: list[NodeResult]) -> list[tuple[int, float, int]]:
    """``(degree, mean centrality, count)`` sorted by degree."""
    groups: dict[int, list[int]] = defaultdict(list)
    for r in results:
        groups[r.degree].append(r.centrality)
    return [(d, sum(v) / len(v), len(v)) for d, v in sorted(groups.items())]


def fig7_table(results: list[NodeResult]) -> str:
    return _csv(
        ["aggregated_degree", "mean_centrality", "count"],
        [(d, f"{m:.6g}", c) for d, m, c in degree_means(results)],
    )


def histogram(results: list[NodeResult]) -> list[tuple[int, int]]:
    return sorted(Counter(r.centrality for r in results).items())


def fig8_table(results: list[NodeResult]) -> str:
    return _csv(["centrality_value", "node_count"], histogram(results))


def degree_correlation(results: list[NodeResult]) -> float:
    """Spearman rank correlation between aggregated degree and centrality."""
    deg = [r.degree for r in results]
    cen = [r.centrality for r in results]
    if len(set(deg)) < 2 or len(set(cen)) < 2:
        return float("nan")
    return float(spearmanr(deg, cen).statistic)


def remove_top(net: TemporalNetwork, results: list[NodeResult], count: int = 1) -> TemporalNetwork:
    """Drop the ``count`` most central nodes (ties broken by node id)."""
    ranked = sorted(results, key=lambda r: (-r.centrality, r.node))
    return net.without([r.node for r in ranked[:count]])


def violation_report(results: list[NodeResult]) -> str:
    parts = []
    for r in results:
        if r.violates:
            parts.append(
                f"node {r.label}: lower={r.lower} calculated={r.centrality} upper={r.upper}\n"
                + r.taxonomy_csv
            )
    return "\n".join(parts)
