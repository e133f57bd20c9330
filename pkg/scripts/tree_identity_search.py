"""Search random small instances for rank(W^R) != rank(W*) and print each hit
with the exact rank from the rational reference implementation."""

import argparse
import random

from tempcontrol.gf import FieldAssignment, generic_rank
from tempcontrol.oracle import brute_rank_wc
from tempcontrol.reachability import assemble_w_star
from tempcontrol.temporal_graph import ContactEvent, TemporalNetwork
from tempcontrol.trees import extract_trees, tree_matrix


def random_instance(rng, max_n, max_t):
    n, horizon, p = rng.randint(1, max_n), rng.randint(1, max_t), rng.uniform(0.05, 0.5)
    events = [
        ContactEvent(t, u, v)
        for t in range(1, horizon + 1)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return TemporalNetwork([str(i) for i in range(n)], horizon, events)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-t", type=int, default=8)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    hits = 0
    for case in range(args.cases):
        net = random_instance(rng, args.max_n, args.max_t)
        o = rng.randrange(net.n_nodes)
        trials = [FieldAssignment.random(len(net.symbols), net.horizon, (case, k)) for k in range(3)]
        ws = max(assemble_w_star(net, o, a).rank() for a in trials)
        wr = max(generic_rank(tree_matrix(extract_trees(net, o), a, net.n_nodes)) for a in trials)
        if ws != wr:
            hits += 1
            events = sorted((e.t, e.u, e.v) for e in net.events)
            print(f"case {case}: o={o} rank W*={ws} (exact {brute_rank_wc(net, o)}) rank W^R={wr} events={events}")
    print(f"{hits}/{args.cases} mismatches")


if __name__ == "__main__":
    main()
