"""Histogram of controlling centrality values for a heavy-activity network."""

import argparse

from tempcontrol.controllability import CentralityConfig
from tempcontrol.experiments import analyze, fig8_table
from tempcontrol.synth import SynthConfig, generate


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--synth", default="100,0.02,40", help="N,p,T")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)
    net = generate(SynthConfig.parse(args.synth, seed=args.seed))
    print(fig8_table(analyze(net, CentralityConfig(seed=args.seed), workers=args.workers)), end="")


if __name__ == "__main__":
    main()
