"""Command-line entry point: ``tempcontrol <subcommand> [options]``.

Exit codes: 0 success, 2 bound sandwich violated, 1 any other error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import experiments as ex
from .controllability import CentralityConfig, assignment_for
from .gf import DEFAULT_PRIME
from .reachability import assemble_w_star
from .synth import SynthConfig, generate
from .temporal_graph import ParseError, TemporalNetwork, parse_contact_list, to_contact_list
from .tog import build_tog
from .trees import classify, extract_trees

log = logging.getLogger("tempcontrol")

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="contact list file (t u v per line)")
    src.add_argument("--synth", metavar="N,p,T", help="generate a Bernoulli network instead")
    sel = common.add_mutually_exclusive_group()
    sel.add_argument("--node", action="append", help="controlled node label (repeatable)")
    sel.add_argument("--all", action="store_true", help="every node (default)")
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, help="output directory (stdout if omitted)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--window", type=int, default=1, help="raw time steps per snapshot")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="tempcontrol", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("synth", parents=[common], help="emit a synthetic contact list")
    sub.add_parser("centrality", parents=[common], help="node, S_M, lower, upper, degree")
    b = sub.add_parser("bounds", parents=[common], help="bounds plus taxonomy/TOG dumps")
    b.add_argument("--dump", action="store_true", help="also write taxonomy, W* and TOG files")
    sub.add_parser("fig5", parents=[common], help="calculated centrality vs bounds")
    for name in ("fig6", "fig7"):
        f = sub.add_parser(name, parents=[common], help=f"{name} table")
        f.add_argument("--remove-top", type=int, default=0, help="drop the K most central nodes first")
    sub.add_parser("fig8", parents=[common], help="centrality histogram")
    return parser


def _load(args) -> TemporalNetwork:
    if args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            return parse_contact_list(fh, window=args.window)
    return generate(SynthConfig.parse(args.synth, seed=args.seed))


def _emit(args, name: str, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
        return
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / name).write_text(text, encoding="utf-8")
    log.info("wrote %s", args.out / name)


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; 2 is reserved for violations here
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        net = _load(args)
        if args.command == "synth":
            _emit(args, "contacts.tsv", to_contact_list(net))
            return EXIT_OK
        config = CentralityConfig(args.prime, args.trials, args.seed)
        nodes = args.node if args.node else None
        results = ex.analyze(net, config, nodes, args.workers)
        violated = any(r.violates for r in results)

        if args.command == "centrality":
            _emit(args, "centrality.csv", ex.centrality_table(results))
        elif args.command == "bounds":
            _emit(args, "bounds.csv", ex.centrality_table(results))
            if args.dump:
                for r in results:
                    tax = classify(extract_trees(net, r.node))
                    _emit(args, f"taxonomy_{r.label}.csv", tax.to_csv())
                    if net.n_nodes <= 200:
                        ws = assemble_w_star(net, r.node, assignment_for(net, r.node, 0, config))
                        _emit(args, f"wstar_{r.label}.csv", ws.to_csv(net.labels))
                    _emit(args, f"tog_{r.label}.tsv", build_tog(net, r.node).dump())
        elif args.command == "fig5":
            _emit(args, "fig5.csv", ex.fig5_table(results))
        elif args.command in ("fig6", "fig7"):
            if args.remove_top:
                net = ex.remove_top(net, results, args.remove_top)
                results = ex.analyze(net, config, None, args.workers)
                violated = any(r.violates for r in results)
            if args.command == "fig6":
                _emit(args, "fig6.csv", ex.fig6_table(results))
            else:
                _emit(args, "fig7.csv", ex.fig7_table(results))
        elif args.command == "fig8":
            _emit(args, "fig8.csv", ex.fig8_table(results))

        if violated:
            sys.stderr.write("bound sandwich violated\n" + ex.violation_report(results))
            return EXIT_VIOLATION
        return EXIT_OK
    except (ParseError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
