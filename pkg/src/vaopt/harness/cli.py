"""Command-line entry point: ``vaopt run | compare | landscape``.

Every failure prints one ``error: ...`` line on stderr and exits with a
nonzero status (2 for usage errors, 1 for everything else).
"""

import argparse
import sys

from .._validation import ConfigurationError, DimensionError
from .config import ALGORITHMS, PROBLEMS, config_from_mapping, read_config
from .landscape import write_landscape_grid
from .runner import compare_from_spec, run_experiment


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser():
    parser = _Parser(prog="vaopt", description="Seeded optimization experiments.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="repeated runs of one algorithm on one target")
    run.add_argument("--config", help="key = value file; flags override its entries")
    run.add_argument("--algo", choices=ALGORITHMS)
    target = run.add_mutually_exclusive_group()
    target.add_argument("--function", help="test function name")
    target.add_argument("--instance", help="problem instance file")
    run.add_argument("--problem", choices=PROBLEMS)
    run.add_argument("--dims", type=int)
    run.add_argument("--lower", help="lower bound, scalar or comma-separated")
    run.add_argument("--upper", help="upper bound, scalar or comma-separated")
    run.add_argument("--pop", type=int)
    run.add_argument("--iters", type=int)
    run.add_argument("--repeats", type=int)
    run.add_argument("--seed", type=int)
    run.add_argument("--facilities", type=int, help="hub location: facilities to open")
    run.add_argument("--clusters", type=int, help="clustering: number of clusters")
    run.add_argument("--out", help="output directory")

    cmp = sub.add_parser("compare", help="run the experiments of a spec file and pick winners")
    cmp.add_argument("--spec", required=True)
    cmp.add_argument("--out")

    land = sub.add_parser("landscape", help="write an (x, y, f) grid of a 2-D function")
    land.add_argument("--function", required=True)
    land.add_argument("--res", type=int, default=50)
    land.add_argument("--out", required=True)
    return parser


_FLAG_KEYS = {
    "algo": "algorithm",
    "function": "function",
    "instance": "instance",
    "problem": "problem",
    "dims": "dimensions",
    "lower": "lower",
    "upper": "upper",
    "pop": "population",
    "iters": "iterations",
    "repeats": "repeats",
    "seed": "seed",
    "facilities": "facilities",
    "clusters": "clusters",
    "out": "out",
}


def _run(args):
    mapping = read_config(args.config) if args.config else {}
    if args.function is not None or args.instance is not None:
        mapping.pop("function", None)
        mapping.pop("instance", None)
    for flag, key in _FLAG_KEYS.items():
        value = getattr(args, flag)
        if value is not None:
            mapping[key] = str(value)
    row = run_experiment(config_from_mapping(mapping, source=args.config or "command line"))
    print(",".join(row.csv_fields()))


def _compare(args):
    rows, winners = compare_from_spec(args.spec, out=args.out)
    for row in rows:
        print(",".join(row.csv_fields() + [winners[row.target]]))


def _landscape(args):
    grid = write_landscape_grid(args.function, args.res, args.out)
    print(f"wrote {len(grid)} points to {args.out}")


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        {"run": _run, "compare": _compare, "landscape": _landscape}[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigurationError, DimensionError, KeyError, OSError, ValueError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print("error: " + " ".join(str(message).split()), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
