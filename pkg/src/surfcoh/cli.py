"""Command line entry point.

    surfcoh verify --suite <id> --g <a..b> --n <a..b> [--samples N] [--seed S]
                   [--relation-sign minus|plus] [--format text|json] [--out PATH]
    surfcoh table --g <a..b> --n <a..b>

Exit status: 0 if every check passes, 1 if any fails, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .suites import SUITES, ConfigError, SuiteConfig, format_rank_table, rank_cells, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..3 or a single integer, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surfcoh", description="Exact verification suites for cup products on PConf_n(S_g).")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    verify.add_argument("--g", type=parse_range, default=(2, 3), metavar="A..B")
    verify.add_argument("--n", type=parse_range, default=(2, 3), metavar="A..B")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--relation-sign", default="minus", choices=("minus", "plus"))
    verify.add_argument("--format", default="text", choices=("text", "json"))
    verify.add_argument("--out", type=Path, help="write the report here instead of stdout")
    verify.add_argument("--unsafe-large", action="store_true", help="lift the g <= 5, n <= 6 caps")

    table = sub.add_parser("table", help="tabulate computed image ranks against the closed form")
    table.add_argument("--g", type=parse_range, default=(2, 3), metavar="A..B")
    table.add_argument("--n", type=parse_range, default=(2, 4), metavar="A..B")
    table.add_argument("--unsafe-large", action="store_true")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        if args.command == "table":
            cells = rank_cells(args.g, args.n, args.unsafe_large)
            sys.stdout.write(format_rank_table(cells))
            return EXIT_OK if all(c == f for _, _, c, f in cells) else EXIT_FAIL

        cfg = SuiteConfig(
            suite=args.suite,
            g_range=args.g,
            n_range=args.n,
            samples=args.samples,
            seed=args.seed,
            relation_sign=args.relation_sign,
            format=args.format,
            unsafe_large=args.unsafe_large,
        )
        cfg.validate()
    except ConfigError as exc:
        print(f"surfcoh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = run_suite(cfg)
    _emit(report.to_json() if cfg.format == "json" else report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
