"""
Command-line interface

    python -m src analyze "[3,4,4,3,2,1]"
    python -m src verify --suite all --workers 4
    python -m src enumerate linear --n 3
    python -m src enumerate cyclic-finite --n 6 --sequence
    python -m src distribution gldim --n 6 --format csv
    python -m src bijection sincere --from-dyck "[3,4,4,3,2,1]"

Exit codes: 0 success, 1 property violation in verify, 2 unparseable input
or usage error, 3 any other domain error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import __version__
from .config import Settings, configure_logging, initialize_settings
from .dyck import PathParseError
from .kupisch import InvalidSeries, NakayamaError
from .reports import BIJECTIONS, FAMILIES, STATISTICS
from .verification import SUITES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _read_input(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    return value


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def cmd_analyze(args: argparse.Namespace) -> int:
    from .reports import analyze
    from .utils.formatters import format_report, to_csv

    report = analyze(_read_input(args.input))
    if args.format == "json":
        _emit_json(report.model_dump(mode="json"))
    elif args.format == "csv":
        rows = [
            (field, json.dumps(value, ensure_ascii=False) if isinstance(value, (list, dict)) else value)
            for field, value in report.model_dump(mode="json").items()
        ]
        print(to_csv(["field", "value"], rows))
    else:
        print(format_report(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    from .verification import run_suites
    from .utils.formatters import format_suite_results, to_csv

    if args.n is not None and args.n < 1:
        print(f"--n {args.n} must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.n is not None and args.n > settings.max_suite_n:
        print(f"--n {args.n} exceeds the configured maximum {settings.max_suite_n}", file=sys.stderr)
        return EXIT_USAGE

    names = list(SUITES) if args.suite == "all" else [args.suite]
    workers = args.workers if args.workers is not None else settings.workers
    results = run_suites(names, n=args.n, max_entry=args.max_entry, workers=workers)

    if args.format == "json":
        _emit_json([result.model_dump() for result in results])
    elif args.format == "csv":
        header = ["suite", "n", "passed", "checked", "counterexample", "seconds"]
        rows = [
            (r.name, r.n, r.passed, r.checked, r.counterexample or "", f"{r.seconds:.3f}")
            for r in results
        ]
        print(to_csv(header, rows))
    else:
        print(format_suite_results(results))

    return EXIT_OK if all(result.passed for result in results) else EXIT_VIOLATION


def cmd_enumerate(args: argparse.Namespace) -> int:
    from .reports import enumerate_family, family_sequence
    from .utils.formatters import format_items, format_sequence, to_csv

    if args.sequence:
        counts = family_sequence(args.family, args.n, max_entry=args.max_entry, raw=args.raw)
        if args.format == "json":
            _emit_json({"family": args.family, "n_max": args.n, "counts": {str(n): c for n, c in counts.items()}})
        elif args.format == "csv":
            print(to_csv(["n", "count"], sorted(counts.items())))
        else:
            print(format_sequence(args.family, counts))
        return EXIT_OK

    items = enumerate_family(args.family, args.n, max_entry=args.max_entry, raw=args.raw)
    if args.count:
        total = sum(1 for _ in items)
        if args.format == "json":
            _emit_json({"family": args.family, "n": args.n, "count": total})
        elif args.format == "csv":
            print(to_csv(["family", "n", "count"], [(args.family, args.n, total)]))
        else:
            print(total)
        return EXIT_OK

    values = list(items)
    if args.format == "json":
        _emit_json({"family": args.family, "n": args.n, "count": len(values), "items": values})
    elif args.format == "csv":
        print(to_csv(["item"], [(value,) for value in values]))
    else:
        print(format_items(args.family, args.n, values))
    return EXIT_OK


def cmd_distribution(args: argparse.Namespace) -> int:
    from .reports import distribution
    from .utils.formatters import format_distribution, to_csv

    result = distribution(args.statistic, args.n)
    if args.format == "json":
        _emit_json({
            "statistic": result.statistic,
            "n": result.n,
            "counts": {str(value): count for value, count in result.counts.items()},
        })
    elif args.format == "csv":
        print(to_csv(["value", "count"], sorted(result.counts.items())))
    else:
        print(format_distribution(result))
    return EXIT_OK


def cmd_bijection(args: argparse.Namespace) -> int:
    from .reports import run_bijection
    from .utils.formatters import format_bijection, to_csv

    direction = "to-dyck" if args.to_dyck is not None else "from-dyck"
    value = _read_input(args.to_dyck if args.to_dyck is not None else args.from_dyck)
    result = run_bijection(args.kind, direction, value, g=args.g)
    if args.format == "json":
        _emit_json(result.model_dump())
    elif args.format == "csv":
        header = ["kind", "direction", "input", "series", "path"]
        print(to_csv(header, [(result.kind, result.direction, result.input, result.series, result.path)]))
    else:
        print(format_bijection(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per front-end operation"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["human", "json", "csv"],
        default=None,
        help="Output format (default: NAKAYAMA_FORMAT or human)",
    )

    parser = argparse.ArgumentParser(
        prog="nakayama",
        description="Nakayama algebras, Dyck paths and ordered trees",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override NAKAYAMA_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", parents=[common], help="Analyze one algebra or Dyck path")
    analyze.add_argument("input", help="Kupisch series, cyclic:[...] series or U/D path; - reads stdin")

    verify = subparsers.add_parser("verify", parents=[common], help="Run exhaustive property suites")
    verify.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    verify.add_argument("--n", type=int, default=None, help="Size bound (suite default when omitted)")
    verify.add_argument("--max-entry", type=int, default=None, help="Entry bound for cyclic enumerations")
    verify.add_argument("--workers", type=int, default=None, help="Worker processes (NAKAYAMA_WORKERS)")

    enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="List a family of objects")
    enumerate_.add_argument("family", choices=FAMILIES)
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--max-entry", type=int, default=None, help="Entry bound for the cyclic family")
    enumerate_.add_argument("--raw", action="store_true", help="Every cyclic series instead of one per rotation")
    output = enumerate_.add_mutually_exclusive_group()
    output.add_argument("--count", action="store_true", help="Print only the number of objects")
    output.add_argument("--sequence", action="store_true", help="Print the count for every size 1..n")

    dist = subparsers.add_parser("distribution", parents=[common], help="Distribution of a statistic")
    dist.add_argument("statistic", choices=STATISTICS)
    dist.add_argument("--n", type=int, required=True)

    bijection = subparsers.add_parser("bijection", parents=[common], help="Apply an algebra/Dyck path bijection")
    bijection.add_argument("kind", choices=BIJECTIONS)
    direction = bijection.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-dyck", metavar="SERIES", default=None)
    direction.add_argument("--from-dyck", metavar="PATH", default=None)
    bijection.add_argument("--g", type=int, default=None, help="Global dimension bound (bounded bijection)")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    from .utils.formatters import format_error

    try:
        settings = initialize_settings()
        if args.log_level:
            settings = Settings.model_validate({**settings.model_dump(), "log_level": args.log_level})
    except ValueError as e:
        print(format_error(e, "loading settings"), file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings)
    if args.format is None:
        args.format = settings.output_format

    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "verify":
            return cmd_verify(args, settings)
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "distribution":
            return cmd_distribution(args)
        return cmd_bijection(args)
    except (InvalidSeries, PathParseError) as e:
        print(format_error(e, f"running {args.command}"), file=sys.stderr)
        return EXIT_USAGE
    except NakayamaError as e:
        print(format_error(e, f"running {args.command}"), file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        print(format_error(e, f"running {args.command}"), file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unexpected failure in {args.command}: {e}", exc_info=True)
        print(format_error(e, f"running {args.command}"), file=sys.stderr)
        return EXIT_DOMAIN
