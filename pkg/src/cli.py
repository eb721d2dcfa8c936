"""Command-line front end: JSON reports on stdout, diagnostics on stderr."""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from src.arrangement.parse import parse_params
from src.errors import OcticError, ParseError
from src.exact.fields import is_prime, prime_range
from src.orchestrator.executor import Pipeline, PipelineConfig
from src.tools import build_registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ADMISSIBILITY = 2
EXIT_TABLE_MISMATCH = 3

EXIT_CODES = {
    "AdmissibilityError": EXIT_ADMISSIBILITY,
    "TableMismatchError": EXIT_TABLE_MISMATCH,
}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse reports usage errors through an exception instead of exiting with 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def parse_primes(text: str) -> List[int]:
    """Parse "5,7,11" into a list of primes."""
    try:
        primes = [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ParseError(f"Malformed prime list: {text!r}")
    composite = [p for p in primes if not is_prime(p)]
    if composite:
        raise ParseError(f"Not prime: {composite}")
    return primes


def parse_prime_range(text: str) -> List[int]:
    """Parse "5..100" into the primes of that closed interval."""
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError(text)
        return prime_range(int(low), int(high))
    except ValueError:
        raise ParseError(f"Malformed prime range: {text!r}, expected A..B")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--catalog", metavar="KEY", help="catalog key, e.g. 2, 84a, f42")
    source.add_argument("--file", metavar="PATH", help="arrangement document (JSON)")
    common.add_argument("--params", metavar="A=1,B=3", help="family parameters")
    common.add_argument("--scale", type=int, help="squarefree scale of the equation")
    common.add_argument("--primes", metavar="LIST", help="comma-separated primes")
    common.add_argument("--prime-range", metavar="A..B", help="all good primes in A..B")
    common.add_argument("--threads", type=int, default=1, help="worker threads (speed only)")
    common.add_argument("--chunks", type=int, help="enumeration chunks")
    common.add_argument("--exact-rank", action="store_true", help="skip the modular rank fast path")
    common.add_argument("--point-strata", type=int, default=3, choices=(3, 4),
                        help="smallest point multiplicity used as a stratum")
    common.add_argument("--json", action="store_true", help="compact single-line JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = _ArgumentParser(prog="octic", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    commands.add_parser("analyze", parents=[common], help="counters, invariants and Hodge numbers")
    commands.add_parser("hodge", parents=[common], help="h12 with the Jacobian and equisingular dimensions")
    commands.add_parser("count", parents=[common], help="point counts and a_p")
    commands.add_parser("modular", parents=[common], help="match a_p against newforms")
    catalog = commands.add_parser("catalog", parents=[common], help="list or export catalog entries")
    catalog.add_argument("operation", choices=("list", "export"))
    catalog.add_argument("key", nargs="?")
    commands.add_parser("table1", parents=[common], help="recompute and diff all catalog rows")
    return parser


def _tool_input(args: argparse.Namespace) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    if args.command == "catalog":
        data["operation"] = args.operation
        if args.key:
            data["key"] = args.key
        if args.params:
            data["params"] = parse_params(args.params)
        return data
    if args.command == "table1":
        return data

    if args.catalog:
        data["catalog"] = args.catalog
    elif args.file:
        data["file"] = args.file
    else:
        raise UsageError(f"{args.command} needs --catalog KEY or --file PATH")
    if args.params:
        data["params"] = parse_params(args.params)
    if args.scale is not None:
        data["scale"] = args.scale
    if args.primes and args.prime_range:
        raise UsageError("give --primes or --prime-range, not both")
    if args.primes:
        data["primes"] = parse_primes(args.primes)
    elif args.prime_range:
        data["primes"] = parse_prime_range(args.prime_range)
        data["skip_bad_primes"] = True
    return data


def _configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _emit(output: Any, compact: bool) -> None:
    if compact:
        text = json.dumps(output, sort_keys=True, separators=(",", ":"))
    else:
        text = json.dumps(output, sort_keys=True, indent=2)
    sys.stdout.write(text + "\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Command line without the program name

    Returns:
        Exit status: 0 ok, 1 usage, 2 admissibility failure, 3 table mismatch
    """
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        config = PipelineConfig(
            threads=args.threads,
            chunks=args.chunks,
            exact_rank=args.exact_rank,
            point_strata_min_multiplicity=args.point_strata,
        )
        tool = build_registry(Pipeline(config)).get(args.command)
        data = _tool_input(args)
    except (UsageError, OcticError, ValidationError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    result = tool.execute(data)
    if result.output is not None:
        _emit(result.output, args.json)
    if result.success:
        return EXIT_OK
    sys.stderr.write(f"error: {result.error}\n")
    return EXIT_CODES.get(result.error_type, EXIT_USAGE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
