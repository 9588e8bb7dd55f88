"""
Command-line interface: ``ordinal-patterns <command> ...``.

Exit codes: 0 on success, 2 for usage and configuration errors, 3 for data errors.
"""

from typing import Callable, List, Optional, TextIO
import argparse
import json
import logging
import sys

from .io import (
    SeriesFile,
    format_tuple,
    read_code_sequence,
    read_series,
    render_distribution,
    render_sequence,
    render_table,
)
from ..analysis import pattern_distribution
from ..core import InversionPattern, PermutationPattern, RankPattern
from ..encodings import EncodingScheme, code_table
from ..exceptions import (
    ConfigurationError,
    InvalidPatternError,
    OrdinalPatternError,
    RegistrationError,
)
from ..extractor import PatternExtractor
from ..inversions import invert_space, invert_time
from ..logging_config import setup_logging
from ..registry import TieStrategyRegistry
from ..ties import TieKind

logger = logging.getLogger('ordinal_patterns.cli.main')

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3

REPRESENTATIONS = {"rank": RankPattern, "perm": PermutationPattern, "inv": InversionPattern}
INVERSIONS = {"space": invert_space, "time": invert_time}


def _add_extraction_arguments(parser: argparse.ArgumentParser, d_required: bool = True) -> None:
    parser.add_argument("--d", type=int, required=d_required, help="pattern length")
    parser.add_argument("--lag", type=int, default=1, help="spacing between window entries (default: 1)")
    parser.add_argument("--ties", choices=[k.value for k in TieKind], default=TieKind.STABLE.value,
                        help="tie strategy (default: stable)")
    parser.add_argument("--seed", type=int, default=None, help="seed of the perturb tie strategy")
    parser.add_argument("--scheme", choices=[s.value for s in EncodingScheme], default=EncodingScheme.LEHMER.value,
                        help="number representation (default: lehmer)")
    parser.add_argument("--chunk-windows", type=int, default=None, help="extract in chunks of this many windows")
    parser.add_argument("--workers", type=int, default=None, help="threads for chunked extraction")


def _add_input_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--input", required=required, help="CSV file holding the series")
    parser.add_argument("--column", default="0", help="column name or zero-based index (default: 0)")
    parser.add_argument("--no-header", action="store_true", help="the CSV file has no header line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordinal-patterns",
        description="Ordinal pattern extraction, encoding and dependence analysis.",
    )
    parser.add_argument("--verbose", action="store_true", help="log debug output to stderr")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    table = commands.add_parser("table", help="print the code table of all patterns of length d")
    table.add_argument("--d", type=int, required=True, help="pattern length (2..9)")
    table.add_argument("--scheme", choices=[s.value for s in EncodingScheme], default=None,
                       help="print only this scheme's codes")
    table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    table.set_defaults(handler=_run_table)

    extract = commands.add_parser("extract", help="pattern code of every window of a series")
    _add_input_arguments(extract)
    _add_extraction_arguments(extract)
    extract.add_argument("--format", choices=["lines", "json"], default="lines")
    extract.set_defaults(handler=_run_extract)

    freq = commands.add_parser("freq", help="relative pattern frequencies of a series")
    _add_input_arguments(freq, required=False)
    _add_extraction_arguments(freq, d_required=False)
    freq.add_argument("--from-codes", default=None, help="JSON file written by 'extract --format json'")
    freq.add_argument("--all", action="store_true", help="also list patterns that were not observed")
    freq.add_argument("--format", choices=["csv", "json"], default="csv")
    freq.set_defaults(handler=_run_freq)

    dependence = commands.add_parser("opd", help="ordinal pattern dependence of two series")
    dependence.add_argument("--input-x", required=True, help="CSV file holding the first series")
    dependence.add_argument("--input-y", required=True, help="CSV file holding the second series")
    dependence.add_argument("--column", default="0", help="column name or zero-based index (default: 0)")
    dependence.add_argument("--column-y", default=None, help="column of the second file (default: --column)")
    dependence.add_argument("--no-header", action="store_true", help="the CSV files have no header line")
    _add_extraction_arguments(dependence)
    dependence.set_defaults(handler=_run_opd)

    invert = commands.add_parser("invert", help="space or time inversion of a pattern")
    invert.add_argument("--pattern", required=True, help='comma-separated tuple, e.g. "4,2,1,5,3"')
    invert.add_argument("--rep", choices=sorted(REPRESENTATIONS), required=True, help="representation of the tuple")
    invert.add_argument("--mode", choices=sorted(INVERSIONS), required=True, help="inversion to apply")
    invert.set_defaults(handler=_run_invert)
    return parser


def _extractor(args: argparse.Namespace) -> PatternExtractor:
    return TieStrategyRegistry.get_extraction(
        args.ties,
        return_extractor=True,
        d=args.d,
        lag=args.lag,
        seed=args.seed,
        scheme=args.scheme,
        chunk_windows=args.chunk_windows,
        max_workers=args.workers,
    )


def _series_file(path: str, column: str, no_header: bool) -> SeriesFile:
    try:
        return SeriesFile(path=path, column=column, header=not no_header)
    except Exception as e:
        error_msg = f"Invalid input file options: {e}"
        logger.error(error_msg)
        raise ConfigurationError(error_msg) from e


def _extract(args: argparse.Namespace):
    extractor = _extractor(args)
    series = read_series(_series_file(args.input, args.column, args.no_header))
    if args.chunk_windows is not None:
        return extractor.extract_chunked(series)
    return extractor.extract(series)


def _run_table(args: argparse.Namespace, out: TextIO) -> None:
    out.write(render_table(code_table(args.d), args.format, args.scheme))


def _run_extract(args: argparse.Namespace, out: TextIO) -> None:
    out.write(render_sequence(_extract(args), args.format))


def _run_freq(args: argparse.Namespace, out: TextIO) -> None:
    if (args.input is None) == (args.from_codes is None):
        error_msg = "freq needs exactly one of --input and --from-codes."
        logger.error(error_msg)
        raise ConfigurationError(error_msg)
    if args.from_codes is not None:
        sequence = read_code_sequence(args.from_codes)
    else:
        if args.d is None:
            error_msg = "freq --input needs --d."
            logger.error(error_msg)
            raise ConfigurationError(error_msg)
        sequence = _extract(args)
    out.write(render_distribution(pattern_distribution(sequence), args.format, include_unobserved=args.all))


def _run_opd(args: argparse.Namespace, out: TextIO) -> None:
    extractor = _extractor(args)
    x = read_series(_series_file(args.input_x, args.column, args.no_header))
    y = read_series(_series_file(args.input_y, args.column_y or args.column, args.no_header))
    report = extractor.dependence(x, y)
    out.write(json.dumps(report.to_json_dict()) + "\n")


def _run_invert(args: argparse.Namespace, out: TextIO) -> None:
    try:
        values = tuple(int(v) for v in args.pattern.split(","))
        pattern = REPRESENTATIONS[args.rep](values)
    except (ValueError, InvalidPatternError) as e:
        error_msg = f"Malformed --pattern {args.pattern!r}: {e}"
        logger.error(error_msg)
        raise ConfigurationError(error_msg) from e
    out.write(format_tuple(INVERSIONS[args.mode](pattern).as_tuple()) + "\n")


def _one_line(error: BaseException) -> str:
    return " ".join(str(error).split())


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run the command line; returns the exit code.

    Args:
        argv (Optional[List[str]]): Arguments without the program name (default: sys.argv[1:]).
        out (Optional[TextIO]): Stream for command output (default: sys.stdout).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.verbose:
        setup_logging(debug=True, log_file=None)

    handler: Callable[[argparse.Namespace, TextIO], None] = args.handler
    try:
        handler(args, out or sys.stdout)
    except (ConfigurationError, RegistrationError) as e:
        print(f"ordinal-patterns: error: {_one_line(e)}", file=sys.stderr)
        return EXIT_USAGE
    except OrdinalPatternError as e:
        print(f"ordinal-patterns: error: {_one_line(e)}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK
