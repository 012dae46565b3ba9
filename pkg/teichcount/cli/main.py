"""
Command-line front end

Reports go to stdout (or --out); logs go to stderr. Exit codes:
0 success, 1 usage error, 2 geometric degeneracy, 3 invariant violation
or forbidden delta.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from ..config.validator import validate_configuration
from ..errors import DeltaViolation, UsageError
from ..flatsurf import DEFAULT_ALPHA
from ..models import Stratum
from . import commands
from .error_handler import EXIT_OK, CliErrorHandler
from .writers import emit

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}", {"argv_error": message})


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction_list(text: str) -> List[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Emit JSON instead of CSV")
    parser.add_argument("--out", type=Path, default=None, help="Write the report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teichcount", description="Cover counts, Siegel-Veech constants and slit-torus censuses")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    counts = sub.add_parser("counts", help="N_d and N_d^P from formulas, enumeration and the oracle")
    counts.add_argument("--d-min", type=int, default=2)
    counts.add_argument("--d-max", type=int, default=10)
    _add_output(counts)

    constants = sub.add_parser("constants", help="c, s1, s2 against their closed forms")
    constants.add_argument("--q-min", type=int, default=2)
    constants.add_argument("--q-max", type=int, default=50)
    _add_output(constants)

    volumes = sub.add_parser("volumes", help="Stratum volume estimates from cumulative counts")
    volumes.add_argument("--stratum", choices=[s.value for s in Stratum], default=None)
    volumes.add_argument("--D", dest="cutoffs", type=_int_list, default=[200, 2000])
    volumes.add_argument("--trusted", action="store_true", help="Use the trusted H2 one-cylinder count")
    _add_output(volumes)

    census = sub.add_parser("census", help="Saddle-connection and cylinder counts on S(p/q, alpha)")
    census.add_argument("--p", type=int, default=1)
    census.add_argument("--q", type=int, default=2)
    census.add_argument("--alpha", default=DEFAULT_ALPHA, help="A,B,N,C for (A + B*sqrt(N))/C")
    census.add_argument("--t-grid", type=_fraction_list, default=[Fraction(20), Fraction(40)])
    _add_output(census)

    connectivity = sub.add_parser("connectivity", help="Normalize every primitive H(1,1) state to S0")
    connectivity.add_argument("--d", type=int, required=True)
    _add_output(connectivity)

    report = sub.add_parser("report", help="Run the acceptance checks")
    defaults = commands.ReportOptions()
    report.add_argument("--q-max", type=int, default=defaults.q_max)
    report.add_argument("--d-max", type=int, default=defaults.d_max)
    report.add_argument("--d-closed", type=int, default=defaults.d_closed)
    report.add_argument("--volume-d", type=_int_list, default=list(defaults.volume_cutoffs))
    report.add_argument("--mzv-n", type=int, default=defaults.mzv_n)
    report.add_argument("--fuzz", type=int, default=defaults.fuzz)
    report.add_argument("--structural-t", type=int, default=defaults.structural_t)
    report.add_argument("--cylinder-t", type=int, default=defaults.cylinder_t)
    report.add_argument("--census-t-q2", type=int, default=defaults.census_t_q2)
    report.add_argument("--census-t-q3", type=int, default=defaults.census_t_q3)
    report.add_argument("--alpha", default=defaults.alpha)
    _add_output(report)

    return parser


def _dispatch(args: argparse.Namespace) -> commands.CommandResult:
    if args.command == "counts":
        return commands.counts_command(args.d_min, args.d_max)
    if args.command == "constants":
        return commands.constants_command(args.q_min, args.q_max)
    if args.command == "volumes":
        strata = [Stratum(args.stratum)] if args.stratum else list(Stratum)
        return commands.volumes_command(strata, args.cutoffs, args.trusted)
    if args.command == "census":
        return commands.census_command(args.p, args.q, args.alpha, args.t_grid)
    if args.command == "connectivity":
        return commands.connectivity_command(args.d)
    options = commands.ReportOptions(
        q_max=args.q_max,
        d_max=args.d_max,
        d_closed=args.d_closed,
        volume_cutoffs=tuple(args.volume_d),
        mzv_n=args.mzv_n,
        fuzz=args.fuzz,
        structural_t=args.structural_t,
        cylinder_t=args.cylinder_t,
        census_t_q2=args.census_t_q2,
        census_t_q3=args.census_t_q3,
        alpha=args.alpha,
    )
    return commands.report_command(options)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and write its report.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    handler = CliErrorHandler()
    command = None
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        command = args.command
        validate_configuration()
        result = _dispatch(args)
        emit(result.rows, result.model, as_json=args.json, out=args.out, stream=sys.stdout)
        for name, value in result.notes.items():
            logger.info(f"{command} {name}: {value}")
        if result.failed:
            failure = DeltaViolation(f"{command} found forbidden deltas or failed checks", {"command": command})
            return handler.handle(failure, command)
        return EXIT_OK
    except Exception as exc:
        return handler.handle(exc, command)
