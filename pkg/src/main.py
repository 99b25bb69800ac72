import argparse
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import ValidationError
from src.config import Settings, get_settings
from src.exceptions import ConfigurationError, ParseError
from src.schemas.report.models import Diagnostics, Report
from src.services.reporting.exit_codes import EXIT_OTHER, exit_code_for
from src.services.reporting.factory import make_command_runner, make_report_renderer

logger = logging.getLogger(__name__)

# Command -> (input file arguments, name of the trailing inline arguments or None)
COMMANDS = {
    "factor": (["images"], None),
    "norm": (["operator"], None),
    "modulus": (["operator"], None),
    "apply": (["operator", "vector"], None),
    "truncate": (["operator"], "labels"),
    "check-positive": (["operator"], None),
    "invert": (["operator"], None),
    "delta-basis": (["family"], None),
    "lex-dual": ([], "coeffs"),
}

COMMAND_HELP = {
    "factor": "Factor automorphism images into permutation x diagonal form",
    "norm": "Operator norm (maximum absolute row sum)",
    "modulus": "Modulus |T| of an operator",
    "apply": "Apply an operator to a vector",
    "truncate": "Finite truncation T_F to the given labels",
    "check-positive": "Decide positivity of an operator",
    "invert": "Inverse of an operator in the unital hull",
    "delta-basis": "Biorthogonal basis and points for a function family",
    "lex-dual": "Order boundedness of a functional on R^n_Lex",
}


class ReportingArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors are reported as ParseError (exit code 1)."""

    def error(self, message: str):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = ReportingArgumentParser(
        prog="lattice-automorphisms",
        description="Exact operator algebra on c00(Λ): lattice operations, norms and automorphism factorization",
    )
    parser.add_argument("--format", choices=["json", "text"], default=None, help="Output format")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=ReportingArgumentParser)
    for command, (files, trailing) in COMMANDS.items():
        subparser = subparsers.add_parser(command, help=COMMAND_HELP[command])
        for name in files:
            subparser.add_argument(name, help=f"Path to the {name} JSON file")
        if trailing == "labels":
            subparser.add_argument(trailing, nargs="*", help="Atom labels of the finite set F")
        elif trailing == "coeffs":
            subparser.add_argument(trailing, nargs="+", help="Functional coefficients as rationals")
    return parser


def _split_arguments(args: argparse.Namespace) -> Tuple[List[str], List[str]]:
    files, trailing = COMMANDS[args.command]
    paths = [getattr(args, name) for name in files]
    return paths, list(getattr(args, trailing)) if trailing else []


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return the process exit code."""
    try:
        settings: Settings = get_settings()
    except ValidationError as e:
        error = ConfigurationError(f"Invalid configuration: {e.error_count()} error(s)")
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_OTHER

    try:
        args = build_parser().parse_args(argv)
    except ParseError as e:
        report = Report(command="", diagnostics=Diagnostics(error=type(e).__name__, message=str(e)))
        report.exit_code = exit_code_for(e)
        sys.stdout.write(make_report_renderer(settings).render(report))
        return report.exit_code

    logging.basicConfig(
        level=logging.INFO if args.verbose else settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logger.info(f"Running {args.command} ({settings.service_name} {settings.app_version})")

    paths, arguments = _split_arguments(args)
    report = make_command_runner(settings).run(args.command, paths, arguments)
    sys.stdout.write(make_report_renderer(settings, args.format).render(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
