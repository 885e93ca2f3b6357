"""Command-line entrypoint.

Parsing lives here; the work lives in ``cli.commands`` and the calculation
layers underneath it.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from typing import NoReturn, TextIO

from .cli import commands
from .cli.errors import EXIT_OK, EXIT_USAGE, UsageError, configure_logging, report_error
from .config import AppConfig, load_config
from .core.families import FAMILIES

Handler = Callable[[argparse.Namespace, AppConfig, bool], str]


class CommandParser(argparse.ArgumentParser):
    """Raises UsageError so run_command can report to its own stderr."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(self.format_usage(), f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = CommandParser(
        prog="fanolab",
        description="Singularity content, r-modular sequences and the classification "
        "of Fano polygons whose cones all have determinant r.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="override FANOLAB_LOG_LEVEL",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("content", help="singularity content of a polygon document")
    p.add_argument("file", help="JSON polygon document, or - for stdin")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(handler=commands.content)

    p = sub.add_parser("winding", help="winding formula and twelve-point identity")
    p.add_argument("file", help="JSON sequence document with key 'vectors'")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(handler=commands.winding)

    p = sub.add_parser("family", help="instantiate a family model polygon")
    p.add_argument("family_id", choices=sorted(FAMILIES))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(handler=commands.family)

    p = sub.add_parser("predicate", help="published existence criterion for (k, r, s)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(handler=commands.predicate)

    p = sub.add_parser("census", help="homogeneous-basket census up to r-max")
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--jobs", type=_positive, default=None)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument(
        "--strict",
        action="store_true",
        help="fail on any disagreement with the published criterion",
    )
    p.set_defaults(handler=commands.census)

    p = sub.add_parser("verify", help="match every polygon at order r to a family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--jobs", type=_positive, default=None)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(handler=commands.verify)

    return parser


def run_command(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Run one subcommand; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    config = load_config()

    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        print(exc.usage, end="", file=stderr)
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    configure_logging(args.log_level or config.log_level)
    color = not config.no_color and stdout.isatty()
    handler: Handler = args.handler
    try:
        output = handler(args, config, color)
    except Exception as exc:
        return report_error(exc, stderr)
    print(output, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
