"""Command-line driver.

Subcommands recompute one slice of the results and diff it against the
references: ``table {1|2|3|4|summary}``, ``appendix {A|B|C12|C16|D}``,
``check {sigma-rho|thm65|sec7|curvature-oracle|gammahat}`` and ``all``.
Exit status: 0 when everything matches, 1 on any mismatch, 2 on usage
errors.  The fixture directory can be overridden with --fixtures or the
CURVALG_FIXTURES environment variable.
"""

from __future__ import annotations

import argparse
import sys

from . import reports
from .reports import APPENDIX_NAMES, CHECK_NAMES, FIXTURES_ENV, TABLE_NAMES


def _add_common_options(parser, suppress=False):
    # with SUPPRESS the subparser only touches the namespace when the flag
    # is actually given, so flags work before and after the subcommand
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--epsilon",
        choices=["+1", "-1", "both"],
        default="both" if not suppress else default,
        help="restrict the W-symmetry sign (default: both)",
    )
    parser.add_argument(
        "--format",
        choices=["text", "csv", "json"],
        default="text" if not suppress else default,
        help="output format (default: text)",
    )
    parser.add_argument(
        "--fixtures",
        metavar="DIR",
        default=default,
        help=f"fixture directory (default: packaged files, or ${FIXTURES_ENV})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvalg",
        description="Recompute the symmetry-class tables, appendix formulas "
        "and theorem checks, and verify them against the shipped references.",
    )
    _add_common_options(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="recompute one of the survey tables")
    p_table.add_argument("which", choices=TABLE_NAMES)

    p_appendix = sub.add_parser("appendix", help="recompute an appendix formula")
    p_appendix.add_argument("which", choices=APPENDIX_NAMES)

    p_check = sub.add_parser("check", help="run a theorem or oracle check")
    p_check.add_argument("which", choices=CHECK_NAMES)

    p_all = sub.add_parser("all", help="run every table, appendix and check")
    for p in (p_table, p_appendix, p_check, p_all):
        _add_common_options(p, suppress=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "table":
        out = [reports.table_report(args.which, args.epsilon)]
    elif args.command == "appendix":
        out = [reports.appendix_report(args.which, args.epsilon, args.fixtures)]
    elif args.command == "check":
        out = [reports.check_report(args.which)]
    else:
        out = reports.all_reports(args.epsilon, args.fixtures)
    rendered = [reports.render(rep, args.format) for rep in out]
    sep = "\n\n" if args.format == "text" else "\n"
    print(sep.join(rendered))
    return 0 if all(rep.ok for rep in out) else 1


if __name__ == "__main__":
    sys.exit(main())
