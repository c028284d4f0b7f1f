from __future__ import annotations
from os import cpu_count
from pathlib import Path
import argparse
import sys

import argcomplete

from .. import __version__  # Extract version without importing numpy / scipy


_DEFAULT_CF = Path.home() / ".config" / "drgdist.json"
_TABLES = ("antipodal", "bipartite", "classical", "negative-classical", "all")
_PARSE_ERROR: int = 1  # ExitCode.parse_error


def _cli(parser: argparse.ArgumentParser, parsed: argparse.Namespace) -> None:
    """
    We import main from CLI after parsing arguments because
    it is slow, and not necessary for --help or --version
    """
    # pylint: disable=import-outside-toplevel,cyclic-import
    from .main import main

    main(parser, parsed)


class _Parser(argparse.ArgumentParser):
    """
    Command line errors exit with the parse error code
    """

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(_PARSE_ERROR, f"{self.prog}: error: {message}\n")


def _positive_float(text: str) -> float:
    if (ret := float(text)) <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return ret


def cli() -> None:
    """
    Parses arguments then invokes drgdist
    """
    cpu: int = cpu_count() or 1
    parser = _Parser(add_help=False, description="Least Euclidean distortion of distance-regular graphs")
    parser.add_argument("-h", "--help", action="help", help="show this help message and exit")
    parser.add_argument("-V", "--version", action="version", version=f"{parser.prog} {__version__}")
    # Output
    out_g = parser.add_argument_group("Output")
    out_g.add_argument("--json", action="store_true", help="Emit one JSON object per line instead of tables")
    # Config options
    config = parser.add_argument_group("Configuration")
    config.add_argument(
        "-C", "--config-file", type=Path, default=_DEFAULT_CF, help="The tolerance config file"
    )
    config.add_argument(
        "--tol",
        dest="certify_rel",
        metavar="REL",
        type=_positive_float,
        default=None,
        help="Relative tolerance for certification and conjecture ties; overrides the config file",
    )
    log_g = parser.add_argument_group("Logging")
    # pylint: disable=duplicate-code
    log_g.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase Log verbosity, pass more than once to increase verbosity",
    )
    log_g.add_argument("-N", "--no-color-log", action="store_true", help="Disable color in the log output")
    # Commands
    cmds = parser.add_subparsers(title="Commands", dest="command", required=True)
    analyze_p = cmds.add_parser("analyze", help="Analyze one intersection array, ex. '{3,2;1,1}'")
    analyze_p.add_argument("array", help="The intersection array {b_0,...,b_{d-1};c_1,...,c_d}")
    analyze_p.add_argument("--all-r", action="store_true", help="Print the full (r, j) bound table")
    corpus_p = cmds.add_parser("corpus", help="Check every array of a corpus file")
    corpus_p.add_argument(
        "path", type=Path, nargs="?", default=None, help="The corpus file; defaults to the shipped tables"
    )
    corpus_p.add_argument(
        "--keep-going", action="store_true", help="Exit 0 even if some line fails to parse or check"
    )
    corpus_p.add_argument(
        "-j",
        "--threads",
        metavar=f"[1-{cpu}]" if cpu > 1 else "1",
        choices=range(1, cpu + 1),
        default=1,
        type=int,
        help="The number of threads used to check lines. Default: 1",
    )
    corpus_p.add_argument("-P", "--progress", action="store_true", help="Show a progress bar")
    family_p = cmds.add_parser("family", help="Analyze a family instance against its closed form")
    family_p.add_argument("name", help="The family id; see the list command")
    family_p.add_argument("params", nargs="*", help="The family parameters, ex. 3 2")
    family_p.add_argument("--all-r", action="store_true", help="Print the full (r, j) bound table")
    oracle_p = cmds.add_parser("oracle", help="Embed an explicit graph and compare against the cosines")
    oracle_p.add_argument("kind", help="The graph kind, ex. petersen or hypercube")
    oracle_p.add_argument("params", nargs="*", type=int, help="The graph parameters")
    oracle_p.add_argument(
        "--theta-index", type=int, default=1, help="The eigenvalue index, in descending order. Default: 1"
    )
    table_p = cmds.add_parser("table", help="Reproduce a table of c_2(G)^2 values")
    table_p.add_argument("table", choices=_TABLES, help="The table to reproduce")
    cmds.add_parser("list", help="List every family and graph kind with its parameters")
    argcomplete.autocomplete(parser)  # Tab completion
    _cli(parser, parser.parse_args())
