import argparse
import pathlib
from typing import Optional, Sequence

from locally_stable.prover import TraceFormat
from locally_stable.qstate import ORTHOGONALITY_TOL, SCHMIDT_TOL
from locally_stable.solver import RANK_TOL, Method


def positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def _tolerances(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tol",
        type=positive_float,
        default=RANK_TOL,
        help=f"Relative rank tolerance of the nullspace (default {RANK_TOL})",
    )
    parser.add_argument(
        "--ortho-tol",
        type=positive_float,
        default=ORTHOGONALITY_TOL,
        help=f"Orthogonality tolerance at import (default {ORTHOGONALITY_TOL})",
    )


def _party(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--party", type=int, default=None, help="Only this party (0-based), all by default"
    )


def init_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        prog="locally-stable",
        description="Generate, verify and prove locally stable sets of orthogonal states",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        required=False,
        default=False,
        action="store_true",
        help="Enable debug logging",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Build a set from the family catalog")
    generate.add_argument("family", help="Family name, see `info FAMILY`")
    generate.add_argument("params", nargs="*", type=int, help="Family parameters")
    generate.add_argument("--k", type=int, default=None, help="bipartite_equal variant")
    generate.add_argument(
        "--out", type=pathlib.Path, default=None, help="Write the set here instead of stdout"
    )

    verify = commands.add_parser("verify", help="Numeric local stability verdict")
    verify.add_argument("path", type=pathlib.Path)
    _tolerances(verify)
    _party(verify)
    verify.add_argument(
        "--method", choices=[str(m) for m in Method], default=str(Method.SVD)
    )
    verify.add_argument(
        "--workers", type=positive_int, default=1, help="Parties verified in parallel"
    )
    verify.add_argument(
        "--deletion-test",
        default=False,
        action="store_true",
        help="Also verify the set with each single state removed",
    )
    verify.add_argument("--report", type=pathlib.Path, default=None, help="Write a report")
    verify.add_argument(
        "--no-validate",
        default=False,
        action="store_true",
        help="Skip the orthogonality check at import",
    )

    prove = commands.add_parser("prove", help="Symbolic proof traces")
    prove.add_argument("path", type=pathlib.Path)
    _tolerances(prove)
    _party(prove)
    prove.add_argument(
        "--format", choices=[str(f) for f in TraceFormat], default=str(TraceFormat.TEXT)
    )
    prove.add_argument(
        "--check-against-oracle",
        default=False,
        action="store_true",
        help="Replay every fact on the numeric nullspace",
    )
    prove.add_argument(
        "--allow-inconclusive",
        default=False,
        action="store_true",
        help="Exit 0 on inconclusive parties that the oracle does not contradict",
    )

    info = commands.add_parser("info", help="Describe a set file or a family")
    info.add_argument("target", help="Set document path or family name")
    info.add_argument(
        "--tol",
        type=positive_float,
        default=SCHMIDT_TOL,
        help=f"Relative Schmidt rank tolerance (default {SCHMIDT_TOL})",
    )
    info.add_argument(
        "--ortho-tol",
        type=positive_float,
        default=ORTHOGONALITY_TOL,
        help=f"Orthogonality tolerance (default {ORTHOGONALITY_TOL})",
    )
    info.add_argument(
        "--grid",
        default=False,
        action="store_true",
        help="Print the label grid of a bipartite set",
    )
    return parser.parse_args(argv)
