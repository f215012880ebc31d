import argparse
import logging
import pathlib
import sys
from typing import Optional, Sequence

import colorama
import pandas as pd
from colorama import Fore, Style

from locally_stable.cli.arguments import init_args
from locally_stable.cli.grid import grid_repr, label_grid
from locally_stable.errors import LocallyStableError, ParameterError
from locally_stable.families import build_family, family_catalog, find_family
from locally_stable.prover import (
    TraceFormat,
    check_against_oracle,
    prove_trivial,
    render_trace,
)
from locally_stable.qstate import StateSet, is_genuinely_entangled, is_orthogonal_set, is_stopper
from locally_stable.setio import (
    FORMAT_VERSION,
    dumps,
    export_report,
    export_set,
    export_trace,
    read_set,
    write_document,
)
from locally_stable.solver import (
    CardinalityBound,
    Method,
    deletion_test,
    verify_local_stability,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def colored(text: str, color: str) -> str:
    """Escape codes only on an interactive terminal"""
    if sys.stdout.isatty():
        return f"{color}{text}{Style.RESET_ALL}"
    return text


def verdict_text(stable: bool) -> str:
    if stable:
        return colored("locally stable", Fore.GREEN)
    return colored("NOT locally stable", Fore.RED)


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def bound_text(bound: CardinalityBound) -> str:
    status = "met" if bound.meets_bound else "NOT met"
    if bound.attains_bound:
        status += " (attained)"
    return f"cardinality {bound.cardinality}, bound max(dims)+1 = {bound.bound}: {status}"


def _parties(s: StateSet, party: Optional[int]) -> list[int]:
    if party is None:
        return list(range(s.shape.n))
    if not 0 <= party < s.shape.n:
        raise ParameterError(f"party {party} out of range for {s.shape.n} parties")
    return [party]


def cmd_generate(args: argparse.Namespace) -> int:
    variants = {} if args.k is None else {"k": args.k}
    s = build_family(args.family, args.params, **variants)
    doc = export_set(s)
    if args.out is None:
        print(dumps(doc), end="")
        return EXIT_OK

    write_document(args.out, doc)
    print(f"wrote {len(s)} states over {s.shape} to {args.out}")
    print(bound_text(CardinalityBound.construct(s)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    s = read_set(args.path, validate=not args.no_validate, tol=args.ortho_tol)
    verdict = verify_local_stability(
        s,
        args.tol,
        _parties(s, args.party),
        Method(args.method),
        args.workers,
        args.ortho_tol,
    )

    print(f"set: {args.path} ({s.shape}, {len(s)} states)")
    print(
        f"tolerances: rank {args.tol:g}, orthogonality {args.ortho_tol:g}, method {verdict.method}"
    )
    table = pd.DataFrame(
        {
            "local_dim": [report.local_dim for report in verdict.reports],
            "dimension": [report.dimension for report in verdict.reports],
            "trivial": [yes_no(report.trivial) for report in verdict.reports],
        },
        index=pd.Index([report.party for report in verdict.reports], name="party"),
    )
    print(table.to_string())
    print(f"dimensions: {verdict.dimensions}")
    print(f"verdict: {verdict_text(verdict.locally_stable)}")
    print(bound_text(verdict.cardinality_bound))
    if verdict.locally_stable:
        print("implies: locally irreducible, locally indistinguishable")

    deletions = None
    if args.deletion_test:
        deletions = deletion_test(
            s, args.tol, Method(args.method), args.workers, args.ortho_tol
        )
        rows = pd.DataFrame(
            {
                "name": [row.name for row in deletions],
                "verdict": [
                    "stable" if row.locally_stable else "not stable" for row in deletions
                ],
                "dimensions": [str(list(row.dimensions)) for row in deletions],
            },
            index=pd.Index([row.removed for row in deletions], name="removed"),
        )
        print()
        print("deletion test")
        print(rows.to_string())
        optimal = not any(row.locally_stable for row in deletions)
        print(f"every single deletion breaks stability: {yes_no(optimal)}")

    if args.report is not None:
        write_document(args.report, export_report(verdict, deletions=deletions))
        logging.info(f"report written to {args.report}")
    return EXIT_OK if verdict.locally_stable else EXIT_NEGATIVE


def cmd_prove(args: argparse.Namespace) -> int:
    s = read_set(args.path, tol=args.ortho_tol)
    trace_format = TraceFormat(args.format)
    code = EXIT_OK
    documents = []
    if trace_format == TraceFormat.TEXT:
        print(f"tolerances: rank {args.tol:g}, orthogonality {args.ortho_tol:g}")
    for k in _parties(s, args.party):
        if args.check_against_oracle:
            trace, report, mismatches = check_against_oracle(
                s, k, args.tol, ortho_tol=args.ortho_tol
            )
        else:
            trace, report, mismatches = prove_trivial(s, k, ortho_tol=args.ortho_tol), None, []

        if trace_format == TraceFormat.TEXT:
            print(render_trace(trace), end="")
            if report is not None:
                print(
                    f"oracle: nullspace dimension {report.dimension}, {len(mismatches)} mismatches"
                )
                for mismatch in mismatches:
                    print(f"  {mismatch}")
            print()
        else:
            doc = export_trace(trace)
            if report is not None:
                doc["oracle"] = {"dimension": report.dimension, "mismatches": mismatches}
            documents.append(doc)

        if mismatches:
            code = EXIT_NEGATIVE
        elif not trace.trivial and not args.allow_inconclusive:
            code = EXIT_NEGATIVE

    if trace_format == TraceFormat.STRUCTURED:
        print(dumps({"format_version": FORMAT_VERSION, "traces": documents}), end="")
    return code


def _family_info(name: str) -> int:
    family = find_family(name)
    print(f"family: {family.name}")
    params = ", ".join(family.params) + (" (one or more)" if family.variadic else "")
    print(f"parameters: {params}")
    if family.variants:
        print(f"variants: {', '.join(family.variants)}")
    print(f"hypothesis: {family.hypothesis}")
    print(f"theorem: {family.theorem}")
    return EXIT_OK


def cmd_info(args: argparse.Namespace) -> int:
    if args.target in {family.name for family in family_catalog()}:
        return _family_info(args.target)

    s = read_set(pathlib.Path(args.target), validate=False)
    print(f"set: {args.target}")
    print(f"dims: {list(s.shape.dims)}")
    print(bound_text(CardinalityBound.construct(s)))
    check = is_orthogonal_set(s, args.ortho_tol)
    if check:
        print("orthogonal: yes")
    else:
        assert check.pair is not None
        print(
            f"orthogonal: no (states {check.pair[0]} and {check.pair[1]}, |overlap| = {check.overlap:.3g})"
        )
    table = pd.DataFrame(
        {
            "name": list(s.names),
            "terms": [len(state) for state in s.states],
            "norm2": [str(state.norm_squared) for state in s.states],
            "stopper": [yes_no(is_stopper(state)) for state in s.states],
            "genuinely entangled": [
                yes_no(is_genuinely_entangled(state, args.tol)) for state in s.states
            ],
        }
    )
    print(table.to_string(index=False))
    if args.grid:
        if s.shape.n != 2:
            raise ParameterError(f"--grid needs a bipartite set, got {s.shape.n} parties")
        print()
        print(grid_repr(label_grid(s), *s.shape.dims), end="")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = init_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    colorama.just_fix_windows_console()

    try:
        match args.command:
            case "generate":
                return cmd_generate(args)
            case "verify":
                return cmd_verify(args)
            case "prove":
                return cmd_prove(args)
            case "info":
                return cmd_info(args)
        raise ParameterError(f"unknown command {args.command}")
    except (LocallyStableError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
