"""Command-line front end.

Subcommands: check (feasibility and admissible sets), solve (full
resolution), enumerate (list every candidate), verify (cross-check solver
against the brute-force oracle), generate (seeded random instances).

Exit codes: 0 success, 1 input error, 2 infeasible, 3 enumeration cap or
oracle grid limit exceeded, 4 solver/oracle disagreement. Reports go to
stdout, diagnostics to stderr. All row/column indices in output are
1-based; text mode rounds values to 4 decimals, structured mode emits full
precision.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import __version__
from .core import Instance, Point
from .feasibility import InfeasibleSystemError, compute_index_sets
from .files import (
    InstanceFormatError,
    build_report_data,
    load_instance,
    render_report_json,
    serialize_instance,
)
from .generate import generate_instance
from .objective import OBJECTIVES
from .oracle import (
    DEFAULT_LIMIT,
    GridTooLargeError,
    brute_force_minimal,
    brute_force_optimum,
)
from .solver import SolveReport, SolverOptions, solve, solve_unpruned
from .structure import DEFAULT_CAP, CapExceededError, Selector, enumerate_candidates


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors, which this tool reserves for
    infeasible systems; remap to the input-error code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fail(message: str) -> None:
    print(f"frisolve: error: {message}", file=sys.stderr)


def _default_cap() -> int:
    raw = os.environ.get("FRI_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InstanceFormatError(f"FRI_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise InstanceFormatError(f"FRI_CAP must be >= 1, got {cap}")
    return cap


def _fmt_value(v: float) -> str:
    return f"{v:.4f}"


def _fmt_point(p: Point) -> str:
    return "[" + ", ".join(f"{float(v):.4f}" for v in p) + "]"


def _fmt_selector(sel: Selector) -> str:
    return "[" + ", ".join("-" if c is None else str(c + 1) for c in sel.columns) + "]"


def _print_index_sets(idx) -> None:
    for i, s in enumerate(idx.sets):
        member_list = "{" + ", ".join(str(j + 1) for j in s) + "}"
        mark = "  (vacuous)" if idx.vacuous[i] else ""
        print(f"J({i + 1}) = {member_list}{mark}")


def _print_header(name: Optional[str], inst: Instance) -> None:
    shown = name if name is not None else "(unnamed)"
    print(f"instance: {shown} (m={inst.m}, n={inst.n})")


def cmd_check(args: argparse.Namespace) -> int:
    inst, name = load_instance(args.path)
    idx = compute_index_sets(inst)
    _print_header(name, inst)
    _print_index_sets(idx)
    if idx.feasible:
        print("feasible: yes (the all-ones point is the maximum solution)")
        return 0
    rows = ", ".join(str(i + 1) for i in idx.empty_rows)
    print(f"feasible: no (no admissible columns for row(s) {rows})")
    return 2


def _print_text_report(report: SolveReport, name: Optional[str], inst: Instance, objective) -> None:
    _print_header(name, inst)
    if not report.verdict.feasible:
        rows = ", ".join(str(i + 1) for i in report.verdict.empty_rows)
        print(f"feasible: no (no admissible columns for row(s) {rows})")
        return
    _print_index_sets(report.index_sets)
    print(f"|E| = {report.selector_count}")
    if report.minimal_solutions:
        print(f"minimal solutions: {len(report.minimal_solutions)}")
        for cand in report.minimal_solutions:
            value = objective(cand.point)
            print(
                f"  e = {_fmt_selector(cand.selector)}  "
                f"x(e) = {_fmt_point(cand.point)}  f = {_fmt_value(value)}"
            )
    else:
        print("minimal solutions: not computed (pruning skipped)")
    print(f"optimizer: e = {_fmt_selector(report.optimizer.selector)}")
    print(f"x* = {_fmt_point(report.optimizer.point)}")
    print(f"f* = {_fmt_value(report.optimal_value)}")
    if report.cells:
        print(f"cells: {len(report.cells)}")
    stages = ", ".join(f"{k} {v:.3f}s" for k, v in report.timing.items())
    print(f"timings: {stages}")


def cmd_solve(args: argparse.Namespace) -> int:
    inst, name = load_instance(args.path)
    objective = OBJECTIVES[args.objective]
    cap = args.cap if args.cap is not None else _default_cap()
    options = SolverOptions(cap=cap, workers=args.workers)
    runner = solve_unpruned if args.no_prune else solve
    report = runner(inst, objective, options)
    if args.format == "structured":
        data = build_report_data(report, objective, name, include_timings=args.timings)
        sys.stdout.write(render_report_json(data))
    else:
        _print_text_report(report, name, inst, objective)
    return 0 if report.verdict.feasible else 2


def cmd_enumerate(args: argparse.Namespace) -> int:
    inst, name = load_instance(args.path)
    cap = args.cap if args.cap is not None else _default_cap()
    count = 0
    for cand in enumerate_candidates(inst, cap=cap):
        print(f"e = {_fmt_selector(cand.selector)}  x(e) = {_fmt_point(cand.point)}")
        count += 1
    print(f"|E| = {count}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst, name = load_instance(args.path)
    _print_header(name, inst)
    report = solve(inst, OBJECTIVES[args.objective], SolverOptions(cap=_default_cap()))
    oracle_minimal = brute_force_minimal(inst, limit=args.limit)

    if not report.verdict.feasible:
        rows = ", ".join(str(i + 1) for i in report.verdict.empty_rows)
        print(f"solver: infeasible (row(s) {rows})")
        if oracle_minimal:
            print(f"oracle: found {len(oracle_minimal)} minimal point(s)")
            print("verdict: DISAGREE")
            return 4
        print("oracle: no feasible grid points")
        print("verdict: agree")
        return 0

    oracle_point, oracle_value = brute_force_optimum(
        inst, OBJECTIVES[args.objective], limit=args.limit
    )
    solver_points = sorted(c.point for c in report.minimal_solutions)
    minimal_agree = solver_points == oracle_minimal
    value_agree = report.optimal_value == oracle_value

    print(
        f"solver: {len(solver_points)} minimal solution(s), "
        f"optimal value {report.optimal_value!r}"
    )
    print(
        f"oracle: {len(oracle_minimal)} minimal point(s), "
        f"optimal value {oracle_value!r}"
    )
    print(f"minimal set: {'agree' if minimal_agree else 'DISAGREE'}")
    print(f"optimal value: {'agree' if value_agree else 'DISAGREE'}")
    if minimal_agree and value_agree:
        print("verdict: agree")
        return 0
    print("verdict: DISAGREE")
    return 4


def cmd_generate(args: argparse.Namespace) -> int:
    inst, name = generate_instance(
        args.m, args.n, seed=args.seed, feasible=not args.infeasible, density=args.density
    )
    text = serialize_instance(inst, name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="frisolve",
        description=(
            "Feasibility, minimal solutions, and exact monotone-objective "
            "optimization for systems max_j max(a_ij + x_j - 1, 0) >= b_i "
            "over the unit cube."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide feasibility and print the admissible sets")
    p_check.add_argument("path", help="instance file")
    p_check.set_defaults(func=cmd_check)

    p_solve = sub.add_parser("solve", help="full resolution: minimal solutions and the optimum")
    p_solve.add_argument("path", help="instance file")
    p_solve.add_argument(
        "--objective", choices=sorted(OBJECTIVES), default="lse",
        help="objective to minimize (default: lse, log-sum-exp)",
    )
    p_solve.add_argument(
        "--no-prune", action="store_true",
        help="skip pruning; same optimum, no minimal-solution set in the report",
    )
    p_solve.add_argument("--cap", type=int, default=None, help="candidate cap (default 10^6 or FRI_CAP)")
    p_solve.add_argument("--workers", type=int, default=1, help="concurrent candidate builders")
    p_solve.add_argument("--format", choices=["text", "structured"], default="text")
    p_solve.add_argument(
        "--timings", action="store_true",
        help="include wall-clock timings in structured output (breaks byte identity across runs)",
    )
    p_solve.set_defaults(func=cmd_solve)

    p_enum = sub.add_parser("enumerate", help="list every candidate x(e) with its selector")
    p_enum.add_argument("path", help="instance file")
    p_enum.add_argument("--cap", type=int, default=None, help="candidate cap (default 10^6 or FRI_CAP)")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="cross-check the solver against brute-force search")
    p_verify.add_argument("path", help="instance file")
    p_verify.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="grid-point limit")
    p_verify.add_argument("--objective", choices=sorted(OBJECTIVES), default="lse")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("generate", help="emit a seeded random instance file")
    p_gen.add_argument("m", type=int, help="rows")
    p_gen.add_argument("n", type=int, help="columns")
    p_gen.add_argument("--seed", type=int, required=True, help="RNG seed (same seed, same file)")
    p_gen.add_argument("--infeasible", action="store_true", help="force an unreachable threshold")
    p_gen.add_argument(
        "--density", type=float, default=1.0,
        help="threshold shaping; larger values enlarge the admissible sets",
    )
    p_gen.add_argument("-o", "--output", default=None, help="write here instead of stdout")
    p_gen.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        _fail(str(exc))
        return 1
    except InfeasibleSystemError as exc:
        _fail(str(exc))
        return 2
    except CapExceededError as exc:
        _fail(str(exc))
        return 3
    except GridTooLargeError as exc:
        _fail(str(exc))
        return 3
    except FileNotFoundError as exc:
        _fail(f"cannot read {exc.filename}: no such file")
        return 1
    except OSError as exc:
        _fail(str(exc))
        return 1
    except ValueError as exc:
        _fail(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
