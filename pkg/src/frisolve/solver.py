"""End-to-end resolution: feasibility gate, candidate enumeration, pruning,
and objective comparison.

Why a finite scan gives the global optimum over an uncountable region: the
feasible set is a finite union of boxes [x(e), ones], the objective is
monotone nondecreasing, so on each box the objective's minimum sits at the
bottom corner x(e), and the global minimum is the best bottom corner. The
minimal solutions are a subset of the candidates containing all best
corners, which is why solve_unpruned may skip the pruning pass entirely
without changing the optimal value.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import Instance, Point
from .feasibility import (
    FeasibilityVerdict,
    IndexSets,
    check_feasibility,
    compute_index_sets,
)
from .objective import Objective, log_sum_exp
from .structure import (
    DEFAULT_CAP,
    Candidate,
    build_candidates,
    cell_decomposition,
    check_enumerable,
    enumerate_candidates,
    prune_to_minimal,
    selector_choices,
)


@dataclass(frozen=True)
class SolverOptions:
    """Resolution knobs.

    cap bounds the number of enumerated candidates (None disables the
    bound); workers > 1 builds candidates concurrently over disjoint
    selector ranges. Results are identical for any worker count: the
    reduction is associative and ties are broken by a total order.
    """

    cap: int | None = DEFAULT_CAP
    workers: int = 1

    def __post_init__(self) -> None:
        if self.cap is not None and self.cap < 1:
            raise ValueError(f"cap must be >= 1 or None, got {self.cap}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class SolveReport:
    """Everything the resolution produced.

    For an infeasible system only verdict and index_sets are populated;
    selector_count is None and optimizer/optimal_value stay None.
    solve_unpruned leaves minimal_solutions and cells empty even when an
    optimizer is found, since it never classifies candidates.
    """

    verdict: FeasibilityVerdict
    index_sets: IndexSets
    selector_count: int | None
    candidates_enumerated: int
    minimal_solutions: tuple[Candidate, ...]
    optimizer: Candidate | None
    optimal_value: float | None
    cells: tuple[tuple[Point, Point], ...]
    timing: dict[str, float] = field(default_factory=dict)


def _infeasible_report(verdict: FeasibilityVerdict, idx: IndexSets, t0: float) -> SolveReport:
    return SolveReport(
        verdict=verdict,
        index_sets=idx,
        selector_count=None,
        candidates_enumerated=0,
        minimal_solutions=(),
        optimizer=None,
        optimal_value=None,
        cells=(),
        timing={"total": time.perf_counter() - t0},
    )


def _choice_chunks(idx: IndexSets, workers: int) -> list[list[tuple[int, ...]]]:
    """Split the selector space into at most ``workers`` contiguous runs."""
    choices = list(selector_choices(idx))
    size, extra = divmod(len(choices), workers)
    chunks = []
    start = 0
    for k in range(workers):
        stop = start + size + (1 if k < extra else 0)
        if stop > start:
            chunks.append(choices[start:stop])
        start = stop
    return chunks


def _all_candidates(inst: Instance, idx: IndexSets, options: SolverOptions) -> list[Candidate]:
    check_enumerable(idx, options.cap)
    if options.workers == 1:
        return build_candidates(inst, idx, selector_choices(idx))
    chunks = _choice_chunks(idx, options.workers)
    with ThreadPoolExecutor(max_workers=options.workers) as pool:
        parts = list(pool.map(lambda ch: build_candidates(inst, idx, ch), chunks))
    return [cand for part in parts for cand in part]


def _best_candidate(objective: Objective, candidates) -> tuple[Candidate, float]:
    """Streaming minimum under the total order (value, selector); the
    selector tie-break makes the result independent of visit order."""
    best = None
    best_key = None
    for cand in candidates:
        key = (objective(cand.point), cand.selector.key)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    if best is None:
        raise ValueError("no candidates to minimize over")
    return best, best_key[0]


def solve(
    inst: Instance,
    objective: Objective = log_sum_exp,
    options: SolverOptions | None = None,
) -> SolveReport:
    """Full resolution: decide feasibility, enumerate all candidates, prune
    to the exact minimal-solution set, and minimize the objective over it.

    The returned optimizer is the global minimum of the objective over the
    entire feasible region, provided the objective is monotone
    nondecreasing under the componentwise order. Ties between minimal
    solutions break toward the smaller objective value, then the
    lexicographically smallest selector.
    """
    options = options or SolverOptions()
    t0 = time.perf_counter()
    idx = compute_index_sets(inst)
    verdict = check_feasibility(inst, idx)
    t_idx = time.perf_counter()
    if not verdict.feasible:
        return _infeasible_report(verdict, idx, t0)

    candidates = _all_candidates(inst, idx, options)
    t_enum = time.perf_counter()
    minimal = tuple(prune_to_minimal(candidates))
    t_prune = time.perf_counter()
    optimizer, value = _best_candidate(objective, minimal)
    cells = tuple(cell_decomposition(list(minimal)))
    t_end = time.perf_counter()

    return SolveReport(
        verdict=verdict,
        index_sets=idx,
        selector_count=len(candidates),
        candidates_enumerated=len(candidates),
        minimal_solutions=minimal,
        optimizer=optimizer,
        optimal_value=value,
        cells=cells,
        timing={
            "index_sets": t_idx - t0,
            "candidates": t_enum - t_idx,
            "prune": t_prune - t_enum,
            "select": t_end - t_prune,
            "total": t_end - t0,
        },
    )


def solve_unpruned(
    inst: Instance,
    objective: Objective = log_sum_exp,
    options: SolverOptions | None = None,
) -> SolveReport:
    """Resolution without the quadratic pruning pass: a single streaming
    minimum over all candidates.

    Every candidate is feasible and every minimal solution is a candidate,
    so the optimal value is identical to solve's; the report just carries
    no minimal-solution set or cells. Preferred when only the optimum is
    wanted and the candidate count is large.
    """
    options = options or SolverOptions()
    t0 = time.perf_counter()
    idx = compute_index_sets(inst)
    verdict = check_feasibility(inst, idx)
    t_idx = time.perf_counter()
    if not verdict.feasible:
        return _infeasible_report(verdict, idx, t0)

    count = check_enumerable(idx, options.cap)
    if options.workers == 1:
        optimizer, value = _best_candidate(
            objective, enumerate_candidates(inst, idx, cap=options.cap)
        )
    else:
        chunks = _choice_chunks(idx, options.workers)

        def chunk_best(choices: list[tuple[int, ...]]) -> tuple[Candidate, float]:
            return _best_candidate(objective, build_candidates(inst, idx, choices))

        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            bests = list(pool.map(chunk_best, chunks))
        optimizer, value = min(bests, key=lambda bv: (bv[1], bv[0].selector.key))
    t_end = time.perf_counter()

    return SolveReport(
        verdict=verdict,
        index_sets=idx,
        selector_count=count,
        candidates_enumerated=count,
        minimal_solutions=(),
        optimizer=optimizer,
        optimal_value=value,
        cells=(),
        timing={
            "index_sets": t_idx - t0,
            "candidates": t_end - t_idx,
            "total": t_end - t0,
        },
    )
