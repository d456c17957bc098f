"""Feasibility test, admissible index sets, and the maximum solution.

A row inequality ``max_j max(a_ij + x_j - 1, 0) >= b_i`` is satisfiable iff
some column grade reaches the threshold at ``x_j = 1``, i.e. iff
``a_ij >= b_i`` for some j. Collecting those columns per row gives the index
sets J(i) that drive candidate enumeration; the system is feasible iff every
J(i) is non-empty, and then the all-ones point is a solution that dominates
every other, so it is the maximum solution.

Indices are 0-based throughout the library; human-facing output (reports,
error messages) converts to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ZERO, Instance, Point, ones


class InfeasibleSystemError(ValueError):
    """Raised by operations that require a feasible system.

    ``empty_rows`` lists the 0-based rows whose threshold is unreachable
    even at the all-ones point.
    """

    def __init__(self, empty_rows: list[int]):
        self.empty_rows = list(empty_rows)
        noun = "row" if len(self.empty_rows) == 1 else "rows"
        listed = ", ".join(str(i + 1) for i in self.empty_rows)
        super().__init__(f"system is infeasible: {noun} {listed} cannot reach the threshold")


@dataclass(frozen=True)
class IndexSets:
    """Per-row admissible columns and the vacuous-row mask.

    sets[i] holds every column j with ``a_ij >= b_i - epsilon``, sorted
    ascending. vacuous[i] is true iff ``b_i <= epsilon``: such a row is
    satisfied by every point of the cube and contributes no choice during
    enumeration.
    """

    sets: tuple[tuple[int, ...], ...]
    vacuous: tuple[bool, ...]

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def empty_rows(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sets) if not s)

    @property
    def feasible(self) -> bool:
        return all(self.sets)

    @property
    def constraining_rows(self) -> tuple[int, ...]:
        """Rows that actually constrain the system: the non-vacuous ones."""
        return tuple(i for i, v in enumerate(self.vacuous) if not v)


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of the consistency check.

    feasible iff empty_rows is empty; maximum_solution is the all-ones
    point when feasible, None otherwise.
    """

    feasible: bool
    empty_rows: tuple[int, ...]
    maximum_solution: Point | None

    def __post_init__(self) -> None:
        if self.feasible != (not self.empty_rows):
            raise ValueError("feasible verdict contradicts empty_rows")


def compute_index_sets(inst: Instance) -> IndexSets:
    """Build J(i) = {j : a_ij >= b_i - epsilon} for every row, plus the
    vacuous mask (b_i <= epsilon)."""
    eps = inst.epsilon
    sets = tuple(
        tuple(j for j, a in enumerate(row) if a >= bi - eps)
        for row, bi in zip(inst.A, inst.b)
    )
    vacuous = tuple(bi - eps <= ZERO for bi in inst.b)
    return IndexSets(sets=sets, vacuous=vacuous)


def check_feasibility(inst: Instance, idx: IndexSets | None = None) -> FeasibilityVerdict:
    """Decide consistency: feasible iff every J(i) is non-empty, which holds
    iff the all-ones point is itself a member.

    Never raises on infeasible input; the verdict carries every offending
    row so diagnostics can name them all.
    """
    if idx is None:
        idx = compute_index_sets(inst)
    empty = idx.empty_rows
    if empty:
        return FeasibilityVerdict(feasible=False, empty_rows=empty, maximum_solution=None)
    return FeasibilityVerdict(feasible=True, empty_rows=(), maximum_solution=ones(inst.n))
