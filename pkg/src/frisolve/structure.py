"""Candidate minimal solutions and the box decomposition of the feasible set.

For each constraining row i and admissible column j, the cheapest way to
satisfy row i through column j alone is the point with coordinate j set to
``1 + b_i - a_ij`` and every other coordinate 0. A selector picks one such
column per constraining row; the componentwise maximum of the picked
single-row points is the candidate x(e), feasible by construction. Every
minimal solution of the system is one of the candidates, so dominance
pruning over the finite candidate set recovers the exact minimal-solution
set, and the feasible region is the union of boxes [x(e), ones].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .core import ONE, ZERO, Instance, Point, ones
from .feasibility import IndexSets, InfeasibleSystemError, compute_index_sets

DEFAULT_CAP = 10**6


class CapExceededError(RuntimeError):
    """Enumeration would exceed the configured candidate cap.

    ``count`` is the exact size of the full selector set, computed before
    any candidate is built, so the caller can decide whether to raise the
    cap or give up.
    """

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"enumeration needs {count} candidates, exceeding the cap of {cap}; "
            f"raise the cap to proceed"
        )


@dataclass(frozen=True)
class Selector:
    """One column choice per row: columns[i] is the picked column (0-based)
    for constraining row i, and None for vacuous rows."""

    columns: tuple[Optional[int], ...]

    @property
    def key(self) -> tuple[int, ...]:
        """Ordering key: the chosen columns of constraining rows only.

        Vacuous positions are identical across all selectors of an
        instance, so dropping them preserves lexicographic order.
        """
        return tuple(c for c in self.columns if c is not None)


@dataclass(frozen=True)
class Candidate:
    """A candidate minimal solution x(e) with its originating selector.

    is_minimal is None until pruning classifies the candidate.
    """

    selector: Selector
    point: Point
    is_minimal: Optional[bool] = None


def row_minimal(inst: Instance, i: int, j0: int) -> Point:
    """The minimal point satisfying row i through column j0 alone:
    coordinate j0 equals ``1 + b_i - a_ij0``, all others 0.

    Requires j0 admissible (a_ij0 >= b_i - epsilon, else the coordinate
    would exceed 1) and the row constraining (b_i > epsilon; a vacuous row
    needs no contribution at all and the minimality argument breaks).
    With epsilon > 0 the formula can overshoot 1 by at most epsilon; the
    coordinate is clamped to stay a valid grade.
    """
    if not 0 <= i < inst.m:
        raise ValueError(f"row index {i} out of range for m={inst.m}")
    if not 0 <= j0 < inst.n:
        raise ValueError(f"column index {j0} out of range for n={inst.n}")
    bi = inst.b[i]
    eps = inst.epsilon
    if bi - eps <= ZERO:
        raise ValueError(f"row {i + 1} is vacuous (b <= epsilon); it has no minimal point")
    a = inst.A[i][j0]
    if a < bi - eps:
        raise ValueError(
            f"column {j0 + 1} is not admissible for row {i + 1}: "
            f"a[{i + 1}][{j0 + 1}] < b[{i + 1}]"
        )
    value = ONE + bi - a
    if value > ONE:
        value = ONE
    coords = [ZERO] * inst.n
    coords[j0] = value
    return tuple(coords)


def selector_count(idx: IndexSets) -> int:
    """Exact size of the selector set: the product of |J(i)| over
    constraining rows (1 when every row is vacuous)."""
    return math.prod(len(idx.sets[i]) for i in idx.constraining_rows)


def _coordinate_table(inst: Instance, idx: IndexSets) -> dict[tuple[int, int], Fraction]:
    """Precompute the nonzero coordinate 1 + b_i - a_ij for every
    (constraining row, admissible column) pair."""
    table = {}
    for i in idx.constraining_rows:
        bi = inst.b[i]
        row = inst.A[i]
        for j in idx.sets[i]:
            v = ONE + bi - row[j]
            table[(i, j)] = v if v <= ONE else ONE
    return table


def _build_point(
    n: int,
    rows: tuple[int, ...],
    choice: tuple[int, ...],
    table: dict[tuple[int, int], Fraction],
) -> Point:
    coords = [ZERO] * n
    for i, j in zip(rows, choice):
        v = table[(i, j)]
        if v > coords[j]:
            coords[j] = v
    return tuple(coords)


def _selector_from_choice(m: int, rows: tuple[int, ...], choice: tuple[int, ...]) -> Selector:
    columns: list[Optional[int]] = [None] * m
    for i, j in zip(rows, choice):
        columns[i] = j
    return Selector(columns=tuple(columns))


def candidate_from_selector(inst: Instance, idx: IndexSets, e: Selector) -> Candidate:
    """Build the candidate x(e) for one selector: the componentwise maximum
    of row_minimal(i, e(i)) over constraining rows (the zero point when
    every row is vacuous)."""
    if len(e.columns) != idx.m:
        raise ValueError(f"selector has {len(e.columns)} entries, expected {idx.m}")
    rows = idx.constraining_rows
    for i, c in enumerate(e.columns):
        if idx.vacuous[i]:
            if c is not None:
                raise ValueError(f"selector assigns a column to vacuous row {i + 1}")
        elif c is None:
            raise ValueError(f"selector misses constraining row {i + 1}")
        elif c not in idx.sets[i]:
            raise ValueError(f"selector column {c + 1} is not admissible for row {i + 1}")
    table = _coordinate_table(inst, idx)
    choice = tuple(e.columns[i] for i in rows)
    return Candidate(selector=e, point=_build_point(inst.n, rows, choice, table))


def selector_choices(idx: IndexSets) -> Iterator[tuple[int, ...]]:
    """All column choices for the constraining rows, in lexicographic
    order: the cartesian product of their admissible sets.

    Each yielded tuple pairs positionally with idx.constraining_rows; when
    every row is vacuous the single empty choice is yielded.
    """
    return itertools.product(*(idx.sets[i] for i in idx.constraining_rows))


def build_candidates(
    inst: Instance,
    idx: IndexSets,
    choices: Iterable[tuple[int, ...]],
) -> list[Candidate]:
    """Build the candidates for a batch of selector choices, preserving
    input order.

    Construction is a pure function of (inst, idx, choice), so disjoint
    batches may be built concurrently and concatenated.
    """
    rows = idx.constraining_rows
    table = _coordinate_table(inst, idx)
    n, m = inst.n, inst.m
    return [
        Candidate(
            selector=_selector_from_choice(m, rows, choice),
            point=_build_point(n, rows, choice, table),
        )
        for choice in choices
    ]


def check_enumerable(idx: IndexSets, cap: int | None) -> int:
    """Gate for enumeration: raises on an infeasible system or a selector
    set larger than ``cap``; returns the exact selector count otherwise."""
    if not idx.feasible:
        raise InfeasibleSystemError(list(idx.empty_rows))
    count = selector_count(idx)
    if cap is not None and count > cap:
        raise CapExceededError(count, cap)
    return count


def enumerate_candidates(
    inst: Instance,
    idx: IndexSets | None = None,
    cap: int | None = DEFAULT_CAP,
) -> Iterator[Candidate]:
    """Stream every candidate x(e) in lexicographic selector order.

    The total count, the product of the |J(i)|, is computed up front:
    an infeasible system or a product beyond ``cap`` raises immediately,
    before any candidate is built. Pass cap=None to disable the cap.
    """
    if idx is None:
        idx = compute_index_sets(inst)
    check_enumerable(idx, cap)
    rows = idx.constraining_rows
    table = _coordinate_table(inst, idx)
    n, m = inst.n, inst.m

    def stream() -> Iterator[Candidate]:
        for choice in selector_choices(idx):
            yield Candidate(
                selector=_selector_from_choice(m, rows, choice),
                point=_build_point(n, rows, choice, table),
            )

    return stream()


def prune_to_minimal(candidates: Iterable[Candidate]) -> list[Candidate]:
    """Filter candidates down to the dominance-minimal points.

    A candidate is dropped iff some other candidate's point is <= it
    componentwise and differs somewhere; exact duplicates collapse to the
    one with the lexicographically smallest selector. Comparisons are
    exact: coordinates are exact rationals, so ties are genuine ties.

    Survivors come back in selector order with is_minimal set; they are
    exactly the minimal solutions of the system when the input is the full
    candidate set.
    """
    by_point: dict[Point, Candidate] = {}
    for cand in candidates:
        kept = by_point.get(cand.point)
        if kept is None or cand.selector.key < kept.selector.key:
            by_point[cand.point] = cand

    # A dominator has a strictly smaller coordinate sum, so after sorting
    # by sum only earlier survivors can dominate: one pass suffices.
    ordered = sorted(by_point.values(), key=lambda c: (sum(c.point), c.point))
    survivors: list[Candidate] = []
    for cand in ordered:
        dominated = any(
            all(sj <= cj for sj, cj in zip(s.point, cand.point))
            for s in survivors
        )
        if not dominated:
            survivors.append(cand)
    survivors.sort(key=lambda c: c.selector.key)
    return [replace(c, is_minimal=True) for c in survivors]


def cell_decomposition(minimal: list[Candidate]) -> list[tuple[Point, Point]]:
    """One closed box [x(e), ones] per minimal candidate; their union is
    the whole feasible region."""
    if not minimal:
        raise ValueError("cell decomposition needs at least one candidate")
    n = len(minimal[0].point)
    top = ones(n)
    return [(c.point, top) for c in minimal]
