"""Objective functions for the solver, log-sum-exp first among them.

The solver minimizes an objective over a finite candidate set and its
optimality argument needs exactly one property of that objective: it must
be nondecreasing under the componentwise order (x <= y coordinatewise
implies f(x) <= f(y)). Any such function may be plugged in; violating the
contract voids the global-optimality guarantee without any runtime error.
log_sum_exp is the shipped default; max_coordinate and coordinate_sum are
simple monotone alternatives used to exercise the generic path.

Objectives take exact rational points but return binary floats: the report
boundary is where exact lattice arithmetic ends.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

from .core import GradeLike, _to_fraction

Objective = Callable[[Sequence[GradeLike]], float]


def log_sum_exp(x: Sequence[GradeLike]) -> float:
    """log(exp(x_1) + ... + exp(x_n)), evaluated in max-shifted form
    M + log(sum_j exp(x_j - M)) with M = max_j x_j.

    Coordinates in [0,1] cannot overflow either way, but the shifted form
    costs nothing and keeps the function safe for reuse on wider inputs.
    The exponential terms are accumulated with math.fsum, so the result is
    identical under any permutation of coordinates.
    """
    values = [float(_to_fraction(v, f"x[{k + 1}]")) for k, v in enumerate(x)]
    if not values:
        raise ValueError("log_sum_exp of an empty vector")
    shift = max(values)
    return shift + math.log(math.fsum(math.exp(v - shift) for v in values))


def max_coordinate(x: Sequence[GradeLike]) -> float:
    """The largest coordinate; the function log-sum-exp smooths."""
    values = [float(_to_fraction(v, f"x[{k + 1}]")) for k, v in enumerate(x)]
    if not values:
        raise ValueError("max_coordinate of an empty vector")
    return max(values)


def coordinate_sum(x: Sequence[GradeLike]) -> float:
    """The plain coordinate sum, the other easy monotone objective."""
    values = [float(_to_fraction(v, f"x[{k + 1}]")) for k, v in enumerate(x)]
    if not values:
        raise ValueError("coordinate_sum of an empty vector")
    return math.fsum(values)


OBJECTIVES: dict[str, Objective] = {
    "lse": log_sum_exp,
    "max": max_coordinate,
    "sum": coordinate_sum,
}


def monotone_on_pairs(
    f: Objective,
    pairs: Iterable[tuple[Sequence[GradeLike], Sequence[GradeLike]]],
) -> bool:
    """Spot-check the increasing-objective contract on given (x, y) pairs
    with x <= y componentwise: every pair must satisfy f(x) <= f(y).

    This is a sampling aid for tests, not a proof; the solver itself never
    verifies the contract at runtime.
    """
    return all(f(x) <= f(y) for x, y in pairs)
