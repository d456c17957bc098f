"""Seeded random instance generation, for the CLI and the test suites.

Grades live on the 4-decimal grid k/10000, matching the precision of
hand-worked data and keeping every generated file exactly round-trippable.
Feasible mode draws each threshold at or below its row's largest grade, so
every admissible set is non-empty by construction; infeasible mode pushes
at least one threshold strictly above its row's largest grade. The same
seed always reproduces the same instance, byte for byte after
serialization.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Instance

GRID = 10_000


def generate_instance(
    m: int,
    n: int,
    seed: int,
    feasible: bool = True,
    density: float = 1.0,
) -> tuple[Instance, str]:
    """Draw one random instance; returns it with a descriptive name.

    density shapes the thresholds via b_i = u_i * max_j a_ij with
    u_i = r**density, r uniform on [0,1]: larger density pulls thresholds
    down, which enlarges the admissible sets and so the selector space.
    """
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be >= 1, got m={m}, n={n}")
    if density <= 0:
        raise ValueError(f"density must be > 0, got {density}")
    rng = random.Random(seed)
    A = [[Fraction(rng.randrange(GRID + 1), GRID) for _ in range(n)] for _ in range(m)]

    bad_row = rng.randrange(m) if not feasible else None
    if bad_row is not None:
        # a threshold strictly above the row maximum needs headroom
        A[bad_row] = [min(a, Fraction(GRID - 1, GRID)) for a in A[bad_row]]

    b = []
    for i in range(m):
        amax = max(A[i])
        if i == bad_row:
            ticks = amax.numerator * (GRID // amax.denominator)
            b.append(Fraction(ticks + 1 + rng.randrange(GRID - ticks), GRID))
        else:
            u = rng.random() ** density
            bi = Fraction(int(u * float(amax) * GRID), GRID)
            b.append(min(bi, amax))

    mode = "feasible" if feasible else "infeasible"
    name = f"random-{m}x{n}-seed{seed}-{mode}"
    return Instance(A=tuple(tuple(row) for row in A), b=tuple(b)), name
