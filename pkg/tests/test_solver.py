"""End-to-end resolution: golden report, path equivalence, ties, workers."""

import math

import pytest

from frisolve import (
    CapExceededError,
    Instance,
    SolverOptions,
    is_member,
    log_sum_exp,
    max_coordinate,
    solve,
    solve_unpruned,
    zeros,
)

from conftest import (
    GOLDEN_MINIMAL,
    GOLDEN_OPT_VALUE,
    GOLDEN_OPTIMIZER_POINT,
    GOLDEN_OPTIMIZER_SELECTOR,
    GOLDEN_OTHER_VALUE,
    random_instances,
)


def test_golden_full_report(golden):
    report = solve(golden)
    assert report.verdict.feasible
    assert report.selector_count == 4
    assert report.candidates_enumerated == 4
    assert {c.point for c in report.minimal_solutions} == GOLDEN_MINIMAL
    assert report.optimizer.point == GOLDEN_OPTIMIZER_POINT
    assert report.optimizer.selector.columns == GOLDEN_OPTIMIZER_SELECTOR
    assert report.optimal_value == pytest.approx(GOLDEN_OPT_VALUE, abs=5e-4)
    other = next(
        c for c in report.minimal_solutions if c.point != report.optimizer.point
    )
    assert log_sum_exp(other.point) == pytest.approx(GOLDEN_OTHER_VALUE, abs=5e-4)
    assert len(report.cells) == 2
    assert report.optimal_value == log_sum_exp(report.optimizer.point)
    assert is_member(golden, report.optimizer.point)


def test_infeasible_report_has_no_optimizer():
    inst = Instance(A=(("0.3", "0.6"),), b=("0.7",))
    report = solve(inst)
    assert not report.verdict.feasible
    assert report.verdict.empty_rows == (0,)
    assert report.optimizer is None
    assert report.optimal_value is None
    assert report.minimal_solutions == ()
    assert report.selector_count is None


def test_all_zero_thresholds_optimize_to_the_bottom():
    inst = Instance(A=(("0.4", "0.9", "0.2"),), b=(0,))
    report = solve(inst)
    assert report.optimizer.point == zeros(3)
    assert report.optimal_value == pytest.approx(math.log(3), abs=1e-12)
    assert report.selector_count == 1


def test_unpruned_matches_solve_on_golden(golden):
    full = solve(golden)
    fast = solve_unpruned(golden)
    assert fast.optimal_value == full.optimal_value
    assert fast.optimizer.point == full.optimizer.point
    assert fast.minimal_solutions == ()
    assert fast.cells == ()


def test_unpruned_matches_solve_on_random_instances():
    for inst, name in random_instances(25, base_seed=7100):
        full = solve(inst)
        fast = solve_unpruned(inst)
        assert fast.optimal_value == full.optimal_value, name
        assert fast.optimizer.point == full.optimizer.point, name


def test_objective_ties_break_to_the_smallest_selector():
    # Two identical columns: the two minimal points are permutations of
    # each other, so their objective values tie bitwise.
    inst = Instance(A=(("0.8", "0.8"),), b=("0.6",))
    report = solve(inst)
    assert len(report.minimal_solutions) == 2
    values = {log_sum_exp(c.point) for c in report.minimal_solutions}
    assert len(values) == 1
    assert report.optimizer.selector.columns == (0,)


def test_workers_produce_identical_reports(golden):
    serial = solve(golden)
    for workers in (2, 3, 8):
        par = solve(golden, options=SolverOptions(workers=workers))
        assert par.minimal_solutions == serial.minimal_solutions
        assert par.optimizer == serial.optimizer
        assert par.optimal_value == serial.optimal_value
    fast_serial = solve_unpruned(golden)
    for workers in (2, 5):
        par = solve_unpruned(golden, options=SolverOptions(workers=workers))
        assert par.optimizer == fast_serial.optimizer
        assert par.optimal_value == fast_serial.optimal_value


def test_workers_agree_on_random_instances():
    for inst, name in random_instances(10, base_seed=8800, density=2.0):
        serial = solve(inst)
        par = solve(inst, options=SolverOptions(workers=4))
        assert par.minimal_solutions == serial.minimal_solutions, name
        assert par.optimal_value == serial.optimal_value, name


def test_cap_propagates_with_the_exact_count(golden):
    with pytest.raises(CapExceededError) as err:
        solve(golden, options=SolverOptions(cap=2))
    assert err.value.count == 4
    with pytest.raises(CapExceededError):
        solve_unpruned(golden, options=SolverOptions(cap=2, workers=3))


def test_generic_objective_lower_bounds_sampled_points(golden):
    # swap in the max objective; its optimum must still sit below the
    # objective at the golden feasible points we know
    report = solve(golden, objective=max_coordinate)
    assert report.optimal_value == pytest.approx(0.9892, abs=1e-12)
    for cand_point in GOLDEN_MINIMAL:
        assert report.optimal_value <= max_coordinate(cand_point)


def test_options_validation():
    with pytest.raises(ValueError):
        SolverOptions(cap=0)
    with pytest.raises(ValueError):
        SolverOptions(workers=0)


def test_timing_stages_recorded(golden):
    report = solve(golden)
    assert {"index_sets", "candidates", "prune", "select", "total"} <= set(report.timing)
    assert all(v >= 0 for v in report.timing.values())
