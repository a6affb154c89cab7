import math

import pytest
from hypothesis import given, strategies as st

from wilson.bounds import (
    DEFAULT_TOL,
    ETA_HI,
    curve_rows,
    eval_growth_bound,
    g_eta,
    lambda_sequence,
    log_g_eta,
    solve_crossing,
)


def test_g_eta_values():
    assert g_eta(0.5) == pytest.approx(2.0 * math.sqrt(30.0), rel=1e-14)
    assert log_g_eta(0.5) == pytest.approx(math.log(2.0 * math.sqrt(30.0)), rel=1e-14)
    with pytest.raises(ValueError):
        g_eta(0.0)
    with pytest.raises(ValueError):
        g_eta(1.0)


def test_g_eta_monotone_below_cap():
    samples = [0.01 * k for k in range(1, 97)]
    vals = [g_eta(s) for s in samples if s < ETA_HI]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_solve_crossing_for_two():
    step = solve_crossing(2.0)
    assert 0.08 < step.eta_n < 0.10
    assert 1.85 < step.lambda_next < 1.90
    assert step.residual <= DEFAULT_TOL
    # the crossing equation holds at the root
    assert step.lambda_next == pytest.approx(g_eta(step.eta_n), abs=1e-10)


def test_solve_crossing_rejects_bad_lambda():
    with pytest.raises(ValueError):
        solve_crossing(1.0)
    with pytest.raises(ValueError):
        solve_crossing(40.0)


def test_lambda_sequence():
    steps = lambda_sequence(200)
    assert steps[0].lambda_n == 2.0
    lams = [s.lambda_n for s in steps] + [steps[-1].lambda_next]
    assert all(a > b for a, b in zip(lams, lams[1:]))
    assert all(1.0 < lam <= 2.0 for lam in lams)
    assert max(s.residual for s in steps) <= DEFAULT_TOL
    # the first step whose output drops below 1.05 is step 168
    first = next(s.n for s in steps if s.lambda_next < 1.05)
    assert first == 168


def test_eval_growth_bound():
    assert eval_growth_bound(1.0) == 1.0
    assert eval_growth_bound(1.0 + 1e-13) == 1.0
    assert eval_growth_bound(2.0) == pytest.approx(solve_crossing(2.0).lambda_next)


@given(st.floats(min_value=1.01, max_value=30.0))
def test_bound_is_strict_improvement(lam):
    val = eval_growth_bound(lam)
    assert 1.0 < val < lam


def test_curve_rows():
    rows = curve_rows(2.0, 0.01, 0.99, 0.01)
    assert len(rows) == 99
    assert rows[0][0] == 0.01
    eta, decay, growth = rows[49]
    assert eta == 0.5
    assert decay == pytest.approx(2.0**0.5)
    assert growth == pytest.approx(g_eta(0.5))
