"""Averaging transform: exact closure, numeric probes, comparison chain."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings

from cesarospaces import cesaro as cz
from cesarospaces import piecewise as pw
from cesarospaces.errors import TransformUndefinedError
from cesarospaces.piecewise import INF
from support import HALFLINE as H, UNIT as U, step_functions


# ---------------------------------------------------------------------------
# exact transform


def test_transform_of_indicator_has_hyperbolic_tail():
    f = pw.indicator(H, 0.0, 1.0)
    expected = pw.make_ppl(H, [(0.0, 1.0, {(0.0, 0): 1.0}),
                               (1.0, INF, {(-1.0, 0): 1.0})])
    assert cz.cesaro_transform(f) == expected


def test_transform_of_shifted_indicator():
    # mass only starts accumulating at the left edge of the support
    f = pw.indicator(H, 1.0, 2.0)
    cf = cz.cesaro_transform(f)
    assert cf(0.5) == 0.0
    assert cf(1.5) == pytest.approx(0.5 / 1.5, rel=1e-15)
    assert cf(4.0) == pytest.approx(0.25, rel=1e-15)


def test_transform_of_ramp():
    f = pw.make_ppl(H, [(0.0, 1.0, {(1.0, 0): 1.0})])
    expected = pw.make_ppl(H, [(0.0, 1.0, {(1.0, 0): 0.5}),
                               (1.0, INF, {(-1.0, 0): 0.5})])
    assert cz.cesaro_transform(f) == expected


def test_transform_of_integrable_singularity():
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -0.5)
    expected = pw.make_ppl(H, [(0.0, 1.0, {(-0.5, 0): 2.0}),
                               (1.0, INF, {(-1.0, 0): 2.0})])
    assert cz.cesaro_transform(f) == expected


def test_transform_produces_log_terms():
    # averaging 1/t over [1, x] gives ln(x)/x
    f = pw.power_piece(H, 1.0, INF, 1.0, -1.0)
    cf = cz.cesaro_transform(f)
    assert cf(math.e) == pytest.approx(1.0 / math.e, rel=1e-14)
    assert cf(10.0) == pytest.approx(math.log(10.0) / 10.0, rel=1e-14)


def test_transform_on_unit_domain():
    f = pw.indicator(U, 0.0, 0.5)
    cf = cz.cesaro_transform(f)
    assert cf(0.25) == 1.0
    assert cf(1.0) == pytest.approx(0.5, rel=1e-15)


def test_transform_undefined_for_nonintegrable_head():
    with pytest.raises(TransformUndefinedError):
        cz.cesaro_transform(pw.power_piece(H, 0.0, 1.0, 1.0, -1.0))
    with pytest.raises(TransformUndefinedError):
        cz.cesaro_transform(pw.power_piece(U, 0.0, 1.0, 1.0, -1.5))


def test_transform_of_zero():
    assert cz.cesaro_transform(pw.zero(H)).is_zero


def test_transform_is_linear():
    f = pw.indicator(H, 0.0, 1.0)
    g = pw.indicator(H, 0.5, 2.0)
    lhs = cz.cesaro_transform(pw.combine(f, pw.scale(g, 3.0), "add"))
    rhs = pw.combine(cz.cesaro_transform(f),
                     pw.scale(cz.cesaro_transform(g), 3.0), "add")
    assert lhs == rhs


def test_transform_of_signed_function_can_cancel():
    f = pw.step_function(H, [(0.0, 1.0, 1.0), (1.0, 2.0, -1.0)])
    cf = cz.cesaro_transform(f)
    assert cf(2.0) == pytest.approx(0.0, abs=1e-15)
    assert cf(4.0) == pytest.approx(0.0, abs=1e-15)


# ---------------------------------------------------------------------------
# numeric probe


def test_numeric_probe_on_callable():
    val, err = cz.cesaro_numeric(lambda s: 1.0 / (1.0 + s), 1.0)
    assert val == pytest.approx(math.log(2.0), abs=max(err, 1e-9))


def test_numeric_probe_matches_exact_transform():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.5, 3.0, -1.0)])
    cf = cz.cesaro_transform(f)
    for t in (0.5, 1.0, 2.0, 2.5, 6.0):
        val, err = cz.cesaro_numeric(f, t, breakpoints=f.breakpoints())
        assert val == pytest.approx(cf(t), abs=err + 1e-9)


# ---------------------------------------------------------------------------
# comparison chain


def test_chain_report_on_signed_step():
    f = pw.step_function(H, [(0.0, 1.0, 1.0), (1.0, 2.0, -2.0)])
    report = cz.fact1_check(f)
    assert report.passed
    for key in ("signed_vs_abs_value", "abs_value_vs_abs_arg",
                "abs_arg_vs_maximal", "rearranged_vs_maximal"):
        assert report.min_slack[key] >= -report.tolerance
    # cancellation makes the first comparison strictly slack somewhere
    assert report.min_slack["signed_vs_abs_value"] >= 0.0


def test_chain_report_custom_grid():
    f = pw.indicator(H, 0.0, 1.0)
    report = cz.fact1_check(f, grid=[0.5, 1.0, 2.0, 8.0])
    assert report.passed
    assert len(report.grid) == 4


@given(f=step_functions())
@settings(max_examples=40, deadline=None)
def test_chain_holds_on_random_steps(f):
    report = cz.fact1_check(f)
    assert report.passed
