"""Exact piecewise power-log calculus: construction, algebra, integration."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings

from cesarospaces import piecewise as pw
from cesarospaces.errors import (DomainMismatchError, EvaluationDomainError,
                                 RepresentationError, UndefinedIntegralError,
                                 ValidationError)
from cesarospaces.piecewise import INF
from support import HALFLINE as H, UNIT as U, step_functions


# ---------------------------------------------------------------------------
# construction and canonical form


def test_make_ppl_sorts_and_merges_equal_neighbours():
    f = pw.make_ppl(H, [(2.0, 3.0, {(0.0, 0): 1.0}),
                        (0.0, 1.0, {(0.0, 0): 1.0}),
                        (1.0, 2.0, {(0.0, 0): 1.0})])
    assert len(f.pieces) == 1
    assert (f.pieces[0].lo, f.pieces[0].hi) == (0.0, 3.0)


def test_make_ppl_drops_zero_terms_and_empty_pieces():
    f = pw.make_ppl(H, [(0.0, 1.0, {(0.0, 0): 0.0}),
                        (3.0, 3.0, {(0.0, 0): 5.0})])
    assert f.is_zero


def test_make_ppl_rejects_overlap():
    with pytest.raises(ValidationError):
        pw.make_ppl(H, [(0.0, 2.0, {(0.0, 0): 1.0}),
                        (1.0, 3.0, {(0.0, 0): 2.0})])


def test_make_ppl_rejects_pieces_outside_domain():
    with pytest.raises(ValidationError):
        pw.make_ppl(U, [(0.5, 2.0, {(0.0, 0): 1.0})])
    with pytest.raises(ValidationError):
        pw.make_ppl(H, [(-1.0, 1.0, {(0.0, 0): 1.0})])


def test_make_ppl_enforces_term_budget():
    fat = {(float(i), 0): 1.0 for i in range(pw.MAX_TERMS_PER_PIECE + 1)}
    with pytest.raises(RepresentationError):
        pw.make_ppl(H, [(0.0, 1.0, fat)])


def test_structural_equality_is_symbolic():
    a = pw.indicator(H, 0.0, 1.0)
    b = pw.step_function(H, [(0.0, 1.0, 1.0)])
    assert a == b
    assert a != pw.indicator(H, 0.0, 2.0)


# ---------------------------------------------------------------------------
# evaluation


def test_evaluate_step_and_gaps():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (2.0, 3.0, -1.0)])
    assert f(0.5) == 2.0
    assert f(1.5) == 0.0
    assert f(2.5) == -1.0
    assert f(1.0) == 0.0  # pieces are half-open on the right


def test_evaluate_unit_right_endpoint_closes():
    f = pw.indicator(U, 0.0, 1.0)
    assert f(1.0) == 1.0


def test_evaluate_at_zero_uses_piece_limit():
    f = pw.make_ppl(H, [(0.0, 1.0, {(1.0, 0): 3.0})])
    assert f(0.0) == 0.0
    g = pw.power_piece(H, 0.0, 1.0, 1.0, -0.5)
    with pytest.raises(EvaluationDomainError):
        g(0.0)


def test_evaluate_outside_domain_raises():
    f = pw.indicator(U, 0.0, 1.0)
    with pytest.raises(EvaluationDomainError):
        f(1.5)


def test_power_log_evaluation():
    # t**(-1/2) * ln(t) at t = 4: 0.5 * ln 4
    f = pw.power_piece(H, 1.0, INF, 1.0, -0.5, 1)
    assert f(4.0) == pytest.approx(0.5 * math.log(4.0), rel=1e-15)


def test_limits_at_ends():
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -0.5)
    assert math.isinf(pw.limit_at_zero(f))
    g = pw.power_piece(H, 1.0, INF, 3.0, -1.0)
    assert pw.limit_at_infinity(g) == 0.0
    c = pw.step_function(H, [(0.0, INF, 2.0)])
    assert pw.limit_at_infinity(c) == 2.0
    with pytest.raises(EvaluationDomainError):
        pw.limit_at_infinity(pw.indicator(U, 0.0, 1.0))


def test_limit_term_map_log_dominance():
    # ln t beats any constant at both ends
    tm = {(0.0, 1): 1.0, (0.0, 0): 5.0}
    assert pw.limit_term_map(tm, "inf") == INF
    assert pw.limit_term_map(tm, "zero") == -INF


# ---------------------------------------------------------------------------
# integration


def test_integrate_step_exact():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (2.0, 4.0, -0.5)])
    assert pw.integrate(f) == pytest.approx(1.0, abs=1e-15)
    assert pw.integrate(f, 0.0, 1.0) == 2.0
    assert pw.integrate(f, 3.0, 10.0) == -0.5


def test_integrate_power_with_log():
    # int_0^1 ln(1/t) dt = 1, exactly resolved by the antiderivative limit
    f = pw.power_piece(U, 0.0, 1.0, -1.0, 0.0, 1)
    assert pw.integrate(f) == pytest.approx(1.0, abs=1e-15)


def test_integrate_divergence_is_signed():
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -1.0)
    assert pw.integrate(f) == INF
    assert pw.integrate(pw.scale(f, -2.0)) == -INF


def test_integrate_tail_divergence():
    f = pw.power_piece(H, 1.0, INF, 1.0, -0.5)
    assert pw.integrate(f) == INF


def test_integrate_opposite_divergences_raise():
    f = pw.make_ppl(H, [(0.0, 1.0, {(-2.0, 0): -1.0}),
                        (1.0, INF, {(1.0, 0): 1.0})])
    with pytest.raises(UndefinedIntegralError):
        pw.integrate(f)


def test_integrate_opposite_divergence_single_piece():
    f = pw.make_ppl(H, [(0.0, INF, {(-2.0, 0): -1.0, (1.0, 0): 1.0})])
    with pytest.raises(UndefinedIntegralError):
        pw.integrate(f)


def test_mixed_sign_composite_map_integrates_by_dominant_term():
    # -t**-1 + 4 t**-0.5 near zero: the t**-1 part wins, integral diverges
    f = pw.make_ppl(H, [(0.0, 1.0, {(-1.0, 0): -1.0, (-0.5, 0): 4.0})])
    assert pw.integrate(f) == -INF


# ---------------------------------------------------------------------------
# algebra


def test_combine_add_sub():
    f = pw.indicator(H, 0.0, 2.0)
    g = pw.indicator(H, 1.0, 3.0)
    s = pw.combine(f, g, "add")
    assert s(0.5) == 1.0 and s(1.5) == 2.0 and s(2.5) == 1.0
    d = pw.combine(f, g, "sub")
    assert d(0.5) == 1.0 and d(1.5) == 0.0 and d(2.5) == -1.0


def test_combine_rejects_domain_mismatch():
    with pytest.raises(DomainMismatchError):
        pw.combine(pw.indicator(H, 0.0, 1.0), pw.indicator(U, 0.0, 1.0), "add")


def test_max_splits_at_crossing():
    ramp = pw.power_piece(H, 0.0, 2.0, 1.0, 1.0)
    one = pw.step_function(H, [(0.0, 2.0, 1.0)])
    m = pw.combine(ramp, one, "max-abs-split")
    assert m(0.5) == pytest.approx(1.0, abs=1e-12)
    assert m(1.5) == pytest.approx(1.5, abs=1e-12)


def test_product_adds_exponents():
    f = pw.power_piece(H, 1.0, 4.0, 2.0, 0.5)
    g = pw.power_piece(H, 1.0, 4.0, 3.0, 0.5, 1)
    p = pw.product(f, g)
    t = 2.7
    assert p(t) == pytest.approx(6.0 * t * math.log(t), rel=1e-14)


def test_scale_and_derivative():
    f = pw.power_piece(H, 0.0, 2.0, 1.0, 2.0)
    assert pw.scale(f, 3.0)(1.5) == pytest.approx(3.0 * 1.5 ** 2, rel=1e-15)
    assert pw.derivative(f)(1.5) == pytest.approx(3.0, rel=1e-15)


def test_derivative_of_power_log():
    # d/dt (t ln t) = ln t + 1
    f = pw.make_ppl(H, [(1.0, 4.0, {(1.0, 1): 1.0})])
    d = pw.derivative(f)
    assert d(2.0) == pytest.approx(math.log(2.0) + 1.0, rel=1e-14)


def test_absolute_splits_at_interior_root():
    f = pw.make_ppl(H, [(0.0, 2.0, {(1.0, 0): 1.0, (0.0, 0): -1.0})])
    a = pw.absolute(f)
    assert a(0.5) == pytest.approx(0.5, abs=1e-12)
    assert a(1.5) == pytest.approx(0.5, abs=1e-12)
    assert pw.is_nonnegative(a)


def test_positive_part():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 2.0, -3.0)])
    p = pw.positive_part(f)
    assert p(0.5) == 2.0 and p(1.5) == 0.0


# ---------------------------------------------------------------------------
# measurable sets and restriction


def test_measurable_set_clips_and_merges():
    A = pw.MeasurableSet.from_intervals(U, [(0.8, 2.0), (-1.0, 0.2), (0.1, 0.15)])
    assert A.intervals == ((0.0, 0.2), (0.8, 1.0))
    assert A.measure() == pytest.approx(0.4, abs=1e-15)


def test_measurable_set_operations():
    A = pw.MeasurableSet.from_intervals(H, [(0.0, 2.0), (4.0, 6.0)])
    B = pw.MeasurableSet.from_intervals(H, [(1.0, 5.0)])
    assert A.intersect(B).intervals == ((1.0, 2.0), (4.0, 5.0))
    assert A.union(B).intervals == ((0.0, 6.0),)
    assert A.contains(pw.MeasurableSet.from_intervals(H, [(0.5, 1.5)]))
    assert not A.contains(B)


def test_measurable_set_infinite_measure():
    A = pw.MeasurableSet.from_intervals(H, [(1.0, INF)])
    assert A.measure() == INF


def test_restrict_matches_integral_over_set():
    f = pw.step_function(H, [(0.0, 4.0, 2.0)])
    A = pw.MeasurableSet.from_intervals(H, [(1.0, 2.0), (3.0, 5.0)])
    g = pw.restrict(f, A)
    assert pw.integrate(g) == pytest.approx(2.0 * (1.0 + 1.0), abs=1e-15)
    assert g(2.5) == 0.0 and g(1.5) == 2.0


def test_essinf_of_set():
    A = pw.MeasurableSet.from_intervals(H, [(0.5, 1.0)])
    assert pw.essinf(A) == 0.5
    assert pw.essinf(pw.MeasurableSet.from_intervals(H, [])) == 0.0


# ---------------------------------------------------------------------------
# shape predicates and grids


def test_essential_sup_abs():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 2.0, -3.0)])
    assert pw.essential_sup_abs(f) == 3.0
    assert pw.essential_sup_abs(pw.power_piece(H, 0.0, 1.0, 1.0, -0.5)) == INF


def test_is_nonincreasing():
    assert pw.is_nonincreasing(pw.power_piece(H, 0.0, INF, 1.0, -1.0))
    assert not pw.is_nonincreasing(pw.power_piece(H, 0.0, 1.0, 1.0, 1.0))
    assert pw.is_nonincreasing(pw.step_function(H, [(0.0, 1.0, 3.0),
                                                    (1.0, 2.0, 1.0)]))


def test_monotone_segments_split_at_extrema():
    # t(2 - t) rises then falls on (0, 2)
    f = pw.make_ppl(H, [(0.0, 2.0, {(1.0, 0): 2.0, (2.0, 0): -1.0})])
    segs = pw.monotone_segments(f)
    assert len(segs) == 2
    assert segs[0][1] == pytest.approx(1.0, abs=1e-9)


def test_sample_grid_properties():
    f = pw.step_function(H, [(0.5, 2.0, 1.0)])
    grid = pw.sample_grid(f, 64)
    assert len(grid) == 64
    assert all(t > 0.0 for t in grid)
    assert grid == sorted(grid)


def test_domain_from_name():
    assert pw.domain_from_name("unit").is_unit
    assert not pw.domain_from_name("halfline").is_unit
    with pytest.raises(ValidationError):
        pw.domain_from_name("circle")


# ---------------------------------------------------------------------------
# property-based checks


@given(f=step_functions(), g=step_functions())
@settings(max_examples=60, deadline=None)
def test_integrate_is_additive(f, g):
    s = pw.combine(f, g, "add")
    assert pw.integrate(s) == pytest.approx(
        pw.integrate(f) + pw.integrate(g), abs=1e-10)


@given(f=step_functions())
@settings(max_examples=60, deadline=None)
def test_integral_dominated_by_absolute(f):
    assert abs(pw.integrate(f)) <= pw.integrate(pw.absolute(f)) + 1e-12


@given(f=step_functions(), g=step_functions())
@settings(max_examples=40, deadline=None)
def test_max_dominates_both(f, g):
    m = pw.combine(f, g, "max-abs-split")
    for t in pw.sample_grid(m, 16):
        v = m(t)
        assert v >= f(t) - 1e-10
        assert v >= g(t) - 1e-10


@given(f=step_functions(), g=step_functions())
@settings(max_examples=40, deadline=None)
def test_product_evaluates_pointwise(f, g):
    p = pw.product(f, g)
    for t in pw.sample_grid(p, 16):
        assert p(t) == pytest.approx(f(t) * g(t), abs=1e-12)
