"""Norm computations across the space catalog, plus operator diagnostics."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings

from cesarospaces import catalog as cat
from cesarospaces import cesaro as cz
from cesarospaces import norms as nm
from cesarospaces import piecewise as pw
from cesarospaces import rearrange as rr
from cesarospaces import spaces as sp
from cesarospaces.errors import MethodInapplicableError
from cesarospaces.piecewise import INF
from support import HALFLINE as H, UNIT as U, chi, step_functions

L1 = sp.lebesgue(1.0, H)
L2 = sp.lebesgue(2.0, H)
LINF = sp.lebesgue_inf(H)


# ---------------------------------------------------------------------------
# power norms


def test_lp_norm_of_indicator():
    f = chi(H, 0.0, 2.0)
    assert nm.norm(f, L1).value == pytest.approx(2.0, abs=1e-15)
    assert nm.norm(f, L2).value == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert nm.norm(f, L2).method == "exact"


def test_lp_norm_of_power_function():
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -0.25)
    # integral of t**(-p/4) over (0,1) is 4/(4-p) for p < 4
    assert nm.norm(f, L2).value == pytest.approx(math.sqrt(2.0), rel=1e-12)
    assert math.isinf(nm.norm(f, sp.lebesgue(4.0, H)).value)


def test_linf_norm_is_essential_sup():
    f = pw.step_function(H, [(0.0, 1.0, -3.0), (1.0, 2.0, 1.0)])
    assert nm.norm(f, LINF).value == 3.0


def test_zero_function_has_zero_norm_everywhere():
    z = pw.zero(H)
    for X in cat.default_catalog(H):
        assert nm.norm(z, X).value == 0.0


# ---------------------------------------------------------------------------
# intersection and sum


def test_intersection_norm_is_max():
    f = chi(H, 0.0, 3.0)
    assert nm.norm(f, sp.l1_cap_linf(H)).value == 3.0
    g = pw.scale(chi(H, 0.0, 0.25), 2.0)
    assert nm.norm(g, sp.l1_cap_linf(H)).value == 2.0


def test_sum_norm_integrates_rearrangement_head():
    # the sum-space norm is the integral of f* over (0, 1)
    f = pw.scale(chi(H, 0.0, 0.5), 4.0)
    assert nm.norm(f, sp.l1_plus_linf(H)).value == pytest.approx(2.0, abs=1e-12)
    c = pw.step_function(H, [(0.0, INF, 1.0)])
    assert nm.norm(c, sp.l1_plus_linf(H)).value == pytest.approx(1.0, abs=1e-12)


def test_sum_norm_on_spread_out_mass():
    # f* = chi_(0,2): head integral picks up only the first unit
    f = chi(H, 5.0, 7.0)
    assert nm.norm(f, sp.l1_plus_linf(H)).value == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------------------
# Orlicz


def test_orlicz_square_matches_l2():
    X = sp.orlicz_space(cat.orlicz_square(H), H)
    for f in (chi(H, 0.0, 4.0),
              pw.step_function(H, [(0.0, 1.0, 2.0), (3.0, 5.0, 0.5)]),
              pw.power_piece(H, 0.0, 1.0, 1.0, -0.25)):
        lux = nm.norm(f, X)
        assert lux.value == pytest.approx(nm.norm(f, L2).value, rel=1e-9)


def test_orlicz_capped_norm_tracks_sup_for_small_support():
    X = sp.orlicz_space(cat.orlicz_square_capped(H), H)
    f = pw.scale(chi(H, 0.0, 1.0), 3.0)
    # modular jumps to +inf as soon as |f|/lam exceeds the cap at 1
    assert nm.norm(f, X).value == pytest.approx(3.0, rel=1e-9)


def test_orlicz_capped_norm_keeps_integral_term_for_large_support():
    X = sp.orlicz_space(cat.orlicz_square_capped(H), H)
    f = chi(H, 0.0, 9.0)
    # lam must satisfy 9 / lam**2 <= 1 once the cap is respected
    assert nm.norm(f, X).value == pytest.approx(3.0, rel=1e-9)


def test_orlicz_degenerate_generator_ignores_low_values():
    X = sp.orlicz_space(cat.orlicz_flat_capped(H), H)
    f = pw.scale(chi(H, 0.0, 2.0), 0.25)
    # modular(lam) = 2 * (0.5/lam - 1) once 0.25/lam passes 1/2, so the
    # smallest admissible lam solves 2 * (0.5/lam - 1) = 1
    assert nm.norm(f, X).value == pytest.approx(1.0 / 3.0, rel=1e-9)
    # far below the dead zone the modular is identically zero
    tiny = pw.scale(chi(H, 0.0, 2.0), 1e-6)
    assert nm.norm(tiny, X).value < 1e-5


def test_orlicz_exact_path_used_for_power_functions():
    X = sp.orlicz_space(cat.orlicz_square(H), H)
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -0.25)
    res = nm.norm(f, X)
    assert res.method == "exact"


# ---------------------------------------------------------------------------
# Lorentz and Marcinkiewicz


def test_lorentz_norm_of_indicator_is_weight_value():
    X = sp.lorentz_space(cat.sqrt_phi(H))
    assert nm.norm(chi(H, 0.0, 4.0), X).value == pytest.approx(2.0, rel=1e-12)
    assert nm.norm(chi(H, 2.0, 6.0), X).value == pytest.approx(2.0, rel=1e-12)


def test_lorentz_norm_of_two_level_step():
    X = sp.lorentz_space(cat.sqrt_phi(H))
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 4.0, 1.0)])
    # int f* dphi = 2 phi(1) + (phi(4) - phi(1)) = 2 + 1 = 3
    assert nm.norm(f, X).value == pytest.approx(3.0, rel=1e-12)


def test_lorentz_atom_charges_the_sup():
    X = sp.lorentz_space(cat.sqrt_plus_atom_phi(U))
    f = pw.scale(chi(U, 0.0, 0.25), 2.0)
    # atom of height 1 at zero adds 2, the sqrt part adds 2 * 0.5
    assert nm.norm(f, X).value == pytest.approx(3.0, rel=1e-9)


def test_marcinkiewicz_norm_of_indicator():
    X = sp.marcinkiewicz_space(cat.sqrt_phi(H))
    assert nm.norm(chi(H, 0.0, 1.0), X).value == pytest.approx(1.0, rel=1e-9)


def test_marcinkiewicz_norm_of_matched_singularity():
    X = sp.marcinkiewicz_space(cat.sqrt_phi(H))
    # f* = t**-1/2 gives f**(t) = 2 t**-1/2 and sup phi f** = 2
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -0.5)
    assert nm.norm(f, X).value == pytest.approx(2.0, rel=1e-9)


# ---------------------------------------------------------------------------
# averaged spaces


def test_averaged_l2_norm_of_indicator():
    X = sp.cesaro_space(L2)
    assert nm.norm(chi(H, 0.0, 1.0), X).value == pytest.approx(
        math.sqrt(2.0), abs=1e-9)


def test_averaged_norm_uses_absolute_value():
    X = sp.cesaro_space(L2)
    f = pw.step_function(H, [(0.0, 1.0, 1.0), (1.0, 2.0, -1.0)])
    g = pw.absolute(f)
    assert nm.norm(f, X).value == pytest.approx(nm.norm(g, X).value, rel=1e-12)


def test_averaged_l1_unit_matches_log_weight():
    X = sp.cesaro_space(sp.lebesgue(1.0, U))
    f = pw.step_function(U, [(0.0, 0.5, 1.0), (0.5, 1.0, 3.0)])
    w = pw.make_ppl(U, [(0.0, 1.0, {(0.0, 1): -1.0})])  # ln(1/t)
    expected = pw.integrate(pw.product(pw.absolute(f), w))
    assert nm.norm(f, X).value == pytest.approx(expected, abs=1e-10)


def test_averaged_l1_halfline_is_trivial():
    X = sp.cesaro_space(L1)
    assert math.isinf(nm.norm(chi(H, 0.0, 1.0), X).value)


def test_undefined_transform_reads_as_nonmembership():
    X = sp.cesaro_space(L2)
    f = pw.power_piece(H, 0.0, 1.0, 1.0, -1.0)
    assert math.isinf(nm.norm(f, X).value)


# ---------------------------------------------------------------------------
# shared norm axioms


SPACES_H = [
    L1, L2, LINF,
    sp.l1_cap_linf(H), sp.l1_plus_linf(H),
    sp.orlicz_space(cat.orlicz_square(H), H),
    sp.lorentz_space(cat.sqrt_phi(H)),
    sp.marcinkiewicz_space(cat.sqrt_phi(H)),
    sp.cesaro_space(L2),
]


@given(f=step_functions())
@settings(max_examples=25, deadline=None)
def test_homogeneity(f):
    for X in SPACES_H:
        base = nm.norm(f, X).value
        scaled = nm.norm(pw.scale(f, -2.5), X).value
        assert scaled == pytest.approx(2.5 * base, rel=1e-7, abs=1e-9)


@given(f=step_functions(), g=step_functions())
@settings(max_examples=25, deadline=None)
def test_triangle_inequality(f, g):
    s = pw.combine(f, g, "add")
    for X in SPACES_H:
        lhs = nm.norm(s, X).value
        rhs = nm.norm(f, X).value + nm.norm(g, X).value
        assert lhs <= rhs * (1.0 + 1e-7) + 1e-9


@given(f=step_functions())
@settings(max_examples=25, deadline=None)
def test_ideal_property_on_truncation(f):
    # dropping pieces can only shrink the norm
    A = pw.MeasurableSet.from_intervals(H, [(0.0, 2.0), (5.0, 9.0)])
    g = pw.restrict(f, A)
    for X in SPACES_H:
        assert nm.norm(g, X).value <= nm.norm(f, X).value * (1.0 + 1e-7) + 1e-9


@given(f=step_functions())
@settings(max_examples=20, deadline=None)
def test_rearrangement_invariance_on_steps(f):
    r = rr.decreasing_rearrangement(f).exact
    for X in SPACES_H:
        if not X.is_symmetric:
            continue
        a = nm.norm(f, X)
        b = nm.norm(r, X)
        tol = 1e-12 if (a.method == "exact" and b.method == "exact") else 1e-8
        if math.isinf(a.value) or math.isinf(b.value):
            assert a.value == b.value
        else:
            assert abs(a.value - b.value) <= tol * (1.0 + abs(a.value))


def test_hardy_inequality_single_case():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 3.0, 1.0)])
    cf = cz.cesaro_transform(f)
    assert nm.norm(cf, L2).value <= 2.0 * nm.norm(f, L2).value + 1e-12


# ---------------------------------------------------------------------------
# fundamental function


def test_fundamental_function_known_shapes():
    assert nm.fundamental_function(L2, 4.0) == pytest.approx(2.0, rel=1e-12)
    assert nm.fundamental_function(LINF, 0.01) == 1.0
    assert nm.fundamental_function(sp.l1_plus_linf(H), 0.5) == pytest.approx(
        0.5, abs=1e-10)
    assert nm.fundamental_function(sp.l1_plus_linf(H), 3.0) == pytest.approx(
        1.0, abs=1e-10)


def test_fundamental_function_agrees_with_indicator_norm():
    for X in (L1, L2, sp.l1_cap_linf(H),
              sp.lorentz_space(cat.sqrt_phi(H)),
              sp.marcinkiewicz_space(cat.sqrt_phi(H))):
        for t in (0.25, 1.0, 5.0):
            direct = nm.norm(chi(H, 0.0, t), X).value
            assert nm.fundamental_function(X, t) == pytest.approx(
                direct, rel=1e-9)


# ---------------------------------------------------------------------------
# dilation diagnostics


def test_boyd_indices_closed_form_and_declared():
    b = nm.boyd_indices(L2)
    assert (b.lower, b.upper) == (2.0, 2.0)
    assert b.method == "closed-form"
    b = nm.boyd_indices(sp.l1_cap_linf(H))
    assert b.lower == 1.0 and math.isinf(b.upper)
    b = nm.boyd_indices(sp.orlicz_space(cat.orlicz_square(H), H))
    assert (b.lower, b.upper) == (2.0, 2.0)
    assert b.method == "declared"
    b = nm.boyd_indices(sp.lorentz_space(cat.sqrt_phi(H)))
    assert (b.lower, b.upper) == (2.0, 2.0)


def test_boyd_indices_estimate_path():
    X = sp.orlicz_space(cat.orlicz_square_capped(H), H)
    b = nm.boyd_indices(X)
    assert b.method == "estimate"
    assert 1.0 <= b.lower <= b.upper + 1e-9


def test_boyd_indices_reject_averaged_spaces():
    with pytest.raises(MethodInapplicableError):
        nm.boyd_indices(sp.cesaro_space(L2))


def test_cesaro_bounded_catalog_row():
    assert nm.cesaro_bounded(L1).bounded is False
    assert nm.cesaro_bounded(L2).bounded is True
    assert nm.cesaro_bounded(LINF).bounded is True
    assert nm.cesaro_bounded(sp.lorentz_space(cat.sqrt_phi(H))).bounded is True


def test_dilation_norm_estimate_for_l2():
    # the dilation operator on L2 scales like sqrt(s)
    for s in (0.25, 4.0):
        assert nm.dilation_norm_estimate(L2, s) == pytest.approx(
            math.sqrt(s), rel=1e-6)


def test_cx_nontrivial_catalog():
    assert nm.cx_nontrivial(L2) is True
    assert nm.cx_nontrivial(L1) is False
    assert nm.cx_nontrivial(sp.lebesgue(1.0, U)) is True
    assert nm.cx_nontrivial(LINF) is True
    assert nm.cx_nontrivial(sp.l1_cap_linf(H)) is False
