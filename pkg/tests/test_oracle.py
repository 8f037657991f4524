"""Independent numeric recomputation: quadrature engines and comparisons."""

from __future__ import annotations

import math

import pytest

from cesarospaces import catalog as cat
from cesarospaces import oracle as orc
from cesarospaces import piecewise as pw
from cesarospaces import spaces as sp
from cesarospaces.piecewise import INF
from support import HALFLINE as H, UNIT as U, chi


# ---------------------------------------------------------------------------
# quadrature engines


def test_simpson_on_polynomial():
    assert orc.simpson(lambda t: t * t, 0.0, 1.0) == pytest.approx(
        1.0 / 3.0, abs=1e-12)


def test_improper_integral_exponential():
    assert orc.improper_integral(lambda t: math.exp(-t), INF) == \
        pytest.approx(1.0, rel=1e-6)


def test_improper_integral_with_endpoint_singularity():
    # integrable singularity at zero: int_0^1 t**-1/2 = 2
    assert orc.improper_integral(lambda t: t ** -0.5, 1.0) == pytest.approx(
        2.0, rel=1e-6)


def test_improper_integral_detects_divergence():
    assert orc.improper_integral(lambda t: 1.0 / t, 1.0) == INF
    assert orc.improper_integral(lambda t: 1.0 / (1.0 + t), INF) == INF


def test_improper_integral_respects_cuts():
    fn = lambda t: 1.0 if t < 1.0 else 0.25
    v = orc.improper_integral(fn, 2.0, cuts=(1.0,))
    assert v == pytest.approx(1.25, rel=1e-7)


# ---------------------------------------------------------------------------
# report mechanics


def test_report_pass_and_fail_margins():
    ok = orc.OracleReport("n", 1.0, 1.0 + 5e-4, 1e-3)
    assert ok.passed
    bad = orc.OracleReport("n", 1.0, 1.0 + 5e-3, 1e-3)
    assert not bad.passed


def test_report_infinite_agreement():
    assert orc.OracleReport("n", INF, INF, 1e-7).passed
    assert not orc.OracleReport("n", INF, 3.0, 1e-7).passed


def test_report_row_is_csv():
    row = orc.OracleReport("norm", 1.5, 1.5, 1e-7).row()
    parts = row.split(",")
    assert parts[0] == "norm"
    assert parts[-1] == "ok"
    assert len(parts) == 5


# ---------------------------------------------------------------------------
# rearrangement bracketing


def test_rearrangement_oracle_on_step():
    f = pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 3.0, -1.0)])
    assert orc.rearrangement_oracle(f).passed


def test_rearrangement_oracle_on_power():
    f = pw.power_piece(U, 0.0, 1.0, 1.0, -0.25)
    assert orc.rearrangement_oracle(f).passed


# ---------------------------------------------------------------------------
# norm recomputation across the families


ORACLE_CASES = [
    (pw.step_function(H, [(0.0, 1.0, 2.0), (2.0, 4.0, 1.0)]),
     sp.lebesgue(2.0, H)),
    (pw.power_piece(H, 0.0, 1.0, 1.0, -0.25), sp.lebesgue(1.5, H)),
    (chi(H, 0.0, 3.0), sp.l1_cap_linf(H)),
    (pw.step_function(H, [(0.0, 2.0, 1.5)]), sp.l1_plus_linf(H)),
    (chi(H, 0.0, 4.0), sp.orlicz_space(cat.orlicz_square(H), H)),
    (pw.scale(chi(H, 0.0, 1.0), 3.0),
     sp.orlicz_space(cat.orlicz_square_capped(H), H)),
    (pw.step_function(H, [(0.0, 1.0, 2.0), (1.0, 4.0, 1.0)]),
     sp.lorentz_space(cat.sqrt_phi(H))),
    (chi(H, 0.0, 1.0), sp.marcinkiewicz_space(cat.sqrt_phi(H))),
    (chi(H, 0.0, 1.0), sp.cesaro_space(sp.lebesgue(2.0, H))),
    (chi(U, 0.25, 0.75), sp.cesaro_space(sp.lebesgue(1.0, U))),
]


@pytest.mark.parametrize("f,X", ORACLE_CASES,
                         ids=[X.describe() for _, X in ORACLE_CASES])
def test_norm_oracle_agrees(f, X):
    report = orc.quadrature_norm_oracle(f, X)
    assert report.passed, report.row()


def test_norm_oracle_agrees_on_divergence():
    f = pw.step_function(H, [(0.0, INF, 1.0)])
    report = orc.quadrature_norm_oracle(f, sp.lebesgue(2.0, H))
    assert math.isinf(report.exact)
    assert report.passed


def test_tolerance_table_covers_all_tags():
    for key in ("Lp", "Lp-sup", "L1capLinf", "L1plusLinf", "orlicz",
                "lorentz", "marcinkiewicz"):
        assert key in orc.ORACLE_TOL
