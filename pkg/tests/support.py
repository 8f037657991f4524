"""Hypothesis strategies and small helpers shared across test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from cesarospaces import piecewise as pw

HALFLINE = pw.DomainSpec("halfline")
UNIT = pw.DomainSpec("unit")


def chi(domain: pw.DomainSpec, lo: float, hi: float) -> pw.PPL:
    return pw.indicator(domain, lo, hi)


@st.composite
def step_functions(draw, domain=HALFLINE, signed: bool = True,
                   max_pieces: int = 5):
    """Random finite step functions with well-separated breakpoints.

    Values stay in [0.1, 4] in magnitude so norms are neither tiny nor
    huge; gaps between pieces are allowed.
    """
    end = 1.0 if domain.is_unit else 16.0
    cuts = draw(st.lists(
        st.floats(min_value=end / 64.0, max_value=end,
                  allow_nan=False, allow_infinity=False),
        min_size=2, max_size=max_pieces + 1, unique=True))
    cuts = sorted(cuts)
    steps = []
    for lo, hi in zip(cuts, cuts[1:]):
        if hi - lo < end * 1e-6:
            continue
        if draw(st.booleans()):
            continue  # leave a gap
        v = draw(st.floats(min_value=0.1, max_value=4.0,
                           allow_nan=False, allow_infinity=False))
        if signed and draw(st.booleans()):
            v = -v
        steps.append((lo, hi, v))
    return pw.step_function(domain, steps)


@st.composite
def nonzero_step_functions(draw, domain=HALFLINE, signed: bool = True):
    f = draw(step_functions(domain=domain, signed=signed))
    if f.is_zero:
        lo = 0.25 if domain.is_unit else 1.0
        f = pw.step_function(domain, [(lo, 2.0 * lo, 1.0)])
    return f
