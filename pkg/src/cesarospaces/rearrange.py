"""Distribution functions, decreasing rearrangements, maximal functions.

The distribution d_f(lam) = m({|f| > lam}) is computed exactly per monotone
segment: each segment contributes nothing, its full length, or a length cut
at the unique crossing |f| = lam.  Crossings have closed forms for constant,
pure-power and a + b/t segments; everything else falls back to bracketed
bisection at relative precision 1e-12.

The rearrangement f*(s) = inf{lam > 0 : d_f(lam) <= s} is returned as an
exact function whenever f is a step function or is already nonnegative and
nonincreasing; otherwise it is an evaluation procedure driven by bisection
over lam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq

from . import cesaro as _cesaro_mod
from . import piecewise as pw
from .errors import EvaluationDomainError, NotRearrangeableError
from .rootfind import eval_exp_poly
from .piecewise import INF, PPL, DomainSpec, TermMap

BISECT_TOL = 1e-12
BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class _Segment:
    lo: float
    hi: float
    terms: tuple  # canonical term tuple, hashable
    vlo: float
    vhi: float

    def term_map(self) -> TermMap:
        return {(t.alpha, t.logpow): t.coeff for t in self.terms}


@lru_cache(maxsize=512)
def _abs_segments(f: PPL) -> tuple[_Segment, ...]:
    g = pw.absolute(f)
    segs = []
    for lo, hi, tm in pw.monotone_segments(g):
        vlo, vhi = pw.segment_end_values(tm, lo, hi)
        segs.append(_Segment(lo, hi, pw._terms_from_map(tm), vlo, vhi))
    return tuple(segs)


def _crossing(tm: TermMap, lo: float, hi: float, lam: float) -> float:
    """Unique t in (lo, hi) with value lam on a monotone positive segment."""
    keys = sorted(tm)
    if len(keys) == 1:
        (alpha, k), = keys
        c = tm[(alpha, k)]
        if k == 0 and alpha != 0.0:
            return (lam / c) ** (1.0 / alpha)
    if len(keys) == 2 and keys[0] == (-1.0, 0) and keys[1] == (0.0, 0):
        b, a = tm[(-1.0, 0)], tm[(0.0, 0)]
        if lam != a:
            t = b / (lam - a)
            if lo < t < hi:
                return t
    ulo = math.log(lo) if lo > 0.0 else -700.0
    uhi = math.log(hi) if not math.isinf(hi) else 700.0
    shifted = dict(tm)
    shifted[(0.0, 0)] = shifted.get((0.0, 0), 0.0) - lam
    clipped = lambda x: min(max(eval_exp_poly(shifted, x), -1e300), 1e300)
    flo, fhi = clipped(ulo), clipped(uhi)
    if flo == 0.0:
        return math.exp(ulo)
    if fhi == 0.0:
        return math.exp(uhi)
    if (flo > 0.0) == (fhi > 0.0):
        # the level touches an endpoint value within rounding; snap to the
        # endpoint that sits closer to the level
        return math.exp(uhi if abs(fhi) < abs(flo) else ulo)
    u = brentq(clipped, ulo, uhi, xtol=BISECT_TOL, rtol=4 * math.ulp(1.0))
    return math.exp(u)


def distribution(f, lam: float) -> float:
    """m({|f| > lam}); accepts a piecewise function or a rearrangement."""
    if isinstance(f, RearrangedFunction):
        return distribution(f.source, lam)
    if lam < 0.0:
        raise ValueError("lam must be >= 0")
    total = 0.0
    for seg in _abs_segments(f):
        if lam == 0.0:
            total += seg.hi - seg.lo
            continue
        above_lo = seg.vlo > lam
        above_hi = seg.vhi > lam
        if above_lo and above_hi:
            total += seg.hi - seg.lo
        elif above_lo or above_hi:
            x = _crossing(seg.term_map(), seg.lo, seg.hi, lam)
            total += (x - seg.lo) if above_lo else (seg.hi - x)
        if math.isinf(total):
            return INF
    return total


def critical_values(f: PPL) -> list[float]:
    """Finite segment-endpoint values of |f|, sorted ascending."""
    vals = set()
    for seg in _abs_segments(f):
        for v in (seg.vlo, seg.vhi):
            if math.isfinite(v):
                vals.add(v)
    return sorted(vals)


def _tail_limit(f: PPL) -> float:
    """lim of |f| at the right end of an unbounded support (0 otherwise)."""
    segs = _abs_segments(f)
    if segs and math.isinf(segs[-1].hi):
        return segs[-1].vhi
    return 0.0


@dataclass(frozen=True)
class RearrangedFunction:
    """The decreasing rearrangement f* of a piecewise function.

    ``exact`` is populated when f* stays in the representation family
    (step functions; functions already nonincreasing).  ``evaluate`` always
    works, via exact evaluation or lam-bisection on the distribution.
    """

    source: PPL
    domain: DomainSpec
    exact: PPL | None
    sup_value: float
    value_at_infinity: float

    def evaluate(self, s: float) -> float:
        if s < 0.0:
            raise EvaluationDomainError("rearrangement argument must be >= 0")
        if self.domain.is_unit and s > 1.0:
            raise EvaluationDomainError("argument outside the unit interval")
        if s == 0.0:
            return self.sup_value
        if self.exact is not None:
            return pw.evaluate(self.exact, min(s, self.exact.domain.end))
        support = distribution(self.source, 0.0)
        if s >= support:
            return 0.0
        lo = self.value_at_infinity
        if lo > 0.0 and distribution(self.source, lo) <= s:
            return lo
        hi = self.sup_value if math.isfinite(self.sup_value) else 1.0
        while distribution(self.source, hi) > s:
            hi *= 2.0
        for _ in range(BISECT_MAX_ITER):
            if hi - lo <= BISECT_TOL * max(1.0, hi):
                break
            mid = 0.5 * (lo + hi)
            if distribution(self.source, mid) <= s:
                hi = mid
            else:
                lo = mid
        return hi

    __call__ = evaluate

    def support_measure(self) -> float:
        return distribution(self.source, 0.0)

    def breakpoints(self) -> list[float]:
        """s-points where f* can kink (images of critical values)."""
        if self.exact is not None:
            return self.exact.breakpoints()
        pts = {0.0}
        for v in critical_values(self.source):
            if v > 0.0:
                d = distribution(self.source, v)
                if math.isfinite(d):
                    pts.add(d)
        return sorted(pts)


def decreasing_rearrangement(f: PPL) -> RearrangedFunction:
    sup = pw.essential_sup_abs(f)
    tail = _tail_limit(f)
    if math.isinf(tail):
        raise NotRearrangeableError(
            "every super-level set has infinite measure")
    if f.is_zero:
        return RearrangedFunction(f, f.domain, f, 0.0, 0.0)
    if f.is_step:
        steps = sorted(
            ((abs(p.terms[0].coeff), p.hi - p.lo) for p in f.pieces
             if p.terms[0].coeff != 0.0),
            reverse=True)
        out = []
        pos = 0.0
        for value, length in steps:
            if math.isinf(pos):
                break
            out.append((pos, pos + length, {(0.0, 0): value}))
            pos += length
        return RearrangedFunction(
            f, f.domain, pw.make_ppl(f.domain, out), sup, tail)
    if pw.is_nonnegative(f) and pw.is_nonincreasing(f):
        return RearrangedFunction(f, f.domain, f, sup, tail)
    return RearrangedFunction(f, f.domain, None, sup, tail)


def distribution_of_decreasing(g, lam: float, probe_cap: float = 1e300) -> float:
    """m({g > lam}) for a nonincreasing evaluable g, by s-bisection.

    Used by the oracle side: it rebuilds the distribution from g's values
    without touching the exact machinery.
    """
    if lam < 0.0:
        raise ValueError("lam must be >= 0")
    g0 = g(0.0)
    if math.isfinite(g0) and g0 <= lam:
        return 0.0
    lo, hi = 0.0, 1.0
    while g(hi) > lam:
        hi *= 2.0
        if hi > probe_cap:
            return INF
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_TOL * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if g(mid) > lam:
            lo = mid
        else:
            hi = mid
    return hi


@dataclass(frozen=True)
class MaximalFunction:
    """f**(t) = (1/t) * integral of f* over [0, t]."""

    rearranged: RearrangedFunction
    exact: PPL | None

    def evaluate(self, t: float) -> float:
        if self.exact is not None:
            return pw.evaluate(self.exact, t)
        val, _ = _cesaro_mod.cesaro_numeric(
            self.rearranged.evaluate, t,
            breakpoints=self.rearranged.breakpoints())
        return val

    __call__ = evaluate


def maximal_function(f: PPL) -> MaximalFunction:
    r = decreasing_rearrangement(f)
    exact = _cesaro_mod.cesaro_transform(r.exact) if r.exact is not None else None
    return MaximalFunction(r, exact)


def dilation(f: PPL, s: float) -> PPL:
    """(D_s f)(t) = f(t/s), clipped to the domain."""
    if s <= 0.0:
        raise ValueError("dilation factor must be positive")
    log_s = math.log(s)
    pieces = []
    for p in f.pieces:
        lo, hi = p.lo * s, p.hi * s
        lo, hi = min(lo, f.domain.end), min(hi, f.domain.end)
        if lo >= hi:
            continue
        tm: TermMap = {}
        for (alpha, k), c in p.term_map().items():
            base = c * s ** (-alpha)
            for j in range(k + 1):
                coef = (base * math.comb(k, j) * (-log_s) ** (k - j))
                key = (alpha, j)
                tm[key] = tm.get(key, 0.0) + coef
        pieces.append((lo, hi, tm))
    return pw.make_ppl(f.domain, pieces)


def equimeasurable(f, g, tol: float = 1e-10) -> bool:
    """Same distribution function, probed at critical values, midpoints and
    a geometric refinement grid.  Exact for step functions."""
    vals = set()
    for h in (f, g):
        src = h.source if isinstance(h, RearrangedFunction) else h
        vals.update(critical_values(src))
    vals.discard(0.0)
    probes = {0.0}
    ordered = sorted(vals)
    probes.update(ordered)
    for a, b in zip(ordered, ordered[1:]):
        probes.add(0.5 * (a + b))
    if ordered:
        vmin, vmax = ordered[0], ordered[-1]
        lo = vmin / 4.0 if vmin > 0 else 1e-6
        hi = vmax * 2.0 if vmax > 0 else 1.0
        if lo > 0 and hi > lo:
            ratio = (hi / lo) ** (1.0 / 63)
            probes.update(lo * ratio ** i for i in range(64))
    for lam in sorted(probes):
        d1, d2 = distribution(f, lam), distribution(g, lam)
        if math.isinf(d1) or math.isinf(d2):
            if d1 != d2:
                return False
            continue
        if abs(d1 - d2) > tol * (1.0 + abs(d1)):
            return False
    return True


def superlevel_set(f, lam: float) -> pw.MeasurableSet:
    """The set where |f| exceeds lam, as an exact union of intervals."""
    src = f.source if isinstance(f, RearrangedFunction) else f
    ivs: list[tuple[float, float]] = []
    for seg in _abs_segments(src):
        above_lo = seg.vlo > lam
        above_hi = seg.vhi > lam
        if above_lo and above_hi:
            ivs.append((seg.lo, seg.hi))
        elif above_lo or above_hi:
            cut = _crossing(seg.term_map(), seg.lo, seg.hi, lam)
            if above_lo:
                ivs.append((seg.lo, cut))
            else:
                ivs.append((cut, seg.hi))
    return pw.MeasurableSet.from_intervals(src.domain, ivs)


def second_maximal(f, t: float) -> float:
    """Average of the decreasing rearrangement over [0, t].

    Uses the layer-cake identity: the integral of f* up to t equals the
    integral of |f| over the superlevel set at the height f*(t), plus that
    height times the leftover length.  One height bisection per call; the
    rest is exact interval arithmetic.
    """
    if t <= 0.0:
        raise ValueError("the averaging window must have positive length")
    r = f if isinstance(f, RearrangedFunction) else decreasing_rearrangement(f)
    if r.exact is not None:
        return pw.integrate(r.exact, 0.0, min(t, r.domain.end)) / t
    lam = r.evaluate(t)
    if not math.isfinite(lam):
        return INF
    src = pw.absolute(r.source)
    E = superlevel_set(src, lam)
    mass = pw.integrate(pw.restrict(src, E))
    if not math.isfinite(mass):
        return INF
    m_e = E.measure()
    if m_e > t:
        # flat level overshoot: trim the sliver at the cut height
        return (mass - lam * (m_e - t)) / t
    return (mass + lam * (t - m_e)) / t
