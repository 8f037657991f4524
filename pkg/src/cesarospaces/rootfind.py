"""Root isolation for sums c * t**alpha * (ln t)**k on subintervals of (0, inf).

Everything runs in u = ln t coordinates where each piece becomes an
exponential polynomial h(u) = sum c * exp(alpha*u) * u**k.  Roots are found
by recursive Rolle bracketing: the derivative's roots cut the axis into
monotone segments, each holding at most one sign change.  The recursion
terminates because factoring out exp(alpha_min*u) turns the lowest block
into a plain polynomial whose degree drops with every differentiation.

u-space precision 1e-12 equals relative t-space precision 1e-12.
"""

from __future__ import annotations

import math
from typing import Mapping

from scipy.optimize import brentq

from .errors import RepresentationError

_XTOL = 1e-12
_U_CAP = 700.0  # |u| beyond this is out of float range for t = e**u
_MAX_MARCH = 60

TermMap = Mapping[tuple[float, int], float]


def _clean(terms: TermMap) -> dict[tuple[float, int], float]:
    return {key: c for key, c in terms.items() if c != 0.0}


def _log_mag(c: float, alpha: float, k: int, u: float) -> float:
    # log |c * e^{alpha u} * u^k|, -inf when the term vanishes at u
    if c == 0.0 or (k > 0 and u == 0.0):
        return -math.inf
    return math.log(abs(c)) + alpha * u + (k * math.log(abs(u)) if k else 0.0)


def eval_exp_poly(terms: TermMap, u: float) -> float:
    total = 0.0
    for (alpha, k), c in terms.items():
        x = alpha * u
        if x > _U_CAP:
            return math.copysign(math.inf, c * (u ** k if k % 2 else 1.0) if k else c)
        val = c * math.exp(x)
        if k:
            val *= u ** k
        total += val
    return total


def derivative_terms(terms: TermMap) -> dict[tuple[float, int], float]:
    """d/du of the exponential polynomial, merged by (alpha, k)."""
    out: dict[tuple[float, int], float] = {}
    for (alpha, k), c in terms.items():
        if alpha != 0.0:
            out[(alpha, k)] = out.get((alpha, k), 0.0) + c * alpha
        if k > 0:
            out[(alpha, k - 1)] = out.get((alpha, k - 1), 0.0) + c * k
    return _clean(out)


def _dominant_key(terms: dict[tuple[float, int], float], toward_plus: bool):
    keys = terms.keys()
    if toward_plus:
        return max(keys, key=lambda ak: (ak[0], ak[1]))
    return min(keys, key=lambda ak: (ak[0], -ak[1]))


def _dominance_bound(terms: dict[tuple[float, int], float], toward_plus: bool,
                     start: float) -> float:
    """Finite U such that the dominant term outweighs the rest beyond U.

    Beyond the bound (toward the requested infinity) the sum cannot vanish,
    so root searches may stop there.
    """
    dom = _dominant_key(terms, toward_plus)
    others = [key for key in terms if key != dom]
    if not others:
        return start
    u = start
    step = 4.0
    for _ in range(_MAX_MARCH):
        if abs(u) > _U_CAP:
            break
        probes = (u, u + step / 2 if toward_plus else u - step / 2)
        ok = True
        for p in probes:
            ld = _log_mag(terms[dom], dom[0], dom[1], p)
            ratio = sum(math.exp(min(_log_mag(terms[key], key[0], key[1], p) - ld, 50.0))
                        for key in others)
            if not ratio < 0.5:
                ok = False
                break
        if ok:
            return u
        u = u + step if toward_plus else u - step
        step *= 2.0
    raise RepresentationError(
        "could not establish a dominance bound for root isolation")


def _single_term_roots(k: int, ulo: float, uhi: float) -> list[float]:
    # c * e^{alpha u} * u^k vanishes only at u = 0 (when k > 0)
    return [0.0] if k > 0 and ulo < 0.0 < uhi else []


def roots_u(terms: TermMap, ulo: float, uhi: float) -> list[float]:
    """All roots of the exponential polynomial in the open interval (ulo, uhi).

    Bounds may be ``-inf`` / ``+inf``; a dominance bound replaces them.
    Raises ``ValueError`` for the identically zero sum.
    """
    work = _clean(terms)
    if not work:
        raise ValueError("identically zero on the piece")
    if ulo >= uhi:
        return []
    if len(work) == 1:
        (_, k), = work.keys()
        return _single_term_roots(k, ulo, uhi)

    if math.isinf(ulo):
        anchor = min(uhi, 0.0) - 4.0 if not math.isinf(uhi) else -4.0
        ulo = _dominance_bound(work, False, anchor)
    if math.isinf(uhi):
        anchor = max(ulo, 0.0) + 4.0
        uhi = _dominance_bound(work, True, anchor)
    if ulo >= uhi:
        return []

    # factor out the lowest exponential; roots are unchanged and the
    # recursion over derivatives now terminates
    alpha0 = min(alpha for alpha, _ in work)
    shifted = {(alpha - alpha0, k): c for (alpha, k), c in work.items()}
    crit = roots_u(derivative_terms(shifted), ulo, uhi)

    knots = [ulo] + crit + [uhi]
    found: list[float] = []
    fvals = [eval_exp_poly(shifted, u) for u in knots]
    for i in range(len(knots) - 1):
        a, b = knots[i], knots[i + 1]
        fa, fb = fvals[i], fvals[i + 1]
        if fa == 0.0 and i > 0:
            found.append(a)
        if fa == 0.0 or fb == 0.0:
            continue
        if (fa > 0) != (fb > 0):
            root = brentq(lambda u: eval_exp_poly(shifted, u), a, b,
                          xtol=_XTOL, rtol=4 * math.ulp(1.0))
            found.append(float(root))
    # interior knots that are exact zeros of the derivative chain can be
    # roots of h itself (flat crossings); catch the last knot too
    if fvals[-1] == 0.0 and not math.isinf(knots[-1]):
        pass  # open interval: endpoint roots belong to the caller
    out: list[float] = []
    for r in sorted(found):
        if ulo < r < uhi and (not out or r - out[-1] > _XTOL):
            out.append(r)
    return out


def roots_t(terms: TermMap, tlo: float, thi: float) -> list[float]:
    """Roots in t-space on the open interval (tlo, thi) c (0, inf)."""
    ulo = math.log(tlo) if tlo > 0.0 else -math.inf
    uhi = math.log(thi) if not math.isinf(thi) else math.inf
    return [math.exp(u) for u in roots_u(terms, ulo, uhi)]


def stationary_points_t(terms: TermMap, tlo: float, thi: float) -> list[float]:
    """Interior zeros of d/dt of the sum, i.e. monotonicity breakpoints."""
    work = _clean(terms)
    if not work:
        return []
    # d/dt = e^{-u} d/du in u coordinates; same zero set as d/du
    deriv = derivative_terms(work)
    if not deriv:
        return []
    ulo = math.log(tlo) if tlo > 0.0 else -math.inf
    uhi = math.log(thi) if not math.isinf(thi) else math.inf
    if len(deriv) == 1:
        (_, k), = deriv.keys()
        return [1.0] if k > 0 and (tlo < 1.0 < thi) else []
    return [math.exp(u) for u in roots_u(deriv, ulo, uhi)]
