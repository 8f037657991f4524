"""Exact piecewise functions built from terms c * t**alpha * (ln t)**logpow.

The family is closed under addition, scalar multiplication, pointwise
product, restriction, absolute value (after splitting pieces at sign
changes), antidifferentiation, and division by t.  That closure is what lets
the averaging transform and every norm of a step function stay exact.

A function is a finite list of disjoint half-open pieces [lo, hi) on the
unit interval [0, 1] or the half-line [0, inf); off the pieces the function
is zero.  Improper behavior at the endpoints 0 and inf is decided
analytically from the dominant monomial, never by sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import rootfind
from .errors import (
    DomainMismatchError,
    EvaluationDomainError,
    RepresentationError,
    UndefinedIntegralError,
    ValidationError,
)

INF = math.inf
MAX_TERMS_PER_PIECE = 64

TermMap = dict[tuple[float, int], float]


@dataclass(frozen=True)
class DomainSpec:
    """Underlying interval: the unit interval or the half-line."""

    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("unit", "halfline"):
            raise ValidationError(f"unknown domain kind {self.kind!r}")

    @property
    def end(self) -> float:
        return 1.0 if self.kind == "unit" else INF

    @property
    def is_unit(self) -> bool:
        return self.kind == "unit"


UNIT = DomainSpec("unit")
HALFLINE = DomainSpec("halfline")


def domain_from_name(name: str) -> DomainSpec:
    return DomainSpec(name)


@dataclass(frozen=True)
class Term:
    """One summand c * t**alpha * (ln t)**logpow."""

    coeff: float
    alpha: float = 0.0
    logpow: int = 0

    def __post_init__(self) -> None:
        if self.logpow < 0 or self.logpow != int(self.logpow):
            raise ValidationError("logpow must be a nonnegative integer")


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    terms: tuple[Term, ...]

    def term_map(self) -> TermMap:
        out: TermMap = {}
        for t in self.terms:
            key = (t.alpha, t.logpow)
            out[key] = out.get(key, 0.0) + t.coeff
        return out


def _terms_from_map(tm: TermMap) -> tuple[Term, ...]:
    items = sorted((k, c) for k, c in tm.items() if c != 0.0)
    return tuple(Term(c, alpha, k) for (alpha, k), c in items)


@dataclass(frozen=True)
class PiecewisePowerLog:
    """Canonical piecewise power-log function.

    Construct through :func:`make_ppl` (or the ``step_function`` /
    ``indicator`` helpers), which sorts, merges and validates the pieces.
    Structural equality of two canonical objects is exact symbolic equality.
    """

    domain: DomainSpec
    pieces: tuple[Piece, ...]

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    @property
    def is_step(self) -> bool:
        return all(
            len(p.terms) == 1 and p.terms[0].alpha == 0.0 and p.terms[0].logpow == 0
            for p in self.pieces
        )

    def breakpoints(self) -> list[float]:
        pts: list[float] = []
        for p in self.pieces:
            for x in (p.lo, p.hi):
                if not math.isinf(x) and (not pts or x > pts[-1]):
                    pts.append(x)
        return pts

    def support_bound(self) -> float:
        """Right end of the last piece (0 for the zero function)."""
        return self.pieces[-1].hi if self.pieces else 0.0

    def __call__(self, t: float) -> float:
        return evaluate(self, t)


PPL = PiecewisePowerLog


def make_ppl(domain: DomainSpec,
             pieces: Iterable[tuple[float, float, TermMap]]) -> PPL:
    """Canonicalize raw (lo, hi, term-map) triples into a function."""
    cleaned: list[tuple[float, float, TermMap]] = []
    for lo, hi, tm in pieces:
        tm = {k: c for k, c in tm.items() if c != 0.0}
        if not tm or lo >= hi:
            continue
        if lo < 0.0 or hi > domain.end:
            raise ValidationError(
                f"piece [{lo}, {hi}) leaves the domain [0, {domain.end}]")
        if len(tm) > MAX_TERMS_PER_PIECE:
            raise RepresentationError(
                f"piece would carry {len(tm)} terms (budget {MAX_TERMS_PER_PIECE})")
        cleaned.append((lo, hi, tm))
    cleaned.sort(key=lambda item: item[0])
    merged: list[tuple[float, float, TermMap]] = []
    for lo, hi, tm in cleaned:
        if merged and lo < merged[-1][1]:
            raise ValidationError("pieces overlap")
        if merged and lo == merged[-1][1] and tm == merged[-1][2]:
            merged[-1] = (merged[-1][0], hi, tm)
        else:
            merged.append((lo, hi, tm))
    return PPL(domain, tuple(Piece(lo, hi, _terms_from_map(tm))
                             for lo, hi, tm in merged))


def zero(domain: DomainSpec) -> PPL:
    return PPL(domain, ())


def step_function(domain: DomainSpec,
                  steps: Sequence[tuple[float, float, float]]) -> PPL:
    """Finite-valued step function from (lo, hi, value) triples."""
    return make_ppl(domain, [(lo, hi, {(0.0, 0): v}) for lo, hi, v in steps])


def indicator(domain: DomainSpec, lo: float, hi: float) -> PPL:
    return step_function(domain, [(lo, hi, 1.0)])


def power_piece(domain: DomainSpec, lo: float, hi: float, coeff: float,
                alpha: float, logpow: int = 0) -> PPL:
    return make_ppl(domain, [(lo, hi, {(alpha, logpow): coeff})])


# ---------------------------------------------------------------------------
# monomial calculus


def eval_term_map(tm: TermMap, t: float) -> float:
    if t <= 0.0:
        raise EvaluationDomainError("term evaluation needs t > 0")
    # plain powers keep integer cases exact (10**1 == 10.0 on the nose),
    # which the symbolic-equality guarantees rely on
    lnt = math.log(t)
    total = 0.0
    for (alpha, k), c in tm.items():
        try:
            v = t ** alpha
        except OverflowError:
            v = INF
        total += c * v * (lnt ** k if k else 1.0)
    return total


def antiderivative_map(tm: TermMap) -> TermMap:
    """Exact antiderivative, again a sum of monomials t**beta * (ln t)**j."""
    out: TermMap = {}
    for (alpha, k), c in tm.items():
        if alpha == -1.0:
            key = (0.0, k + 1)
            out[key] = out.get(key, 0.0) + c / (k + 1)
        else:
            for j in range(k + 1):
                coef = (c * (-1.0) ** (k - j) * math.factorial(k) / math.factorial(j)
                        / (alpha + 1.0) ** (k - j + 1))
                key = (alpha + 1.0, j)
                out[key] = out.get(key, 0.0) + coef
    return {k: c for k, c in out.items() if c != 0.0}


def limit_term_map(tm: TermMap, at: str) -> float:
    """Limit of the monomial sum at ``"zero"`` or ``"inf"`` (may be +-inf)."""
    live = {k: c for k, c in tm.items() if c != 0.0}
    if not live:
        return 0.0
    if at == "inf":
        alpha, k = max(live, key=lambda ak: (ak[0], ak[1]))
        c = live[(alpha, k)]
        if alpha > 0.0 or (alpha == 0.0 and k > 0):
            return math.copysign(INF, c)
        if alpha == 0.0:
            return c
        return 0.0
    if at == "zero":
        alpha, k = min(live, key=lambda ak: (ak[0], -ak[1]))
        c = live[(alpha, k)]
        sign = c * ((-1.0) ** k)
        if alpha < 0.0 or (alpha == 0.0 and k > 0):
            return math.copysign(INF, sign)
        if alpha == 0.0:
            return c
        return 0.0
    raise ValueError(f"unknown limit target {at!r}")


def _piece_integral(tm: TermMap, p: float, q: float) -> float:
    """Exact integral over [p, q), +-inf on divergence."""
    F = antiderivative_map(tm)
    upper = limit_term_map(F, "inf") if math.isinf(q) else eval_term_map(F, q)
    lower = limit_term_map(F, "zero") if p == 0.0 else eval_term_map(F, p)
    if math.isinf(upper) and math.isinf(lower):
        if upper == lower:
            # the two halves diverge with opposite signs
            raise UndefinedIntegralError(
                "integral diverges to +inf and -inf inside one piece")
        return upper
    if math.isinf(upper):
        return upper
    if math.isinf(lower):
        return -lower
    return upper - lower


def integrate(f: PPL, a: float = 0.0, b: float | None = None) -> float:
    """Exact integral of f over [a, b] (clamped to the domain).

    Divergence is decided analytically and returned as +-inf; contributions
    of both infinite signs raise :class:`UndefinedIntegralError`.
    """
    if b is None:
        b = f.domain.end
    a = max(a, 0.0)
    b = min(b, f.domain.end)
    if b <= a:
        return 0.0
    finite: list[float] = []
    pos = neg = False
    for piece in f.pieces:
        p, q = max(piece.lo, a), min(piece.hi, b)
        if q <= p:
            continue
        val = _piece_integral(piece.term_map(), p, q)
        if val == INF:
            pos = True
        elif val == -INF:
            neg = True
        else:
            finite.append(val)
    if pos and neg:
        raise UndefinedIntegralError("integral has divergences of both signs")
    if pos:
        return INF
    if neg:
        return -INF
    return math.fsum(finite)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(f: PPL, t: float) -> float:
    """Pointwise value; 0 off the pieces.

    The right endpoint of the domain is evaluated through the piece that
    closes there, so an indicator of [0, 1] is 1 at t = 1 on the unit
    interval.  At t = 0 the value is the piece limit when it is finite.
    """
    if t < 0.0 or t > f.domain.end:
        raise EvaluationDomainError(f"t = {t} outside domain")
    if t == 0.0:
        if f.pieces and f.pieces[0].lo == 0.0:
            lim = limit_term_map(f.pieces[0].term_map(), "zero")
            if math.isinf(lim):
                raise EvaluationDomainError("singular piece at t = 0")
            return lim
        return 0.0
    for piece in f.pieces:
        if piece.lo <= t < piece.hi or (t == piece.hi == f.domain.end):
            return eval_term_map(piece.term_map(), t)
    return 0.0


def limit_at_zero(f: PPL) -> float:
    if f.pieces and f.pieces[0].lo == 0.0:
        return limit_term_map(f.pieces[0].term_map(), "zero")
    return 0.0


def limit_at_infinity(f: PPL) -> float:
    if f.domain.is_unit:
        raise EvaluationDomainError("limit at infinity needs the half-line")
    if f.pieces and math.isinf(f.pieces[-1].hi):
        return limit_term_map(f.pieces[-1].term_map(), "inf")
    return 0.0


# ---------------------------------------------------------------------------
# algebra


def _refined_cells(f: PPL, g: PPL) -> list[tuple[float, float, TermMap, TermMap]]:
    cuts: set[float] = set()
    for h in (f, g):
        for p in h.pieces:
            cuts.add(p.lo)
            cuts.add(p.hi)
    knots = sorted(cuts)
    cells = []
    for lo, hi in zip(knots, knots[1:]):
        fm = _map_on(f, lo, hi)
        gm = _map_on(g, lo, hi)
        if fm or gm:
            cells.append((lo, hi, fm, gm))
    return cells


def _map_on(f: PPL, lo: float, hi: float) -> TermMap:
    for p in f.pieces:
        if p.lo <= lo and hi <= p.hi:
            return p.term_map()
    return {}


def combine(f: PPL, g: PPL, op: str) -> PPL:
    """Pointwise add, sub, or max (the latter splits at sign changes)."""
    if f.domain != g.domain:
        raise DomainMismatchError("operands live on different domains")
    if op == "max-abs-split":
        diff = combine(f, g, "sub")
        return scale(combine(combine(f, g, "add"), absolute(diff), "add"), 0.5)
    if op not in ("add", "sub"):
        raise ValueError(f"unknown op {op!r}")
    sign = 1.0 if op == "add" else -1.0
    pieces = []
    for lo, hi, fm, gm in _refined_cells(f, g):
        tm = dict(fm)
        for key, c in gm.items():
            tm[key] = tm.get(key, 0.0) + sign * c
        pieces.append((lo, hi, tm))
    return make_ppl(f.domain, pieces)


def scale(f: PPL, c: float) -> PPL:
    return make_ppl(f.domain, [
        (p.lo, p.hi, {k: c * v for k, v in p.term_map().items()})
        for p in f.pieces
    ])


def product(f: PPL, g: PPL) -> PPL:
    """Pointwise product; term counts multiply, guarded by the budget."""
    if f.domain != g.domain:
        raise DomainMismatchError("operands live on different domains")
    pieces = []
    for lo, hi, fm, gm in _refined_cells(f, g):
        if not fm or not gm:
            continue
        tm: TermMap = {}
        for (a1, k1), c1 in fm.items():
            for (a2, k2), c2 in gm.items():
                key = (a1 + a2, k1 + k2)
                tm[key] = tm.get(key, 0.0) + c1 * c2
        pieces.append((lo, hi, tm))
    return make_ppl(f.domain, pieces)


def derivative(f: PPL) -> PPL:
    """Piecewise derivative (density); jumps at breakpoints are dropped."""
    pieces = []
    for p in f.pieces:
        tm: TermMap = {}
        for (alpha, k), c in p.term_map().items():
            if alpha != 0.0:
                key = (alpha - 1.0, k)
                tm[key] = tm.get(key, 0.0) + c * alpha
            if k > 0:
                key = (alpha - 1.0, k - 1)
                tm[key] = tm.get(key, 0.0) + c * k
        pieces.append((p.lo, p.hi, tm))
    return make_ppl(f.domain, pieces)


# ---------------------------------------------------------------------------
# measurable sets


@dataclass(frozen=True)
class MeasurableSet:
    """Finite union of half-open intervals [lo, hi) inside the domain."""

    domain: DomainSpec
    intervals: tuple[tuple[float, float], ...]

    @staticmethod
    def from_intervals(domain: DomainSpec,
                       raw: Iterable[tuple[float, float]]) -> "MeasurableSet":
        clipped = []
        for lo, hi in raw:
            lo = max(lo, 0.0)
            hi = min(hi, domain.end)
            if lo < hi:
                clipped.append((lo, hi))
        clipped.sort()
        merged: list[list[float]] = []
        for lo, hi in clipped:
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return MeasurableSet(domain, tuple((lo, hi) for lo, hi in merged))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def measure(self) -> float:
        return math.fsum(hi - lo for lo, hi in self.intervals) \
            if not any(math.isinf(hi) for _, hi in self.intervals) else INF

    def intersect(self, other: "MeasurableSet") -> "MeasurableSet":
        if self.domain != other.domain:
            raise DomainMismatchError("sets live on different domains")
        out = []
        for a, b in self.intervals:
            for c, d in other.intervals:
                lo, hi = max(a, c), min(b, d)
                if lo < hi:
                    out.append((lo, hi))
        return MeasurableSet.from_intervals(self.domain, out)

    def union(self, other: "MeasurableSet") -> "MeasurableSet":
        if self.domain != other.domain:
            raise DomainMismatchError("sets live on different domains")
        return MeasurableSet.from_intervals(
            self.domain, list(self.intervals) + list(other.intervals))

    def contains(self, other: "MeasurableSet") -> bool:
        """True when ``other`` is a subset (up to null sets)."""
        for lo, hi in other.intervals:
            covered = lo
            for a, b in self.intervals:
                if a <= covered < b:
                    covered = b
                if covered >= hi:
                    break
            if covered < hi:
                return False
        return True


def essinf(A: MeasurableSet) -> float:
    """inf{eps >= 0 : the part of A below eps is null}; 0 for the empty set."""
    return A.intervals[0][0] if A.intervals else 0.0


def restrict(f: PPL, A: MeasurableSet) -> PPL:
    if f.domain != A.domain:
        raise DomainMismatchError("function and set live on different domains")
    pieces = []
    for p in f.pieces:
        for lo, hi in A.intervals:
            a, b = max(p.lo, lo), min(p.hi, hi)
            if a < b:
                pieces.append((a, b, p.term_map()))
    return make_ppl(f.domain, pieces)


# ---------------------------------------------------------------------------
# sign splitting


def _segment_sign(tm: TermMap, lo: float, hi: float) -> int:
    """Sign of a root-free piece, probed at three interior points."""
    ulo = math.log(lo) if lo > 0.0 else -rootfind._U_CAP
    uhi = math.log(hi) if not math.isinf(hi) else rootfind._U_CAP
    best = 0.0
    for q in (0.5, 0.25, 0.75):
        u = ulo + (uhi - ulo) * q
        v = rootfind.eval_exp_poly(tm, u)
        if abs(v) > abs(best):
            best = v
    if best == 0.0:
        raise RepresentationError("could not determine a segment sign")
    return 1 if best > 0.0 else -1


def absolute(f: PPL) -> PPL:
    """Exact |f|: pieces are split where f changes sign."""
    pieces = []
    for p in f.pieces:
        tm = p.term_map()
        roots = rootfind.roots_t(tm, p.lo, p.hi)
        knots = [p.lo] + roots + [p.hi]
        for lo, hi in zip(knots, knots[1:]):
            if _segment_sign(tm, lo, hi) < 0:
                pieces.append((lo, hi, {k: -c for k, c in tm.items()}))
            else:
                pieces.append((lo, hi, tm))
    return make_ppl(f.domain, pieces)


def positive_part(f: PPL) -> PPL:
    """max(f, 0), exact."""
    return scale(combine(f, absolute(f), "add"), 0.5)


def is_nonnegative(f: PPL) -> bool:
    return absolute(f) == f


def monotone_segments(f: PPL) -> list[tuple[float, float, TermMap]]:
    """Split every piece at its stationary points.

    On each returned segment the function is continuous and monotone.
    """
    out = []
    for p in f.pieces:
        tm = p.term_map()
        crit = rootfind.stationary_points_t(tm, p.lo, p.hi)
        knots = [p.lo] + crit + [p.hi]
        for lo, hi in zip(knots, knots[1:]):
            out.append((lo, hi, tm))
    return out


def segment_end_values(tm: TermMap, lo: float, hi: float) -> tuple[float, float]:
    """One-sided limits of the monomial sum at the segment ends."""
    vlo = limit_term_map(tm, "zero") if lo == 0.0 else eval_term_map(tm, lo)
    vhi = limit_term_map(tm, "inf") if math.isinf(hi) else eval_term_map(tm, hi)
    return vlo, vhi


def essential_sup_abs(f: PPL) -> float:
    """ess sup |f| over the whole domain, possibly +inf."""
    if f.is_zero:
        return 0.0
    best = 0.0
    for lo, hi, tm in monotone_segments(absolute(f)):
        vlo, vhi = segment_end_values(tm, lo, hi)
        best = max(best, vlo, vhi)
        if math.isinf(best):
            return INF
    return best


def is_nonincreasing(f: PPL) -> bool:
    """True when f is nonnegative and nonincreasing on the whole domain.

    Such a function coincides with its own decreasing rearrangement, which
    unlocks the exact path for maximal functions.
    """
    if f.is_zero:
        return True
    if not is_nonnegative(f):
        return False
    if f.pieces[0].lo != 0.0:
        return False
    prev_hi = 0.0
    prev_end_value: float | None = None
    for p in f.pieces:
        if p.lo != prev_hi:
            return False  # interior gap: the function would rise from 0
        tm = p.term_map()
        segs = [(lo, hi) for lo, hi, _ in monotone_segments(
            PPL(f.domain, (p,)))]
        for lo, hi in segs:
            vlo, vhi = segment_end_values(tm, lo, hi)
            if vhi > vlo + 1e-15 * max(1.0, abs(vlo)):
                return False
        vstart, vend = segment_end_values(tm, p.lo, p.hi)
        if prev_end_value is not None and vstart > prev_end_value * (1 + 1e-15) + 1e-300:
            return False
        prev_end_value = vend
        prev_hi = p.hi
    if prev_hi < f.domain.end and prev_end_value is not None and prev_end_value < 0:
        return False
    return True


def sample_grid(f: PPL, n: int = 64) -> list[float]:
    """Geometric evaluation grid covering the pieces, for probe comparisons."""
    lo = min((p.lo for p in f.pieces), default=0.0)
    hi = f.support_bound()
    if math.isinf(hi):
        hi = max(2.0 * f.breakpoints()[-1] if f.breakpoints() else 2.0, 2.0)
    if hi <= 0.0:
        # zero function: any positive probe grid will do
        hi = min(1.0, f.domain.end)
    lo = max(lo, hi * 1e-9)
    if lo >= hi:
        lo = hi / 2.0
    ratio = (hi / lo) ** (1.0 / (n - 1))
    return [lo * ratio ** i for i in range(n)]
