"""Reverse-engineering quartics: choose coefficients left-to-right for a target nature.

Given the leading coefficients that are already fixed, each function returns
the set of values for the next coefficient that keeps the target root nature
reachable.  ``synthesize`` walks the full chain and guarantees the round trip
through the classifier.

Boundary natures sit on measure-zero sets ({C0}, {d2}, ...).  In float mode
the exact threshold value is used and the tolerance absorbs rounding; in
exact mode the quartic is built from rational root data satisfying the fixed
prefix, so the classification is literally on the boundary.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import RoundTripMismatch, Unachievable
from .numeric import DEFAULT_TOL, Number, Tolerance
from .poly import Quartic
from .quartic import (
    DoublePairPosition,
    Nature,
    QuarticThresholds,
    classify_quartic,
    quartic_thresholds,
)

_FOUR_REAL_OPEN = {Nature.FOUR_DISTINCT_REAL}
_FOUR_REAL_POINT = {
    Nature.FOUR_REAL_DOUBLE_PAIR,
    Nature.TWO_DOUBLE_PAIRS,
    Nature.TRIPLE_PLUS_SINGLE,
}


@dataclass(frozen=True)
class Admissible:
    """Union of open intervals (None = unbounded side) and isolated points."""

    intervals: Tuple[Tuple[Optional[float], Optional[float]], ...] = ()
    points: Tuple[float, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.intervals and not self.points


@dataclass(frozen=True)
class NatureTarget:
    nature: Nature
    a: Number
    b: Optional[Number] = None
    c: Optional[Number] = None
    position: Optional[DoublePairPosition] = None
    strategy: str = "midpoint"  # or "random"
    seed: Optional[int] = None
    exact: bool = False
    window: float = 10.0

    def __post_init__(self):
        if self.strategy not in ("midpoint", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")


def _b_threshold(a) -> float:
    return 3.0 * float(a) ** 2 / 8.0


def admissible_b_range(a, nature: Nature, tol: Tolerance = DEFAULT_TOL) -> Admissible:
    """Admissible quadratic coefficients for the target nature."""
    thr = _b_threshold(a)
    if nature is Nature.QUADRUPLE_ROOT:
        return Admissible(points=(thr,))
    if nature in _FOUR_REAL_OPEN or nature in _FOUR_REAL_POINT:
        return Admissible(intervals=(((None, thr)),))
    # zero- and two-real natures: the half-line above keeps the free-term
    # discriminant single-rooted, which every such nature admits
    return Admissible(intervals=(((thr, None)),))


def _require_triangle(a, b, tol: Tolerance, nature: Nature):
    if tol.sign_terms((3 * a * a, -8 * b)) <= 0:
        raise Unachievable(
            f"nature {nature.value} needs b < 3a^2/8 = {_b_threshold(a):.6g}, got b = {float(b):.6g}"
        )


def admissible_c_range(a, b, nature: Nature,
                       position: Optional[DoublePairPosition] = None,
                       tol: Tolerance = DEFAULT_TOL) -> Admissible:
    """Admissible linear coefficients once a and b are fixed."""
    if nature is Nature.QUADRUPLE_ROOT:
        if tol.sign_terms((8 * b, -3 * a * a)) != 0:
            raise Unachievable("a quadruple root needs b = 3a^2/8 exactly")
        return Admissible(points=(float(a) ** 3 / 16.0,))
    if nature in (Nature.NO_REAL, Nature.TWO_EQUAL_REAL, Nature.TWO_DISTINCT_REAL):
        return Admissible(intervals=((None, None),))
    _require_triangle(a, b, tol, nature)
    thr = quartic_thresholds(Quartic(a, b, 0, 0), tol)
    c_lo, c_hi, c_mid = thr.c_lo, thr.c_hi, thr.c_mid
    if nature is Nature.FOUR_DISTINCT_REAL:
        return Admissible(intervals=((c_lo, c_hi),))
    if nature is Nature.TWO_DOUBLE_PAIRS:
        return Admissible(points=(c_mid,))
    if nature is Nature.TRIPLE_PLUS_SINGLE:
        return Admissible(points=(c_hi, c_lo))
    if nature is Nature.FOUR_REAL_DOUBLE_PAIR:
        if position is DoublePairPosition.LOWEST_TWO:
            return Admissible(intervals=((c_lo, c_mid),))
        if position is DoublePairPosition.HIGHEST_TWO:
            return Admissible(intervals=((c_mid, c_hi),))
        return Admissible(intervals=((c_lo, c_hi),))
    raise Unachievable(f"unsupported nature {nature!r}")


def admissible_d_range(a, b, c, nature: Nature,
                       position: Optional[DoublePairPosition] = None,
                       tol: Tolerance = DEFAULT_TOL) -> Admissible:
    """Admissible free terms once a, b, c are fixed."""
    q0 = Quartic(a, b, c, 0)
    thr = quartic_thresholds(q0, tol)
    s_b_rel = tol.sign_terms((8 * b, -3 * a * a))
    s_c0 = tol.sign_terms((8 * c, a ** 3, -4 * a * b))
    on_band_edge = (
        s_b_rel < 0
        and tol.sign_terms((108 * c * c, 27 * a ** 3 * c, -108 * a * b * c,
                            -9 * a * a * b * b, 32 * b ** 3)) == 0
    )
    inside_band = (
        s_b_rel < 0
        and tol.sign_terms((108 * c * c, 27 * a ** 3 * c, -108 * a * b * c,
                            -9 * a * a * b * b, 32 * b ** 3)) < 0
    )

    if nature is Nature.QUADRUPLE_ROOT:
        if s_b_rel != 0 or s_c0 != 0:
            raise Unachievable("a quadruple root needs b = 3a^2/8 and c = a^3/16")
        return Admissible(points=(float(a) ** 4 / 256.0,))

    if nature is Nature.TWO_DOUBLE_PAIRS:
        if not (s_b_rel < 0 and s_c0 == 0):
            raise Unachievable("two double pairs need b < 3a^2/8 and c = C0")
        return Admissible(points=(thr.d_dagger,))

    if nature is Nature.TRIPLE_PLUS_SINGLE:
        if not on_band_edge:
            raise Unachievable("a triple root needs b < 3a^2/8 and c on a band edge C1/C2")
        return Admissible(points=(thr.d_dagger,))

    if nature is Nature.FOUR_DISTINCT_REAL:
        if s_b_rel >= 0:
            raise Unachievable("four distinct real roots need b < 3a^2/8")
        if s_c0 == 0:
            return Admissible(intervals=((thr.d_tilde, thr.d_dagger),))
        if not inside_band:
            raise Unachievable("four distinct real roots need C2 < c < C1")
        d1, d2, d3 = thr.d_roots
        return Admissible(intervals=((d3, d2),))

    if nature is Nature.FOUR_REAL_DOUBLE_PAIR:
        if s_b_rel >= 0:
            raise Unachievable("a real double pair among four needs b < 3a^2/8")
        if s_c0 == 0:
            if position in (DoublePairPosition.LOWEST_TWO, DoublePairPosition.HIGHEST_TWO):
                raise Unachievable("at c = C0 only the middle pair can be repeated")
            return Admissible(points=(thr.d_tilde,))
        if not inside_band:
            raise Unachievable("a double pair among four needs C2 < c < C1")
        d1, d2, d3 = thr.d_roots
        if position is DoublePairPosition.MIDDLE_TWO:
            return Admissible(points=(d3,))
        if position in (DoublePairPosition.LOWEST_TWO, DoublePairPosition.HIGHEST_TWO):
            return Admissible(points=(d2,))
        return Admissible(points=(d2, d3))

    # zero- and two-real natures, every remaining branch
    if nature is Nature.NO_REAL:
        upper = _no_real_lower_bound(thr, s_b_rel, s_c0, on_band_edge, inside_band)
        return Admissible(intervals=((upper, None),))
    if nature is Nature.TWO_EQUAL_REAL:
        point = _two_equal_point(thr, s_b_rel, s_c0, on_band_edge, inside_band)
        if point is None:
            raise Unachievable("no two-equal-real case at c = C0 with b < 3a^2/8")
        return Admissible(points=(point,))
    if nature is Nature.TWO_DISTINCT_REAL:
        pieces: List[Tuple[Optional[float], Optional[float]]] = []
        if inside_band and s_c0 != 0:
            d1, d2, d3 = thr.d_roots
            pieces.append((d2, d1))
            pieces.append((None, d3))
        elif on_band_edge:
            pieces.append((thr.d_dagger, thr.d_tilde))
            pieces.append((None, thr.d_dagger))
        elif s_b_rel < 0 and s_c0 == 0:
            pieces.append((None, thr.d_tilde))
        else:
            pieces.append((None, thr.d_roots[0]))
        return Admissible(intervals=tuple(pieces))
    raise Unachievable(f"unsupported nature {nature!r}")


def _no_real_lower_bound(thr: QuarticThresholds, s_b_rel, s_c0, on_edge, inside):
    if s_b_rel < 0 and s_c0 == 0:
        return thr.d_dagger
    if on_edge:
        return thr.d_tilde
    if inside:
        return thr.d_roots[0]
    return thr.d_roots[0] if thr.d_roots else thr.d_tilde


def _two_equal_point(thr: QuarticThresholds, s_b_rel, s_c0, on_edge, inside):
    if s_b_rel < 0 and s_c0 == 0:
        return None
    if on_edge:
        return thr.d_tilde
    if inside:
        return thr.d_roots[0]
    return thr.d_roots[0] if thr.d_roots else thr.d_tilde


# --- sampling -------------------------------------------------------------------


def _rng(target: NatureTarget) -> random.Random:
    return random.Random(0 if target.seed is None else target.seed)


def _pick(adm: Admissible, target: NatureTarget, rng: random.Random,
          pad: float = 0.05) -> float:
    if adm.empty:
        raise Unachievable("empty admissible set")
    w = target.window
    if adm.points:
        if target.strategy == "midpoint":
            return float(adm.points[0])
        return float(rng.choice(adm.points))
    lo, hi = adm.intervals[0]
    if lo is None and hi is None:
        lo, hi = -w / 2.0, w / 2.0
    elif lo is None:
        lo = hi - w
    elif hi is None:
        hi = lo + w
    if target.strategy == "midpoint":
        return (lo + hi) / 2.0
    # stay away from the open edges: boundary shells would reclassify
    margin = pad * (hi - lo)
    return rng.uniform(lo + margin, hi - margin)


def _snap(x: float) -> Fraction:
    """Nearby rational with a small denominator, for open-set exact picks."""
    return Fraction(x).limit_denominator(10 ** 6)


def synthesize(target: NatureTarget, tol: Tolerance = DEFAULT_TOL) -> Quartic:
    """Produce a quartic classifying exactly as the target nature.

    Random draws that land in a tolerance shell around a boundary are
    retried with wider edge padding (deterministic, seed-driven).  Raises
    Unachievable when the fixed prefix rules the nature out and
    RoundTripMismatch if the built quartic fails to classify back (an
    internal bug guard).
    """
    rng = _rng(target)
    attempts = 6 if target.strategy == "random" else 1
    mismatch = None
    for attempt in range(attempts):
        pad = min(0.45, 0.05 * 2 ** attempt)
        if target.exact:
            q = _synthesize_exact(target, rng, tol, pad)
        else:
            q = _synthesize_float(target, rng, tol, pad)
        cls = classify_quartic(q, tol)
        if cls.nature is not target.nature:
            mismatch = RoundTripMismatch(
                f"synthesized {q} classified as {cls.nature.value}, "
                f"wanted {target.nature.value}"
            )
            continue
        if (target.position is not None
                and target.nature is Nature.FOUR_REAL_DOUBLE_PAIR
                and cls.position is not target.position):
            mismatch = RoundTripMismatch(
                f"synthesized {q} has pair position {cls.position}, "
                f"wanted {target.position}"
            )
            continue
        return q
    raise mismatch


def _synthesize_float(target: NatureTarget, rng: random.Random,
                      tol: Tolerance, pad: float = 0.05) -> Quartic:
    a = float(target.a)
    if target.b is None:
        b = _pick(admissible_b_range(a, target.nature, tol), target, rng, pad)
    else:
        b = float(target.b)
    if target.c is None:
        c = _pick(admissible_c_range(a, b, target.nature, target.position, tol),
                  target, rng, pad)
    else:
        c = float(target.c)
    d = _pick(admissible_d_range(a, b, c, target.nature, target.position, tol),
              target, rng, pad)
    return Quartic(a, b, c, d)


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _rand_fraction(rng: random.Random, lo: float, hi: float) -> Fraction:
    return Fraction(rng.uniform(lo, hi)).limit_denominator(1000)


def _synthesize_exact(target: NatureTarget, rng: random.Random,
                      tol: Tolerance, pad: float = 0.05) -> Quartic:
    """Rational quartic exactly on the target stratum.

    Open natures pick rational interior points of the float admissible sets;
    boundary natures are assembled from rational root data compatible with
    the fixed prefix, because their threshold values are irrational for most
    prefixes.
    """
    a = Fraction(target.a)
    bq = None if target.b is None else Fraction(target.b)
    cq = None if target.c is None else Fraction(target.c)
    nature = target.nature

    if nature is Nature.QUADRUPLE_ROOT:
        b = 3 * a * a / 8
        if bq is not None and bq != b:
            raise Unachievable("a quadruple root needs b = 3a^2/8 exactly")
        c = a ** 3 / 16
        if cq is not None and cq != c:
            raise Unachievable("a quadruple root needs c = a^3/16 exactly")
        return Quartic(a, b, c, a ** 4 / 256)

    if nature is Nature.TWO_DOUBLE_PAIRS:
        if bq is None:
            b = 3 * a * a / 8 - _offset(target, rng)
        else:
            b = bq
            if 3 * a * a - 8 * b <= 0:
                raise Unachievable("two double pairs need b < 3a^2/8")
        c0 = -a ** 3 / 8 + a * b / 2
        if cq is not None and cq != c0:
            raise Unachievable("two double pairs need c = C0 exactly")
        d = (b / 2 - a * a / 8) ** 2
        return Quartic(a, b, c0, d)

    if nature is Nature.TRIPLE_PLUS_SINGLE:
        if bq is None:
            t = _offset(target, rng)  # 3a^2 - 8b = 3 t^2 keeps C1, C2 rational
            b = 3 * (a * a - t * t) / 8
        else:
            b = bq
            t2 = (3 * a * a - 8 * b) / 3
            t = _rational_sqrt(t2)
            if t is None or t == 0:
                raise Unachievable(
                    "exact triple-root synthesis needs (3a^2-8b)/3 to be a rational square"
                )
        c0 = -a ** 3 / 8 + a * b / 2
        c_high, c_low = c0 + t ** 3 / 8, c0 - t ** 3 / 8
        if cq is None:
            c = c_high if target.strategy == "midpoint" or rng.random() < 0.5 else c_low
        elif cq == c_high:
            c = c_high
        elif cq == c_low:
            c = c_low
        else:
            raise Unachievable("exact triple-root synthesis needs c = C1 or c = C2 exactly")
        high = c == c_high
        triple = -a / 4 + (t / 4 if high else -t / 4)
        single = -a / 4 - (3 * t / 4 if high else -3 * t / 4)
        return Quartic(a, b, c, triple ** 3 * single)

    if nature is Nature.FOUR_REAL_DOUBLE_PAIR:
        return _exact_double_pair(target, a, bq, cq, rng)

    if nature is Nature.TWO_EQUAL_REAL:
        return _exact_two_equal(target, a, bq, cq, rng)

    # open natures: rational interior points of the float admissible sets
    ftarget = NatureTarget(nature=nature, a=float(a),
                           b=None if bq is None else float(bq),
                           c=None if cq is None else float(cq),
                           position=target.position, strategy=target.strategy,
                           seed=target.seed, window=target.window)
    qf = _synthesize_float(ftarget, rng, tol, pad)
    b = bq if bq is not None else _snap(qf.b)
    c = cq if cq is not None else _snap(qf.c)
    d_adm = admissible_d_range(float(a), float(b), float(c), nature,
                               target.position, tol)
    d = _snap(_pick(d_adm, target, rng, pad))
    return Quartic(a, b, c, d)


def _offset(target: NatureTarget, rng: random.Random) -> Fraction:
    if target.strategy == "midpoint":
        return Fraction(2)
    return abs(_rand_fraction(rng, 0.25, target.window)) + Fraction(1, 4)


def _exact_double_pair(target: NatureTarget, a: Fraction, bq, cq,
                       rng: random.Random) -> Quartic:
    # (x-u)^2 (x-v)(x-w) with 2u + v + w = -a
    if cq is not None:
        raise Unachievable(
            "exact double-pair synthesis supports fixing a and b only; "
            "the final two coefficients are determined by rational root data"
        )
    position = target.position or DoublePairPosition.MIDDLE_TWO
    g1 = _offset(target, rng)
    g2 = _offset(target, rng) + Fraction(1, 3)
    if bq is None:
        base = Fraction(-1, 2) if target.strategy == "midpoint" else _rand_fraction(
            rng, -target.window / 2, target.window / 2)
        if position is DoublePairPosition.LOWEST_TWO:
            u, v, w = base, base + g1, base + g1 + g2
        elif position is DoublePairPosition.HIGHEST_TWO:
            u, v, w = base, base - g1, base - g1 - g2
        else:
            u, v, w = base, base - g1, base + g2
        shift = (-a - (2 * u + v + w)) / 4
        u, v, w = u + shift, v + shift, w + shift
    else:
        # v + w and v*w are forced; u must make (v-w)^2 a rational square
        found = None
        for k in range(1, 4000):
            for u in (Fraction(k, 8), Fraction(-k, 8)):
                disc = a * a - 4 * a * u - 8 * u * u - 4 * bq
                root = _rational_sqrt(disc) if disc > 0 else None
                if root is None or root == 0:
                    continue
                e = a + 2 * u
                v = (-e - root) / 2
                w = (-e + root) / 2
                if u == v or u == w:
                    continue
                pos = _pair_position(u, v, w)
                if target.position is None or pos is target.position:
                    found = (u, v, w)
                    break
            if found:
                break
        if not found:
            raise Unachievable(
                "no rational double-pair configuration matches the fixed a, b"
            )
        u, v, w = found
    return Quartic(*_expand_double_pair(u, v, w))


def _pair_position(u, v, w) -> DoublePairPosition:
    if u < min(v, w):
        return DoublePairPosition.LOWEST_TWO
    if u > max(v, w):
        return DoublePairPosition.HIGHEST_TWO
    return DoublePairPosition.MIDDLE_TWO


def _expand_double_pair(u, v, w):
    a = -(2 * u + v + w)
    b = u * u + 2 * u * (v + w) + v * w
    c = -(u * u * (v + w) + 2 * u * v * w)
    d = u * u * v * w
    return a, b, c, d


def _exact_two_equal(target: NatureTarget, a: Fraction, bq, cq,
                     rng: random.Random) -> Quartic:
    # (x-u)^2 (x^2 + e x + f) with e = a + 2u and complex quadratic roots
    if cq is not None:
        raise Unachievable(
            "exact two-equal synthesis supports fixing a and b only"
        )
    if bq is None:
        u = Fraction(1, 2) if target.strategy == "midpoint" else _rand_fraction(
            rng, -target.window / 2, target.window / 2)
        e = a + 2 * u
        f = e * e / 4 + _offset(target, rng)
        b = f - 2 * a * u - 3 * u * u
    else:
        b = bq
        # need h(u) = 2u^2 + a u + b - a^2/4 > 0
        u = None
        for k in range(0, 4000):
            for cand in (Fraction(k, 8), Fraction(-k, 8)):
                if 2 * cand * cand + a * cand + b - a * a / 4 > 0:
                    u = cand
                    break
            if u is not None:
                break
        if u is None:
            raise Unachievable("no rational double root location for the fixed a, b")
        e = a + 2 * u
        f = b + 2 * a * u + 3 * u * u
    c = u * u * e - 2 * u * f
    d = u * u * f
    return Quartic(a, b, c, d)
