"""Cubic classification, trigonometric roots, vertex triangle and isolation intervals.

The three real roots of x^3 + a x^2 + b x + c (when they exist) are the
x-projections of an equilateral triangle whose incircle is centered at -a/3
with radius r = sqrt(a^2-3b)/3.  Varying the free term rotates that triangle,
which is exactly what the trigonometric root formulas parameterize.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .errors import NoTriangle, OutOfRange
from .numeric import DEFAULT_TOL, Tolerance
from .poly import Cubic, RootSet, cubic_discriminant_terms, root_set_from_values

SQRT3 = math.sqrt(3.0)


class CubicKind(Enum):
    THREE_DISTINCT_REAL = "three_distinct_real"
    DOUBLE_PLUS_SINGLE = "double_plus_single"
    TRIPLE_REAL = "triple_real"
    ONE_REAL_PLUS_COMPLEX_PAIR = "one_real_plus_complex_pair"


@dataclass(frozen=True)
class CubicThresholds:
    """Free-term band [c2, c1] inside which three real roots exist; c0 is its midpoint."""

    c0: float
    c1: float
    c2: float


@dataclass(frozen=True)
class TriangleData:
    """Vertex triangle of a cubic with three real roots (descending order x1 >= x2 >= x3)."""

    centroid_x: float
    incircle_radius: float
    side: float
    theta: float
    mu1: float
    mu2: float
    nu1: float
    nu2: float
    nu3: float
    xi1: float
    xi2: float
    vertices: Tuple[Tuple[float, float], ...]


@dataclass(frozen=True)
class CubicClassification:
    kind: CubicKind
    thresholds: Optional[CubicThresholds]
    triangle: Optional[TriangleData]


def _band_terms(cu: Cubic):
    # c - c0 with c0 = -2a^3/27 + ab/3, cleared of denominators (x27)
    a, b, c = cu.a, cu.b, cu.c
    return (27 * c, 2 * a ** 3, -9 * a * b)


def cubic_thresholds(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> CubicThresholds:
    """The two free-term values where the discriminant vanishes (c1 > c2)."""
    a, b = float(cu.a), float(cu.b)
    s2 = a * a - 3.0 * b
    if tol.sign_terms((cu.a * cu.a, -3 * cu.b)) <= 0:
        raise NoTriangle(f"a^2 - 3b = {s2:.6g} <= 0: no two distinct critical points")
    c0 = -2.0 * a ** 3 / 27.0 + a * b / 3.0
    half = 2.0 / 27.0 * math.sqrt(s2 ** 3)
    return CubicThresholds(c0=c0, c1=c0 + half, c2=c0 - half)


def classify_cubic(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> CubicClassification:
    """Root-nature verdict from coefficient sign tests alone."""
    s2_sign = tol.sign_terms((cu.a * cu.a, -3 * cu.b))
    if s2_sign > 0:
        disc_sign = tol.sign_terms(cubic_discriminant_terms(cu))
        thresholds = cubic_thresholds(cu, tol)
        if disc_sign > 0:
            kind = CubicKind.THREE_DISTINCT_REAL
        elif disc_sign == 0:
            kind = CubicKind.DOUBLE_PLUS_SINGLE
        else:
            kind = CubicKind.ONE_REAL_PLUS_COMPLEX_PAIR
        triangle = None
        if kind is not CubicKind.ONE_REAL_PLUS_COMPLEX_PAIR:
            try:
                triangle = triangle_data(cu, tol)
            except NoTriangle:
                # boundary verdict whose triangle degenerates below resolution
                triangle = None
        return CubicClassification(kind=kind, thresholds=thresholds, triangle=triangle)
    if s2_sign == 0:
        # degenerate triangle; triple root only if c sits exactly at a^3/27
        if tol.sign_terms((27 * cu.c, -cu.a ** 3)) == 0:
            return CubicClassification(CubicKind.TRIPLE_REAL, None, None)
        return CubicClassification(CubicKind.ONE_REAL_PLUS_COMPLEX_PAIR, None, None)
    return CubicClassification(CubicKind.ONE_REAL_PLUS_COMPLEX_PAIR, None, None)


def _acos_argument(a: float, b: float, c: float, s2: float) -> float:
    denom = 2.0 * math.sqrt(s2) ** 3
    if denom == 0.0:
        raise NoTriangle("a^2 - 3b below floating-point resolution")
    return -(2.0 * a ** 3 - 9.0 * a * b + 27.0 * c) / denom


def viete_values(cu: Cubic, tol: Tolerance = DEFAULT_TOL):
    """Raw trigonometric root values.

    Returns ``("three", [x1, x2, x3])`` in descending order x1 >= x2 >= x3
    when the rotation angle is real, otherwise ``("one", x, pair)`` where x is
    the single real root.
    """
    a, b, c = float(cu.a), float(cu.b), float(cu.c)
    s2 = a * a - 3.0 * b
    s2_sign = tol.sign_terms((cu.a * cu.a, -3 * cu.b))
    if s2_sign != 0 and 2.0 * math.sqrt(abs(s2)) ** 3 == 0.0:
        s2_sign = 0  # nonzero but below float resolution: degenerate triangle
    third = -a / 3.0
    if s2_sign == 0:
        shift = c - a ** 3 / 27.0
        if tol.sign_terms((27 * cu.c, -cu.a ** 3)) == 0:
            return "triple", third
        return "one", third - math.copysign(abs(shift) ** (1.0 / 3.0), shift)
    if s2_sign > 0:
        amp = 2.0 / 3.0 * math.sqrt(s2)
        w = _acos_argument(a, b, c, s2)
        if abs(w) <= 1.0 + tol.eps:
            theta = math.acos(max(-1.0, min(1.0, w))) / 3.0
            x1 = third + amp * math.cos(theta)
            x2 = third - amp * math.cos(theta + math.pi / 3.0)
            x3 = third - amp * math.cos(theta - math.pi / 3.0)
            return "three", [x1, x2, x3]
        theta = cmath.acos(complex(w)) / 3.0
        candidates = [
            third + amp * cmath.cos(theta),
            third - amp * cmath.cos(theta + math.pi / 3.0),
            third - amp * cmath.cos(theta - math.pi / 3.0),
        ]
    else:
        # mirrored formulas: inverted radical signs, and the product relation
        # flips the arccos argument sign as well
        s = cmath.sqrt(complex(s2))
        amp = 2.0 / 3.0 * s
        w = (2.0 * a ** 3 - 9.0 * a * b + 27.0 * c) / (2.0 * s ** 3)
        theta = cmath.acos(w) / 3.0
        candidates = [
            third - amp * cmath.cos(theta),
            third + amp * cmath.cos(theta + math.pi / 3.0),
            third + amp * cmath.cos(theta - math.pi / 3.0),
        ]
    real = min(candidates, key=lambda z: abs(z.imag))
    return "one", real.real


def viete_roots(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> RootSet:
    """RootSet via the trigonometric formulas (all cases, complex-safe)."""
    kind, payload = viete_values(cu, tol)
    cu_f = cu.as_float()
    if kind == "triple":
        return RootSet(((payload, 3),), 0, (abs(cu_f(payload)),), 3)
    if kind == "one":
        return RootSet(((payload, 1),), 1, (abs(cu_f(payload)),), 3)
    values = sorted(payload)
    residuals = [abs(cu_f(v)) for v in values]
    return root_set_from_values(values, residuals, degree=3, merge_tol=1e-6)


def rotation_angle(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> float:
    """Triangle rotation angle in [0, pi/3]; 0 at c=c2, pi/6 at c=c0, pi/3 at c=c1."""
    a, b, c = float(cu.a), float(cu.b), float(cu.c)
    s2 = a * a - 3.0 * b
    if tol.sign_terms((cu.a * cu.a, -3 * cu.b)) <= 0:
        raise NoTriangle(f"a^2 - 3b = {s2:.6g} <= 0")
    w = _acos_argument(a, b, c, s2)
    if abs(w) > 1.0 + tol.eps:
        raise OutOfRange(f"arccos argument {w!r} outside [-1, 1]: free term outside band")
    return math.acos(max(-1.0, min(1.0, w))) / 3.0


def triangle_data(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> TriangleData:
    """All triangle landmarks; requires three real roots, not all equal."""
    cls_kind = None
    s2_sign = tol.sign_terms((cu.a * cu.a, -3 * cu.b))
    if s2_sign <= 0:
        raise NoTriangle("a^2 - 3b <= 0: the triangle degenerates")
    disc_sign = tol.sign_terms(cubic_discriminant_terms(cu))
    if disc_sign < 0:
        raise NoTriangle("only one real root: no triangle")
    a, b = float(cu.a), float(cu.b)
    s2 = a * a - 3.0 * b
    r = math.sqrt(s2) / 3.0
    third = -a / 3.0
    kind, payload = viete_values(cu, tol)
    if kind != "three":
        raise NoTriangle("trigonometric branch did not yield three real roots")
    x1, x2, x3 = sorted(payload, reverse=True)
    return TriangleData(
        centroid_x=third,
        incircle_radius=r,
        side=math.sqrt(12.0) * r,
        theta=rotation_angle(cu, tol),
        mu1=third + r,
        mu2=third - r,
        nu1=third + SQRT3 * r,
        nu2=third,
        nu3=third - SQRT3 * r,
        xi1=third - 2.0 * r,
        xi2=third + 2.0 * r,
        vertices=(
            (x1, (x2 - x3) / SQRT3),
            (x2, (x3 - x1) / SQRT3),
            (x3, (x1 - x2) / SQRT3),
        ),
    )


@dataclass(frozen=True)
class CubicIsolation:
    """Isolation intervals for the three real roots, ascending root order."""

    branch: str  # "low_c" for c <= c0, "high_c" for c >= c0
    intervals: Tuple[Tuple[float, float], ...]


def cubic_isolation_intervals(cu: Cubic, tol: Tolerance = DEFAULT_TOL) -> CubicIsolation:
    """Landmark intervals containing the sorted real roots (smallest first)."""
    tri = triangle_data(cu, tol)
    third = tri.centroid_x
    if tol.sign_terms(_band_terms(cu)) <= 0:
        intervals = (
            (tri.nu3, tri.mu2),
            (tri.mu2, third),
            (tri.nu1, tri.xi2),
        )
        return CubicIsolation("low_c", intervals)
    intervals = (
        (tri.xi1, tri.nu3),
        (third, tri.mu1),
        (tri.mu1, tri.nu1),
    )
    return CubicIsolation("high_c", intervals)
