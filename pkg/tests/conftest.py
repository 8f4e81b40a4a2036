"""Shared helpers: polynomial construction from roots and an independent Sturm chain."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

import pytest


def cubic_coeffs_from_roots(r1, r2, r3) -> Tuple[float, float, float]:
    a = -(r1 + r2 + r3)
    b = r1 * r2 + r1 * r3 + r2 * r3
    c = -r1 * r2 * r3
    return a, b, c


def quartic_coeffs_from_roots(r1, r2, r3, r4) -> Tuple[float, float, float, float]:
    a = -(r1 + r2 + r3 + r4)
    b = (r1 * r2 + r1 * r3 + r1 * r4 + r2 * r3 + r2 * r4 + r3 * r4)
    c = -(r1 * r2 * r3 + r1 * r2 * r4 + r1 * r3 * r4 + r2 * r3 * r4)
    d = r1 * r2 * r3 * r4
    return a, b, c, d


def monic_from_roots(roots: Sequence[float]) -> List[float]:
    """Descending coefficients of prod (x - r), leading 1 included."""
    coeffs = [1.0]
    for r in roots:
        new = [coeffs[0]]
        for k in range(1, len(coeffs)):
            new.append(coeffs[k] - r * coeffs[k - 1])
        new.append(-r * coeffs[-1])
        coeffs = new
    return coeffs


def quintic_coeffs_from_roots(roots: Sequence[float]) -> Tuple[float, ...]:
    return tuple(monic_from_roots(roots)[1:])


def eval_scale(coeffs_desc: Sequence[float], x: float) -> float:
    """Sum of monomial magnitudes: the natural residual scale at x."""
    total = 0.0
    for c in coeffs_desc:
        total = total * abs(x) + abs(c)
    return total


def poly_divmod(num: List[Fraction], den: List[Fraction]):
    """Polynomial division over Fractions; descending coefficients."""
    num = list(num)
    quot: List[Fraction] = []
    while len(num) >= len(den):
        factor = num[0] / den[0]
        quot.append(factor)
        for i in range(len(den)):
            num[i] -= factor * den[i]
        num.pop(0)
    while num and num[0] == 0:
        num.pop(0)
    return quot, num


def sturm_chain(coeffs: Sequence[Fraction]) -> List[List[Fraction]]:
    """Sturm sequence of a polynomial with Fraction coefficients, descending."""
    p0 = [Fraction(c) for c in coeffs]
    n = len(p0) - 1
    p1 = [p0[i] * (n - i) for i in range(n)]
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        _, rem = poly_divmod(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240817)
