"""Tolerance-aware sign tests shared by every classifier.

All threshold decisions in the library reduce to the sign of a polynomial
expression in the input coefficients.  In floating point, a sign is only
trusted when the summed value exceeds ``eps`` times the magnitude of the
largest term in the expression; anything smaller counts as zero.  With
``fractions.Fraction`` coefficients the same tests are exact and the
tolerance is ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Number = Union[int, float, Fraction]

DEFAULT_EPS = 1e-9


def is_exact(value) -> bool:
    """True for values that support exact sign tests (int/Fraction)."""
    return isinstance(value, Rational)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def as_float(value) -> float:
    return float(value)


def ensure_finite(name: str, value: Number) -> Number:
    if isinstance(value, Rational):
        return value
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"coefficient {name!r} must be finite, got {value!r}")
    return v


def parse_number(text: str, exact: bool) -> Number:
    """Parse a CLI coefficient.

    In exact mode only integers and ``p/q`` fractions are accepted; decimal
    literals are rejected because silently converting them to binary floats
    would defeat the point of requesting exactness.
    """
    text = text.strip()
    if exact:
        if "/" in text:
            return Fraction(text)
        try:
            return Fraction(int(text))
        except ValueError:
            raise ValueError(
                f"exact mode accepts integers or p/q fractions, got {text!r}"
            ) from None
    return float(text)


@dataclass(frozen=True)
class Tolerance:
    """Relative sign-test tolerance.

    ``sign_terms`` sums a list of monomial terms and compares the total
    against ``eps`` times the largest term magnitude.  Exact (rational)
    terms short-circuit to an exact comparison.
    """

    eps: float = DEFAULT_EPS

    def sign_terms(self, terms: Sequence[Number]) -> int:
        value = sum(terms)
        if is_exact(value):
            return (value > 0) - (value < 0)
        value = float(value)
        scale = max((abs(float(t)) for t in terms), default=0.0)
        if not math.isfinite(value) or not math.isfinite(scale):
            raise OverflowError(
                "coefficient magnitudes overflow the threshold expression; "
                "rescale the polynomial or use exact (Fraction) coefficients"
            )
        return self.sign(value, scale)

    def sign(self, value: Number, scale: float) -> int:
        if is_exact(value):
            return (value > 0) - (value < 0)
        v = float(value)
        if abs(v) <= self.eps * scale:
            return 0
        return 1 if v > 0 else -1

    def margin_terms(self, terms: Sequence[Number]) -> float:
        """Signed distance from zero in tolerance units (1.0 == eps * scale)."""
        value = float(sum(terms))
        scale = max((abs(float(t)) for t in terms), default=0.0)
        return self.margin(value, scale)

    def margin(self, value: Number, scale: float) -> float:
        v = float(value)
        denom = self.eps * scale
        if denom == 0.0:
            return math.inf if v > 0 else (-math.inf if v < 0 else 0.0)
        return v / denom


DEFAULT_TOL = Tolerance()


def sort_key_complex(z: complex):
    """Deterministic ordering for complex values (real part, then imaginary)."""
    return (z.real, z.imag)
