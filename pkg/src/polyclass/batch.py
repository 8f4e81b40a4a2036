"""Vectorized quartic nature classification and root finding.

Mirrors the scalar cascade in :mod:`polyclass.quartic` and the Aberth
iteration in :mod:`polyclass.oracle` on numpy arrays, for million-sample
agreement sweeps.  Callers chunk the inputs; everything here is allocation
bound, so chunks around 10^5 keep the working set in cache.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .quartic import Nature

NATURE_BY_CODE: Tuple[Nature, ...] = (
    Nature.NO_REAL,
    Nature.TWO_EQUAL_REAL,
    Nature.TWO_DISTINCT_REAL,
    Nature.FOUR_DISTINCT_REAL,
    Nature.FOUR_REAL_DOUBLE_PAIR,
    Nature.TWO_DOUBLE_PAIRS,
    Nature.TRIPLE_PLUS_SINGLE,
    Nature.QUADRUPLE_ROOT,
)
CODE_BY_NATURE = {n: i for i, n in enumerate(NATURE_BY_CODE)}

#: real-root count implied by each nature code
REAL_COUNT_BY_CODE = np.array([0, 2, 2, 4, 4, 4, 4, 4], dtype=np.int8)
#: 1 where the nature implies a repeated real root
REPEATED_BY_CODE = np.array([0, 1, 0, 0, 1, 1, 1, 1], dtype=np.int8)


def _signed(value: np.ndarray, scale: np.ndarray, eps: float):
    sign = np.sign(value).astype(np.int8)
    sign[np.abs(value) <= eps * scale] = 0
    return sign


def _margin(value: np.ndarray, scale: np.ndarray, eps: float) -> np.ndarray:
    denom = eps * scale
    out = np.full(value.shape, np.inf)
    np.divide(np.abs(value), denom, out=out, where=denom > 0)
    out[(denom == 0) & (value == 0)] = 0.0
    return out


def _terms(*arrays) -> Tuple[np.ndarray, np.ndarray]:
    value = arrays[0].copy()
    scale = np.abs(arrays[0])
    for t in arrays[1:]:
        value += t
        np.maximum(scale, np.abs(t), out=scale)
    return value, scale


def classify_nature_batch(a: np.ndarray, b: np.ndarray, c: np.ndarray,
                          d: np.ndarray, eps: float = 1e-9
                          ) -> Tuple[np.ndarray, np.ndarray]:
    """Nature codes plus the smallest decision margin (in tolerance units).

    The margin is the minimum over the sign tests consulted on the sample's
    decision path; samples below 10 are boundary-fragile.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    d = np.asarray(d, dtype=np.float64)

    a2, b2, c2 = a * a, b * b, c * c
    a3, b3, c3 = a2 * a, b2 * b, c2 * c
    a4, b4, c4 = a3 * a, b3 * b, c3 * c

    v_b, s_b = _terms(8 * b, -3 * a2)
    v_c0, s_c0 = _terms(8 * c, a3, -4 * a * b)
    v_band, s_band = _terms(108 * c2, 27 * a3 * c, -108 * a * b * c,
                            -9 * a2 * b2, 32 * b3)
    v_D, s_D = _terms(
        256 * d ** 3,
        -27 * a4 * d * d, 144 * a2 * b * d * d, -192 * a * c * d * d,
        -128 * b2 * d * d,
        18 * a3 * b * c * d, -4 * a2 * b3 * d, -6 * a2 * c2 * d,
        -80 * a * b2 * c * d, 16 * b4 * d, 144 * b * c2 * d,
        -4 * a3 * c3, a2 * b2 * c2, 18 * a * b * c3, -4 * b3 * c2, -27 * c4,
    )
    v_D1, s_D1 = _terms(
        768 * d * d,
        -54 * a4 * d, 288 * a2 * b * d, -384 * a * c * d, -256 * b2 * d,
        18 * a3 * b * c, -4 * a2 * b3, -6 * a2 * c2, -80 * a * b2 * c,
        16 * b4, 144 * b * c2,
    )
    v_D2, s_D2 = _terms(1536 * d, -54 * a4, 288 * a2 * b, -384 * a * c, -256 * b2)

    A = (-27 * a4 / 128 + 9 * a2 * b / 8 - 3 * a * c / 2 - b2) / 2
    B = (9 * a3 * b * c / 8 - a2 * b3 / 4 - 3 * a2 * c2 / 8
         - 5 * a * b2 * c + b4 + 9 * b * c2) / 16
    C = (-a3 * c3 + a2 * b2 * c2 / 4 + 9 * a * b * c3 / 2
         - b3 * c2 - 27 * c4 / 4) / 64
    v_dt, s_dt = _terms(A * A * d, -3 * B * d, A ** 3, -4 * A * B, 9 * C)
    v_dd, s_dd = _terms(2 * A * A * d, -6 * B * d, -9 * C, A * B)
    v_d0, s_d0 = _terms(256 * d, -a4)

    sg_b = _signed(v_b, s_b, eps)       # sign of b - 3a^2/8
    sg_c0 = _signed(v_c0, s_c0, eps)
    sg_band = _signed(v_band, s_band, eps)
    sg_D = _signed(v_D, s_D, eps)
    sg_D1 = _signed(v_D1, s_D1, eps)
    sg_D2 = _signed(v_D2, s_D2, eps)
    sg_dt = _signed(v_dt, s_dt, eps)
    sg_dd = _signed(v_dd, s_dd, eps)
    sg_d0 = _signed(v_d0, s_d0, eps)

    nature = np.empty(a.shape, dtype=np.int8)

    def by_sign(sign, above, equal, below):
        return np.where(sign > 0, above, np.where(sign == 0, equal, below)).astype(np.int8)

    not_c0 = sg_c0 != 0
    # b >= 3a^2/8, plus the non-band branch below it, all have one d-root
    single_root = by_sign(sg_D, 0, 1, 2)

    m_above_eq = sg_b >= 0
    nature[m_above_eq] = single_root[m_above_eq]
    m = (sg_b > 0) & ~not_c0
    nature[m] = by_sign(sg_dt, 0, 1, 2)[m]
    m = (sg_b == 0) & ~not_c0
    nature[m] = by_sign(sg_d0, 0, 7, 2)[m]

    m_below = sg_b < 0
    m = m_below & ~not_c0  # c = C0
    sub = by_sign(sg_dd, 0, 5, 2)
    inner = by_sign(sg_dt, 3, 4, 2)
    sub = np.where(sg_dd < 0, inner, sub).astype(np.int8)
    nature[m] = sub[m]

    m = m_below & not_c0 & (sg_band == 0)  # c on a band edge
    sub = by_sign(sg_dt, 0, 1, 2)
    inner = by_sign(sg_dd, 2, 6, 2)
    sub = np.where(sg_dt < 0, inner, sub).astype(np.int8)
    nature[m] = sub[m]

    m = m_below & not_c0 & (sg_band < 0)  # three d-roots
    outer_ok = (sg_D1 > 0) & (sg_D2 > 0)
    sub = np.where(sg_D > 0, np.where(outer_ok, 0, 3),
                   np.where(sg_D == 0, np.where(outer_ok, 1, 4), 2)).astype(np.int8)
    nature[m] = sub[m]

    m = m_below & not_c0 & (sg_band > 0)  # outside the band
    nature[m] = single_root[m]

    # decision-path minimum margin
    mg = {
        "b": _margin(v_b, s_b, eps),
        "c0": _margin(v_c0, s_c0, eps),
        "band": _margin(v_band, s_band, eps),
        "D": _margin(v_D, s_D, eps),
        "D1": _margin(v_D1, s_D1, eps),
        "D2": _margin(v_D2, s_D2, eps),
        "dt": _margin(v_dt, s_dt, eps),
        "dd": _margin(v_dd, s_dd, eps),
        "d0": _margin(v_d0, s_d0, eps),
    }
    min_margin = np.minimum(mg["b"], mg["c0"])
    use_band = m_below
    min_margin = np.where(use_band, np.minimum(min_margin, mg["band"]), min_margin)
    use_D = (sg_b >= 0) & not_c0
    use_D |= m_below & not_c0 & (sg_band != 0)
    min_margin = np.where(use_D, np.minimum(min_margin, mg["D"]), min_margin)
    use_D12 = m_below & not_c0 & (sg_band < 0)
    min_margin = np.where(use_D12,
                          np.minimum(min_margin, np.minimum(mg["D1"], mg["D2"])),
                          min_margin)
    use_dt = ((sg_b > 0) & ~not_c0) | (m_below & ~not_c0) \
        | (m_below & not_c0 & (sg_band == 0))
    min_margin = np.where(use_dt, np.minimum(min_margin, mg["dt"]), min_margin)
    use_dd = m_below & (~not_c0 | (not_c0 & (sg_band == 0)))
    min_margin = np.where(use_dd, np.minimum(min_margin, mg["dd"]), min_margin)
    use_d0 = (sg_b == 0) & ~not_c0
    min_margin = np.where(use_d0, np.minimum(min_margin, mg["d0"]), min_margin)
    return nature, min_margin


def aberth_roots_batch(trailing: np.ndarray, max_iter: int = 120,
                       tol: float = 1e-12) -> np.ndarray:
    """All complex roots of many monic polynomials at once.

    ``trailing`` has shape (N, degree): the coefficients after the leading 1,
    descending.  Returns shape (N, degree) complex roots (unordered).
    """
    trailing = np.asarray(trailing, dtype=np.float64)
    n_poly, degree = trailing.shape
    radius = 1.0 + np.abs(trailing).max(axis=1)
    angles = 2.0 * np.pi * np.arange(degree) / degree + 0.4
    z = radius[:, None] * np.exp(1j * angles)[None, :]

    coeffs = np.concatenate([np.ones((n_poly, 1)), trailing], axis=1)
    active = np.ones(n_poly, dtype=bool)
    for _ in range(max_iter):
        za = z[active]
        ca = coeffs[active]
        p = np.full(za.shape, ca[:, 0][:, None], dtype=np.complex128)
        dp = np.zeros_like(za)
        for k in range(1, degree + 1):
            dp = dp * za + p
            p = p * za + ca[:, k][:, None]
        diag = np.arange(degree)
        diff = za[:, :, None] - za[:, None, :]
        diff[:, diag, diag] = 1.0  # keep the diagonal harmless
        inv = 1.0 / np.where(diff == 0, 1e-300, diff)
        inv[:, diag, diag] = 0.0
        ssum = inv.sum(axis=2)
        dp_safe = np.where(dp == 0, 1e-300, dp)
        ratio = p / dp_safe
        denom = 1.0 - ratio * ssum
        w = ratio / np.where(denom == 0, 1.0, denom)
        za = za - w
        z[active] = za
        steps = (np.abs(w) / (1.0 + np.abs(za))).max(axis=1)
        done = steps < tol
        if done.any():
            idx = np.flatnonzero(active)
            active[idx[done]] = False
            if not active.any():
                break
    return z


def real_root_count_batch(roots: np.ndarray, rel_tol: float = 1e-6) -> np.ndarray:
    """Number of (numerically) real roots per polynomial."""
    scale = 1.0 + np.abs(roots).max(axis=1)
    return (np.abs(roots.imag) <= rel_tol * scale[:, None]).sum(axis=1).astype(np.int8)


def min_root_gap_batch(roots: np.ndarray) -> np.ndarray:
    """Smallest pairwise distance between roots, per polynomial."""
    diff = np.abs(roots[:, :, None] - roots[:, None, :])
    degree = roots.shape[1]
    diff[:, np.arange(degree), np.arange(degree)] = np.inf
    return diff.min(axis=(1, 2))


def brute_discriminant_batch(roots: np.ndarray) -> np.ndarray:
    """prod_{i<j} (x_i - x_j)^2 per polynomial, from root arrays."""
    degree = roots.shape[1]
    prod = np.ones(roots.shape[0], dtype=np.complex128)
    for i in range(degree):
        for j in range(i + 1, degree):
            diff = roots[:, i] - roots[:, j]
            prod *= diff * diff
    return prod.real
