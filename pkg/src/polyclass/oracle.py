"""Independent numeric ground truth for degrees 2 through 5.

A deterministic Aberth-style simultaneous iteration finds all complex roots;
multiplicities come from clustering (never from deflation), followed by a few
multiplicity-aware Newton steps on each cluster centroid.  Everything is pure
and reproducible: same input, same bits out.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import NoConvergence, PolyclassError
from .numeric import sort_key_complex
from .poly import Cubic, Quartic, Quintic, RootSet

MACHEPS = 2.220446049250313e-16


@dataclass(frozen=True)
class OracleConfig:
    max_iterations: int = 200
    convergence_tol: float = 1e-13
    cluster_tol: float = 1e-6
    polish_steps: int = 3

    def __post_init__(self):
        if (self.max_iterations <= 0 or self.convergence_tol <= 0
                or self.cluster_tol <= 0 or self.polish_steps <= 0):
            raise ValueError("all oracle configuration values must be positive")


DEFAULT_CONFIG = OracleConfig()


def monic_coefficients(poly) -> List[float]:
    """Descending float coefficients, normalized to a leading 1."""
    if isinstance(poly, (Cubic, Quartic, Quintic)):
        coeffs = [float(x) for x in poly.coefficients()]
    else:
        coeffs = [float(x) for x in poly]
        if not coeffs or coeffs[0] == 0.0:
            raise ValueError("leading coefficient must be nonzero")
        coeffs = [c / coeffs[0] for c in coeffs]
    if any(not math.isfinite(c) for c in coeffs):
        raise ValueError("coefficients must be finite")
    degree = len(coeffs) - 1
    if degree not in (2, 3, 4, 5):
        raise ValueError(f"oracle supports degrees 2..5, got {degree}")
    return coeffs


def _horner2(coeffs: Sequence[float], z: complex) -> Tuple[complex, complex]:
    p = complex(coeffs[0])
    dp = 0j
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _eval_noise(coeffs: Sequence[float], z: complex) -> float:
    az = abs(z)
    bound = 0.0
    for c in coeffs:
        bound = bound * az + abs(c)
    return 4.0 * len(coeffs) * MACHEPS * bound


def _quadratic_roots(b: float, c: float) -> List[complex]:
    """Roots of x^2 + b x + c, with the numerically stable split."""
    disc = complex(b * b - 4.0 * c)
    sq = cmath.sqrt(disc)
    if b.real >= 0:
        qq = -(b + sq) / 2.0
    else:
        qq = -(b - sq) / 2.0
    if qq == 0:
        return [0j, 0j]
    return sorted([qq, complex(c) / qq], key=sort_key_complex)


def _aberth(coeffs: Sequence[float], cfg: OracleConfig) -> List[complex]:
    n = len(coeffs) - 1
    if n == 2:
        return _quadratic_roots(coeffs[1], coeffs[2])
    radius = 1.0 + max(abs(c) for c in coeffs[1:])
    # fixed non-symmetric placement: breaks conjugate-symmetry stalls
    z = [radius * cmath.exp(1j * (2.0 * math.pi * k / n + 0.4)) for k in range(n)]
    trace: List[float] = []
    for _ in range(cfg.max_iterations):
        max_step = 0.0
        for k in range(n):
            zk = z[k]
            p, dp = _horner2(coeffs, zk)
            if abs(p) <= _eval_noise(coeffs, zk):
                continue
            if dp == 0:
                z[k] = zk + 1e-8 * (1.0 + abs(zk))
                max_step = math.inf
                continue
            ratio = p / dp
            ssum = 0j
            for j in range(n):
                if j == k:
                    continue
                dz = zk - z[j]
                if dz == 0:
                    dz = 1e-12 * (1.0 + abs(zk))
                ssum += 1.0 / dz
            denom = 1.0 - ratio * ssum
            w = ratio if denom == 0 else ratio / denom
            z[k] = zk - w
            max_step = max(max_step, abs(w) / (1.0 + abs(z[k])))
        trace.append(max_step)
        if max_step < cfg.convergence_tol:
            break
    else:
        residual_ok = all(
            abs(_horner2(coeffs, zk)[0]) <= 16.0 * _eval_noise(coeffs, zk) for zk in z
        )
        if not residual_ok:
            raise NoConvergence(
                f"simultaneous iteration did not converge in {cfg.max_iterations} iterations",
                trace=trace,
            )
    return sorted(z, key=sort_key_complex)


def _centroid(points: Sequence[complex]) -> complex:
    return sum(points) / len(points)


def _derivative_coeffs(coeffs: Sequence[float]) -> List[List[float]]:
    """coeffs of p, p', p'', ... down to the constant, descending order each."""
    out = [list(coeffs)]
    while len(out[-1]) > 1:
        prev = out[-1]
        deg = len(prev) - 1
        out.append([prev[i] * (deg - i) for i in range(deg)])
    return out


def _diameter(points: Sequence[complex]) -> float:
    return max((abs(x - y) for x in points for y in points), default=0.0)


def _multiple_root_scatter(derivs: List[List[float]], z: complex, m: int) -> float:
    """Radius within which m approximations of a true m-fold root at z spread.

    Near an m-fold root the evaluation noise hides p up to the distance where
    some Taylor term p^(k)(z)/k! dz^k (k >= m) emerges from the noise floor,
    so the resolvable radius is the smallest such k-th root.
    """
    noise = _eval_noise(derivs[0], z)
    n = len(derivs) - 1
    radius = math.inf
    for k in range(m, n + 1):
        lead = abs(_horner2(derivs[k], z)[0]) / math.factorial(k)
        if lead > 0.0:
            radius = min(radius, (noise / lead) ** (1.0 / k))
    return radius


def _cluster_ok(points: Sequence[complex], derivs: List[List[float]],
                cluster_tol: float, scale: float) -> bool:
    m = len(points)
    if m == 1:
        return True
    diam = _diameter(points)
    if diam <= cluster_tol * scale:
        return True
    return diam <= 8.0 * _multiple_root_scatter(derivs, _centroid(points), m)


def _partitions(n: int):
    """All set partitions of range(n) in restricted-growth order."""
    def rec(i, groups):
        if i == n:
            yield [list(g) for g in groups]
            return
        for g in groups:
            g.append(i)
            yield from rec(i + 1, groups)
            g.pop()
        groups.append([i])
        yield from rec(i + 1, groups)
        groups.pop()

    yield from rec(0, [])


def _cluster(points: List[complex], coeffs: Sequence[float],
             cfg: OracleConfig) -> List[List[complex]]:
    """Coarsest admissible grouping of root approximations.

    A group of size m is admissible when its diameter fits the merge
    tolerance or the theoretical scatter of an m-fold root at its centroid.
    Degrees are at most 5, so trying every partition (<= 52) is cheap and
    avoids greedy merge ordering artifacts.
    """
    pts = sorted(points, key=sort_key_complex)
    scale = 1.0 + max(abs(z) for z in pts)
    derivs = _derivative_coeffs(coeffs)
    best = None
    for parts in _partitions(len(pts)):
        clusters = [[pts[i] for i in group] for group in parts]
        if not all(_cluster_ok(cl, derivs, cfg.cluster_tol, scale) for cl in clusters):
            continue
        key = (len(clusters), sum(_diameter(cl) for cl in clusters))
        if best is None or key < best[0]:
            best = (key, clusters)
    assert best is not None  # singletons are always admissible
    return best[1]


def _polish(derivs: List[List[float]], z: complex, m: int, steps: int,
            locality: float) -> complex:
    """Refine a cluster centroid.

    An m-fold root of p is a simple root of p^(m-1), so plain Newton there
    restores full accuracy; a locality cap keeps a merged near-cluster from
    wandering to some distant stationary point.
    """
    if m == 1:
        coeffs = derivs[0]
        best, best_res = z, abs(_horner2(coeffs, z)[0])
        for _ in range(steps):
            p, dp = _horner2(coeffs, z)
            if dp == 0:
                break
            z = z - p / dp
            res = abs(_horner2(coeffs, z)[0])
            if res < best_res:
                best, best_res = z, res
        return best
    target = derivs[m - 1]
    start = z
    for _ in range(steps):
        p, dp = _horner2(target, z)
        if dp == 0:
            break
        step = p / dp
        if abs(z - step - start) > locality:
            break
        z = z - step
    return z


def _clustered_roots(coeffs: Sequence[float], cfg: OracleConfig) -> List[Tuple[complex, int]]:
    raw = _aberth(coeffs, cfg)
    derivs = _derivative_coeffs(coeffs)
    scale = 1.0 + max(abs(z) for z in raw)
    out = []
    for cluster in _cluster(raw, coeffs, cfg):
        m = len(cluster)
        locality = 4.0 * (_diameter(cluster) + cfg.cluster_tol * scale)
        z = _polish(derivs, _centroid(cluster), m, cfg.polish_steps, locality)
        out.append((z, m))
    return sorted(out, key=lambda t: sort_key_complex(t[0]))


def all_roots(poly, cfg: OracleConfig = DEFAULT_CONFIG) -> List[complex]:
    """All complex roots repeated by multiplicity (cluster representatives)."""
    coeffs = monic_coefficients(poly)
    out: List[complex] = []
    for z, m in _clustered_roots(coeffs, cfg):
        out.extend([z] * m)
    return out


def solve(poly, cfg: OracleConfig = DEFAULT_CONFIG) -> RootSet:
    """Real roots with multiplicities; conjugate pairs only counted."""
    coeffs = monic_coefficients(poly)
    n = len(coeffs) - 1
    derivs = _derivative_coeffs(coeffs)
    clusters = _clustered_roots(coeffs, cfg)
    scale = 1.0 + max(abs(z) for z, _ in clusters)
    real: List[Tuple[float, int]] = []
    cplx: List[Tuple[complex, int]] = []
    for z, m in clusters:
        reality = max(cfg.cluster_tol * scale,
                      8.0 * _multiple_root_scatter(derivs, z, m) if m > 1 else 0.0)
        if abs(z.imag) <= reality:
            real.append((z.real, m))
        else:
            cplx.append((z, m))
    if sum(m for _, m in cplx) % 2 == 1:
        # conjugate symmetry demands an even complex multiplicity; the least
        # imaginary cluster is the noise victim
        cplx.sort(key=lambda t: (abs(t[0].imag), sort_key_complex(t[0])))
        z, m = cplx.pop(0)
        real.append((z.real, m))
    real.sort()
    merged: List[List] = []
    for v, m in real:
        if merged and v - merged[-1][0] <= cfg.cluster_tol * max(1.0, abs(v)):
            prev = merged[-1]
            prev[0] = (prev[0] * prev[1] + v * m) / (prev[1] + m)
            prev[1] += m
        else:
            merged.append([v, m])
    residuals = tuple(abs(_horner2(coeffs, complex(v))[0]) for v, _ in merged)
    return RootSet(
        roots=tuple((v, m) for v, m in merged),
        complex_pairs=sum(m for _, m in cplx) // 2,
        residuals=residuals,
        degree=n,
    )


def brute_discriminant(poly, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """prod_{i<j} (x_i - x_j)^2 over all complex roots of a monic polynomial."""
    roots = all_roots(poly, cfg)
    prod = complex(1.0)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            diff = roots[i] - roots[j]
            prod *= diff * diff
    if abs(prod.imag) > 1e-8 * abs(prod) and abs(prod) > 0:
        raise PolyclassError(
            f"discriminant product not conjugate-symmetric: {prod!r}"
        )
    return prod.real
