"""Vectorized classifier and root finder against their scalar references."""

import numpy as np
import pytest

from polyclass import Quartic, classify_quartic, discriminant_quartic
from polyclass.batch import (
    NATURE_BY_CODE,
    REAL_COUNT_BY_CODE,
    aberth_roots_batch,
    brute_discriminant_batch,
    classify_nature_batch,
    min_root_gap_batch,
    real_root_count_batch,
)


class TestClassifyBatch:
    def test_matches_scalar_on_random_samples(self, rng):
        n = 20000
        a, b, c, d = rng.uniform(-10, 10, size=(4, n))
        codes, margins = classify_nature_batch(a, b, c, d)
        idx = rng.choice(n, size=2000, replace=False)
        for i in idx:
            scalar = classify_quartic(Quartic(a[i], b[i], c[i], d[i]))
            if NATURE_BY_CODE[codes[i]] is not scalar.nature:
                # sign-test rounding may differ only inside the fragile shell
                assert margins[i] < 10.0
        assert np.isfinite(margins[np.isfinite(margins)]).all()

    def test_boundary_cases_coded(self):
        a = np.array([4.0, 0.0, 0.0, 3.0])
        b = np.array([6.0, -2.0, -6.0, 2.0])
        c = np.array([4.0, 0.0, 8.0, -1.0])
        d = np.array([1.0, 1.0, -3.0, -0.95])
        codes, margins = classify_nature_batch(a, b, c, d)
        natures = [NATURE_BY_CODE[k].value for k in codes]
        assert natures == ["quadruple_root", "two_double_pairs",
                           "triple_plus_single", "four_distinct_real"]
        assert margins[:3].min() == 0.0
        assert margins[3] > 10.0

    def test_margin_reflects_distance_to_boundary(self):
        a = np.array([3.0, 3.0])
        b = np.array([2.0, 2.0])
        c = np.array([-1.0, -1.0])
        d = np.array([-0.95, -0.928765808075677])  # interior vs on d2
        _, margins = classify_nature_batch(a, b, c, d)
        assert margins[0] > 1e4
        assert margins[1] < 10.0


class TestAberthBatch:
    def test_matches_scalar_oracle(self, rng):
        from polyclass import all_roots

        n = 200
        trailing = rng.uniform(-10, 10, size=(n, 4))
        roots = aberth_roots_batch(trailing)
        for i in range(0, n, 20):
            remaining = list(roots[i])
            for z in all_roots([1.0, *trailing[i]]):
                nearest = min(remaining, key=lambda w: abs(w - z))
                assert abs(nearest - z) < 1e-8 * (1.0 + abs(z))
                remaining.remove(nearest)

    def test_real_count(self, rng):
        trailing = np.array([
            [3.0, 2.0, -1.0, -0.95],   # four real
            [0.0, 0.0, 0.0, 1.0],      # none
            [0.0, 0.0, 0.0, -1.0],     # two
        ])
        roots = aberth_roots_batch(trailing)
        assert list(real_root_count_batch(roots)) == [4, 0, 2]

    def test_min_gap(self):
        trailing = np.array([[0.0, -2.0, 0.0, 1.0]])  # (x^2-1)^2
        roots = aberth_roots_batch(trailing)
        assert min_root_gap_batch(roots)[0] < 1e-6

    def test_brute_discriminant(self, rng):
        n = 100
        trailing = rng.uniform(-5, 5, size=(n, 4))
        roots = aberth_roots_batch(trailing)
        brute = brute_discriminant_batch(roots)
        for i in range(n):
            closed = discriminant_quartic(Quartic(*trailing[i]))
            assert brute[i] == pytest.approx(closed, rel=1e-7, abs=1e-5)


class TestAgreement:
    def test_real_count_agreement_sweep(self, rng):
        n = 50000
        a, b, c, d = rng.uniform(-10, 10, size=(4, n))
        codes, margins = classify_nature_batch(a, b, c, d)
        roots = aberth_roots_batch(np.stack([a, b, c, d], axis=1))
        counts = real_root_count_batch(roots)
        agree = REAL_COUNT_BY_CODE[codes] == counts
        solid = margins > 10.0
        assert agree[solid].all()
        assert agree.mean() > 0.999
