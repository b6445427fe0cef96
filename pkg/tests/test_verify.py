import random
from fractions import Fraction

import pytest

from zeps.sdomain import TustinParams
from zeps.verify import (
    check_determinant_oracle,
    check_epsilon_formulas,
    check_tustin_consistency,
    random_rational_s_point,
    random_s_point,
    random_z_point,
    rel_close,
)


class TestRelClose:
    def test_absolute_floor(self):
        assert rel_close(0, 1e-12, 1e-10)
        assert not rel_close(0, 1e-8, 1e-10)

    def test_relative_scaling(self):
        assert rel_close(1e8, 1e8 * (1 + 1e-11), 1e-10)
        assert not rel_close(1e8, 1e8 * (1 + 1e-9), 1e-10)

    def test_works_on_fractions(self):
        assert rel_close(Fraction(1, 3), Fraction(1, 3), 1e-10)
        assert not rel_close(Fraction(1, 3), Fraction(1, 2), 1e-10)


class TestSamplers:
    def test_z_points_avoid_origin(self):
        rng = random.Random(0)
        for _ in range(200):
            point = random_z_point(rng, 3, min_modulus=0.5)
            assert len(point) == 3
            assert all(abs(z) >= 0.5 for z in point)

    def test_s_points_keep_margin(self):
        rng = random.Random(0)
        params = TustinParams(2, (Fraction(1), Fraction(1, 2)))
        for _ in range(200):
            point = random_s_point(rng, params, margin=0.3)
            for q, s in enumerate(point):
                t = float(params.steps[q])
                assert abs(t * s - 2) >= 0.3 and abs(t * s + 2) >= 0.3

    def test_rational_points_are_exact_and_regular(self):
        rng = random.Random(0)
        params = TustinParams(3, (Fraction(1), Fraction(2), Fraction(1, 2)))
        for _ in range(200):
            point = random_rational_s_point(rng, params)
            assert all(isinstance(s, Fraction) for s in point)
            for q, s in enumerate(point):
                assert params.steps[q] * s not in (2, -2)

    def test_sampling_is_seed_deterministic(self):
        params = TustinParams.uniform(2)
        a = [random_rational_s_point(random.Random(5), params) for _ in range(3)]
        b = [random_rational_s_point(random.Random(5), params) for _ in range(3)]
        assert a == b


class TestChecks:
    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_epsilon_check_passes(self, dim):
        result = check_epsilon_formulas(dim)
        assert result.passed and not result.details

    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_determinant_check_passes(self, dim):
        assert check_determinant_oracle(dim).passed

    @pytest.mark.parametrize("dim", [2, 3, 4, 5])
    def test_tustin_check_passes(self, dim):
        result = check_tustin_consistency(dim, samples=10, seed=11)
        assert result.passed, result.details

    def test_tustin_check_with_mixed_steps(self):
        params = TustinParams(3, (Fraction(1), Fraction(1, 2), Fraction(3)))
        result = check_tustin_consistency(3, params, samples=20, seed=2)
        assert result.passed, result.details
