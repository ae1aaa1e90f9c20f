import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfcheck.cesaro import (
    CesaroParams,
    cesaro_mean,
    cesaro_polynomial,
    classical_cesaro,
    classical_cesaro_factorial,
    weight_ratios,
    weights,
)
from gfcheck.errors import DomainError
from gfcheck.generators import log_series
from gfcheck.series import CoefficientSequence, pochhammer_ratio


def seq(rng, n):
    return CoefficientSequence(np.concatenate([[1.0], rng.uniform(0.01, 2.0, n - 1)]))


class TestParams:
    @pytest.mark.parametrize("b,c,n", [(1, 0, 3), (1, 2.5, 3), (1, 1, 1), (1, 1, 2.5)])
    def test_domain(self, b, c, n):
        with pytest.raises(DomainError):
            CesaroParams(b, c, n)

    def test_classical(self):
        cp = CesaroParams.classical(2.5, 6)
        assert (cp.b, cp.c, cp.delta) == (3.5, 1.0, 2.5)
        with pytest.raises(DomainError):
            CesaroParams.classical(-1.0, 4)

    def test_weights_need_positive_b(self):
        # b + 1 > c > 0 admits b <= 0, but B_k divides by b
        with pytest.raises(DomainError):
            weights(CesaroParams(-0.5, 0.2, 3))


class TestWeights:
    def test_ones(self):
        assert weights(CesaroParams(1, 1, 4)).tolist() == [1, 1, 1, 1]

    def test_integers(self):
        assert weights(CesaroParams(2, 1, 4)).tolist() == [1, 2, 3, 4]

    def test_half_integers(self):
        assert weights(CesaroParams(1.5, 0.5, 2))[1] == pytest.approx(4.0, rel=1e-15)

    @given(st.floats(0.1, 10), st.floats(0.1, 10), st.integers(2, 60))
    def test_matches_pochhammer_ratio(self, b, c, n):
        if not b + 1 > c:
            return
        cp = CesaroParams(b, c, n)
        lead = (1 + b - c) / b
        want = [1.0] + [lead * pochhammer_ratio(b, c, k) for k in range(1, n)]
        assert weights(cp).tolist() == want

    def test_large_n_stays_finite(self):
        assert np.all(np.isfinite(weight_ratios(CesaroParams(200.0, 0.5, 10_000))))

    def test_overflow_reported(self):
        with pytest.raises(OverflowError):
            weights(CesaroParams(200.0, 0.5, 10_000))

    @given(st.floats(0.1, 10), st.floats(0.1, 10), st.integers(2, 80))
    def test_ratios_match_weights(self, b, c, n):
        if not b + 1 > c:
            return
        cp = CesaroParams(b, c, n)
        B = weights(cp)
        assert np.allclose(weight_ratios(cp), B[::-1] / B[-1], rtol=1e-12)

    @given(st.floats(0.1, 20), st.floats(0.1, 20), st.integers(2, 80))
    def test_ratios_in_unit_interval(self, b, c, n):
        # B_k nondecreasing needs b >= c and B_1 >= B_0, i.e. b + 1 >= 2c
        if not (b >= c and b + 1 >= 2 * c):
            return
        r = weight_ratios(CesaroParams(b, c, n))
        assert np.all(r > 0) and np.all(r <= 1.0)

    def test_ratios_can_exceed_one_when_b_equals_large_c(self):
        # b = c = 3: B_1 = (1/3) * 3/3 = 1/3 < B_0
        r = weight_ratios(CesaroParams(3.0, 3.0, 4))
        assert r[-1] == pytest.approx(3.0)


class TestMean:
    def test_all_ones(self):
        f = CoefficientSequence(np.ones(5))
        assert cesaro_mean(f, CesaroParams(2, 1, 3)).tolist() == pytest.approx([1, 2 / 3, 1 / 3])

    def test_log_series(self):
        s = cesaro_mean(log_series(6), CesaroParams(2, 1, 4))
        assert s.tolist() == pytest.approx([1, 3 / 8, 1 / 6, 1 / 16], rel=1e-15)

    def test_partial_sum_exact(self):
        f = seq(np.random.default_rng(1), 30)
        assert cesaro_mean(f, CesaroParams(1, 1, 20)) == f.truncate(20)

    def test_normalization_exact(self):
        f = seq(np.random.default_rng(2), 30)
        assert cesaro_mean(f, CesaroParams(3.7, 0.4, 25)).a(1) == 1.0

    def test_too_short(self):
        with pytest.raises(DomainError):
            cesaro_mean(CoefficientSequence([1.0, 0.5]), CesaroParams(2, 1, 3))

    @given(st.floats(-3, 3), st.floats(-3, 3), st.integers(0, 2**32 - 1))
    def test_linearity(self, x, y, seed):
        rng = np.random.default_rng(seed)
        f = CoefficientSequence(rng.normal(size=12), normalized=False)
        g = CoefficientSequence(rng.normal(size=12), normalized=False)
        cp = CesaroParams(2.3, 0.8, 10)
        lhs = cesaro_mean(CoefficientSequence(x * f.coeffs + y * g.coeffs, normalized=False), cp).coeffs
        rhs = x * cesaro_mean(f, cp).coeffs + y * cesaro_mean(g, cp).coeffs
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)

    def test_polynomial_is_mean_of_half_plane(self):
        cp = CesaroParams(4.0, 1.5, 7)
        assert cesaro_polynomial(cp) == cesaro_mean(CoefficientSequence(np.ones(9)), cp)


class TestClassical:
    def test_delta_zero(self):
        f = seq(np.random.default_rng(3), 9)
        assert classical_cesaro(f, 0.0, 9) == f

    def test_delta_one(self):
        assert classical_cesaro(CoefficientSequence(np.ones(3)), 1.0, 3).tolist() == pytest.approx([1, 2 / 3, 1 / 3])

    def test_dual_formula(self):
        f = seq(np.random.default_rng(4), 6)
        a = classical_cesaro(f, 2.5, 6).coeffs
        b = classical_cesaro_factorial(f, 2.5, 6).coeffs
        assert np.allclose(a, b, rtol=1e-13, atol=0)

    @settings(max_examples=50)
    @given(st.floats(-0.9, 5), st.integers(2, 200), st.integers(0, 2**32 - 1))
    def test_dual_formula_random(self, delta, n, seed):
        f = seq(np.random.default_rng(seed), n)
        a = classical_cesaro(f, delta, n).coeffs
        b = classical_cesaro_factorial(f, delta, n).coeffs
        assert np.allclose(a, b, rtol=1e-13, atol=0)

    def test_domain(self):
        with pytest.raises(DomainError):
            classical_cesaro_factorial(CoefficientSequence([1.0, 1.0]), -1.0, 2)
