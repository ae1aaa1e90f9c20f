import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfcheck.errors import DomainError, PoleError
from gfcheck.generators import inverse_square
from gfcheck.series import (
    STARLIKE_CATALOG,
    CoefficientSequence,
    alexander,
    catalog_entry,
    derivative,
    evaluate,
    hadamard,
    horner,
    integrate,
    parse_coefficients,
    pochhammer,
    pochhammer_ratio,
    prestar_kernel,
    read_coefficients,
    standard_starlike,
)

# subnormals lose relative precision under division, which no test here is about
coeff_lists = st.lists(st.floats(-10, 10, allow_nan=False, allow_subnormal=False), min_size=1, max_size=40)


class TestCoefficientSequence:
    def test_normalization_enforced(self):
        with pytest.raises(DomainError):
            CoefficientSequence([2.0, 1.0])
        assert CoefficientSequence([2.0, 1.0], normalized=False).degree == 2

    def test_rejects_empty_and_nonfinite(self):
        with pytest.raises(DomainError):
            CoefficientSequence([])
        with pytest.raises(DomainError):
            CoefficientSequence([1.0, math.nan])

    def test_immutable(self):
        f = CoefficientSequence([1.0, 2.0])
        with pytest.raises(ValueError):
            f.coeffs[0] = 3.0

    def test_indexing_is_one_based(self):
        f = CoefficientSequence([1.0, 0.5, 0.25])
        assert f.a(1) == 1.0 and f.a(3) == 0.25 and f.a(7) == 0.0
        with pytest.raises(IndexError):
            f.a(0)

    def test_equality_and_hash(self):
        a, b = CoefficientSequence([1, 2]), CoefficientSequence([1.0, 2.0])
        assert a == b and hash(a) == hash(b)
        assert a != CoefficientSequence([1, 3])


class TestPochhammer:
    @pytest.mark.parametrize("x,k,want", [(5.0, 0, 1.0), (2.0, 3, 24.0), (0.5, 2, 0.75)])
    def test_values(self, x, k, want):
        assert pochhammer(x, k) == want

    def test_overflow_reported(self):
        with pytest.raises(OverflowError):
            pochhammer(10.0, 400)

    @pytest.mark.parametrize("x,y,k,want", [(2, 1, 4, 5.0), (3, 3, 7, 1.0)])
    def test_ratio(self, x, y, k, want):
        assert pochhammer_ratio(x, y, k) == want

    def test_ratio_half_integers(self):
        # (1.5 * 2.5) / (0.5 * 1.5) = 3.75 / 0.75
        assert pochhammer_ratio(1.5, 0.5, 2) == pytest.approx(5.0, rel=1e-15)

    def test_ratio_pole(self):
        with pytest.raises(PoleError):
            pochhammer_ratio(1.0, -2.0, 4)

    def test_ratio_large_k_no_overflow(self):
        assert math.isfinite(pochhammer_ratio(3.5, 3.0, 10_000))

    @given(st.floats(0.1, 50), st.integers(0, 200))
    def test_ratio_identity(self, x, k):
        assert pochhammer_ratio(x, x, k) == 1.0


class TestEvaluation:
    def test_examples(self):
        assert evaluate([1.0], 0.5) == 0.5
        assert evaluate([1.0, 1.0], 0.5j) == pytest.approx(-0.25 + 0.5j)

    def test_inverse_square_against_naive_sum(self):
        f = inverse_square(200)
        naive = sum(f.a(k) * 0.9**k for k in range(1, 201))
        assert evaluate(f, 0.9) == pytest.approx(naive, rel=1e-12)

    @settings(max_examples=50)
    @given(st.integers(1, 512), st.floats(0, 0.999), st.floats(0, 2 * math.pi), st.integers(0, 2**32 - 1))
    def test_horner_matches_naive(self, n, r, t, seed):
        c = np.random.default_rng(seed).uniform(0.1, 1, n)
        z = r * np.exp(1j * t)
        naive = sum(c[k] * z**k for k in range(n))
        # positive coefficients on |z| < 1 keep the sum away from cancellation
        assert abs(horner(c, z) - naive) <= 1e-12 * sum(c[k] * r**k for k in range(n))


class TestCalculus:
    def test_derivative_examples(self):
        assert derivative([1.0]).tolist() == [1.0]
        assert derivative([1.0, 1 / 2, 1 / 3]) == pytest.approx([1, 1, 1])
        assert derivative([1.0, 0.25]).tolist() == [1.0, 0.5]

    @given(coeff_lists)
    def test_integrate_inverts_derivative(self, c):
        d = np.array(c)
        assert np.allclose(derivative(integrate(d)), d, rtol=1e-15, atol=0)

    def test_alexander(self):
        assert alexander([1.0, 0.5, 1 / 3]).tolist() == pytest.approx([1, 1, 1])


class TestHadamard:
    def test_identity(self):
        f = CoefficientSequence([1, 0.3, 0.2])
        assert hadamard(f, np.ones(3)) == f

    def test_example(self):
        assert hadamard([1, 2, 3], [1, 1 / 2, 1 / 3]).tolist() == pytest.approx([1, 1, 1])

    def test_truncates_to_shorter(self):
        assert hadamard([1, 2, 3], [1, 1]).degree == 2

    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_commutative_associative(self, a, b, c):
        A, B, Cc = (CoefficientSequence(x, normalized=False) for x in (a, b, c))
        assert hadamard(A, B) == hadamard(B, A)
        n = min(len(a), len(b), len(c))
        lhs = hadamard(hadamard(A, B), Cc).coeffs
        rhs = hadamard(A, hadamard(B, Cc)).coeffs
        # floating multiplication is commutative but not associative
        assert np.allclose(lhs, rhs, rtol=1e-15, atol=0) and len(lhs) == n


class TestPrestarKernel:
    def test_half_is_identity(self):
        assert np.all(prestar_kernel(0.5, 20).coeffs == 1.0)

    def test_zero_is_koebe(self):
        assert prestar_kernel(0.0, 10).tolist() == list(range(1, 11))

    def test_quarter(self):
        assert prestar_kernel(0.25, 3).a(3) == pytest.approx(1.875)

    def test_domain(self):
        with pytest.raises(DomainError):
            prestar_kernel(1.0, 3)

    @given(st.lists(st.floats(0.01, 5), min_size=0, max_size=30))
    def test_zero_kernel_is_alexander(self, tail):
        f = CoefficientSequence([1.0] + tail)
        assert hadamard(f, prestar_kernel(0.0, f.degree)) == alexander(f)


class TestCatalog:
    def test_nine_entries(self):
        assert len(STARLIKE_CATALOG) == 9

    @pytest.mark.parametrize(
        "name,n,want",
        [
            ("z/(1-z^2)", 5, [1, 0, 1, 0, 1]),
            ("z/(1-z)^2", 4, [1, 2, 3, 4]),
            ("z/(1-z+z^2)", 7, [1, 1, 0, -1, -1, 0, 1]),
            ("z/(1+z+z^2)", 6, [1, -1, 0, 1, -1, 0]),
            ("z/(1+z)^2", 4, [1, -2, 3, -4]),
        ],
    )
    def test_coefficients(self, name, n, want):
        assert standard_starlike(name, n).tolist() == want

    @pytest.mark.parametrize("name", sorted(STARLIKE_CATALOG))
    def test_rule_matches_closed_form(self, name):
        entry = catalog_entry(name)
        z = 0.4 * np.exp(1j * np.linspace(0, 2 * np.pi, 17))
        assert np.allclose(evaluate(entry.coefficients(80), z), entry(z), rtol=1e-13, atol=1e-15)

    @pytest.mark.parametrize("name", sorted(STARLIKE_CATALOG))
    def test_rule_satisfies_denominator_recurrence(self, name):
        # D(z) g(z) = z coefficientwise
        entry = catalog_entry(name)
        c = [0] + entry.coefficients(30).tolist()
        d = entry.denominator
        for m in range(1, 31):
            s = sum(d[j] * c[m - j] for j in range(len(d)) if m - j >= 0)
            assert s == (1 if m == 1 else 0)

    def test_aliases_and_unknown(self):
        assert catalog_entry("koebe").name == "z/(1-z)^2"
        with pytest.raises(KeyError):
            catalog_entry("z/(1-z)^3")


class TestIO:
    def test_json(self):
        assert parse_coefficients("[1, 0.5, 0.25]").tolist() == [1, 0.5, 0.25]

    def test_csv_with_header(self, tmp_path):
        path = tmp_path / "a.csv"
        path.write_text("k,a_k\n1,1\n2,0.5\n")
        assert read_coefficients(path).tolist() == [1, 0.5]

    def test_csv_plain(self):
        assert parse_coefficients("1\n0.5\n\n").tolist() == [1, 0.5]

    def test_bad_row(self):
        with pytest.raises(DomainError):
            parse_coefficients("1\nabc\n")

    def test_roundtrip(self):
        f = inverse_square(12)
        assert parse_coefficients(json.dumps(f.tolist())) == f
