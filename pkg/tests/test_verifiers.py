import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfcheck.errors import DomainError, GridTooCoarseError
from gfcheck.generators import inverse_cube, inverse_square, log_series
from gfcheck.series import CoefficientSequence, alexander, catalog_entry, evaluate
from gfcheck.verifiers import (
    DiskGrid,
    functional_values,
    verify_close_to_convex,
    verify_convex,
    verify_prestarlike,
    verify_R_gamma,
    verify_starlike,
    verify_typically_real,
)

positive_polys = st.lists(st.floats(0.01, 1.0), min_size=1, max_size=24).map(
    lambda tail: CoefficientSequence([1.0] + tail)
)


class TestGrid:
    def test_defaults(self):
        g = DiskGrid()
        assert g.radii == (0.5, 0.9, 0.99, 0.999)
        assert g.angle_count(10) == 1024 and g.angle_count(200) == 1600

    def test_radius_domain(self):
        with pytest.raises(DomainError):
            DiskGrid((0.5, 1.0))

    def test_too_coarse(self):
        with pytest.raises(GridTooCoarseError):
            DiskGrid(angles=100).points(20)

    def test_conjugate_symmetry(self):
        z = DiskGrid(angles=64).points(4)[0]
        assert np.array_equal(z[1:32], np.conj(z[33:][::-1]))
        assert z[0] == 0.5 and z[32] == -0.5

    def test_to_dict(self):
        assert DiskGrid((0.5,)).to_dict(10) == {"radii": [0.5], "angles": 1024}


class TestStarlike:
    def test_identity(self):
        r = verify_starlike([1.0], 0.9)
        assert r.holds and r.margin == pytest.approx(0.1)

    def test_inverse_square_holds(self):
        assert verify_starlike(inverse_square(200)).holds

    def test_quadratic_fails_with_closed_form(self):
        r = verify_starlike([1.0, 1.0], grid=DiskGrid((0.9,)))
        assert not r.holds
        assert r.witness == pytest.approx(-0.9)
        assert r.margin == pytest.approx((1 - 1.8) / (1 - 0.9))

    def test_zero_of_f_disqualifies(self):
        # z + 4z^2 vanishes at z = -1/4
        r = verify_starlike([1.0, 4.0], grid=DiskGrid((0.25,), 16), tol=1e-9)
        assert r.zero_witness and not r.holds and r.margin == -math.inf
        assert r.to_dict()["margin"] is None

    def test_serialization(self):
        d = verify_starlike([1.0]).to_dict()
        assert set(d) >= {"class", "gamma", "holds", "margin", "witness", "grid", "tolerance"}
        assert d["witness"] == {"re": 0.5, "im": 0.0}

    @settings(max_examples=25)
    @given(positive_polys)
    def test_reflection_symmetry(self, f):
        z = DiskGrid(angles=max(64, 8 * f.degree)).points(f.degree)
        v = functional_values(f, z, "starlike")
        m = z.shape[1]
        assert np.array_equal(v[:, 1 : m // 2], v[:, m // 2 + 1 :][:, ::-1])


class TestConvex:
    def test_identity(self):
        r = verify_convex([1.0])
        assert r.holds and r.margin == pytest.approx(1.0)

    def test_inverse_cube_holds(self):
        assert verify_convex(inverse_cube(200)).holds

    def test_truncated_koebe_fails(self):
        r = verify_convex(list(range(1, 11)))
        # the grid oracle puts the worst point on the negative real axis
        assert not r.holds and r.margin < -1 and r.witness.real < 0 and r.witness.imag == 0

    @settings(max_examples=30)
    @given(positive_polys, st.sampled_from([0.0, 0.3, 0.7]))
    def test_alexander_duality_pointwise(self, f, g):
        z = DiskGrid().points(f.degree)
        a = functional_values(f, z, "convex")
        b = functional_values(alexander(f), z, "starlike")
        finite = np.isfinite(a) & np.isfinite(b)
        assert np.allclose(a[finite], b[finite], rtol=1e-12, atol=1e-12)
        rc, rs = verify_convex(f, g), verify_starlike(alexander(f), g)
        assert rc.witness == rs.witness


class TestCloseToConvex:
    def test_identity(self):
        r = verify_close_to_convex([1.0], g="z")
        assert r.holds and r.margin == pytest.approx(1.0)

    def test_inverse_square_wrt_half_plane(self):
        assert verify_close_to_convex(inverse_square(200), "z/(1-z)").holds

    def test_inverse_squares_wrt_odd(self):
        f = CoefficientSequence([1.0] + [1 / k**2 for k in range(2, 201)])
        assert verify_close_to_convex(f, "z/(1-z^2)").holds

    def test_eta_domain(self):
        with pytest.raises(DomainError):
            verify_close_to_convex([1.0], eta=math.pi / 2)

    @settings(max_examples=20)
    @given(positive_polys, st.floats(0, 0.99))
    def test_g_is_z_matches_r_gamma(self, f, g):
        a = verify_close_to_convex(f, "z", mu_order=g)
        b = verify_R_gamma(f, g)
        assert a.margin == pytest.approx(b.margin, abs=1e-12)

    def test_catalog_and_polynomial_g_agree(self):
        f = inverse_square(50)
        entry = catalog_entry("z/(1-z^2)")
        grid = DiskGrid((0.5, 0.9))
        a = verify_close_to_convex(f, entry, grid=grid)
        b = verify_close_to_convex(f, entry.coefficients(400), grid=grid)
        assert a.margin == pytest.approx(b.margin, abs=1e-9)


class TestTypicallyReal:
    def test_identity(self):
        assert verify_typically_real([1.0]).holds

    def test_log_partial_sum(self):
        assert verify_typically_real(log_series(20)).holds

    def test_geometric_fails_against_dense_oracle(self):
        f = [1.0, 1.0, 1.0]
        r = verify_typically_real(f, grid=DiskGrid((0.99,)))
        t = np.linspace(1e-4, math.pi - 1e-4, 200_001)
        oracle = np.min(evaluate(f, 0.99 * np.exp(1j * t)).imag)
        assert not r.holds
        assert r.margin == pytest.approx(oracle, abs=1e-4)  # 1024-angle grid
        assert np.angle(r.witness) == pytest.approx(t[np.argmin(evaluate(f, 0.99 * np.exp(1j * t)).imag)], abs=1e-2)


class TestPrestarlike:
    def test_identity(self):
        assert verify_prestarlike([1.0], 0.3).holds

    def test_half_is_starlike_half(self):
        f = inverse_square(30)
        a, b = verify_prestarlike(f, 0.5), verify_starlike(f, 0.5)
        assert a.margin == b.margin and a.witness == b.witness and a.class_name == "prestarlike"

    def test_zero_is_starlike_of_alexander(self):
        f = inverse_cube(40)
        assert verify_prestarlike(f, 0.0).margin == verify_starlike(alexander(f), 0.0).margin


class TestRGamma:
    def test_identity(self):
        assert verify_R_gamma([1.0], 0.99).margin == pytest.approx(0.01)

    def test_linear(self):
        r = verify_R_gamma([1.0, 0.5])
        assert r.holds and r.margin == pytest.approx(0.001) and r.witness == pytest.approx(-0.999)

    def test_fails(self):
        r = verify_R_gamma([1.0, 1.0])
        assert not r.holds and r.witness == pytest.approx(-0.999)

    def test_order_domain(self):
        with pytest.raises(DomainError):
            verify_R_gamma([1.0], 1.0)
