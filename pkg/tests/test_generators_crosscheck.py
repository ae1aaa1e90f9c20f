import numpy as np
import pytest

from gfcheck import criteria as C
from gfcheck.cesaro import CesaroParams
from gfcheck.crosscheck import cross_verify, run_predicate, soundness_run, verdict
from gfcheck.errors import DomainError
from gfcheck.generators import (
    build_cesaro_input,
    generate,
    inverse_cube,
    inverse_square,
    log_series,
    random_chain,
    random_polynomial,
    vietoris_sequence,
)
from gfcheck.trig import vietoris_weight


class TestNamed:
    def test_values(self):
        assert inverse_square(4).tolist() == [1, 0.5, 1 / 9, 1 / 16]
        assert inverse_cube(3).tolist() == [1, 0.25, 1 / 27]
        assert log_series(3).tolist() == [1, 0.5, 1 / 3]
        assert inverse_square(1).tolist() == [1.0]

    def test_vietoris_is_chain_equality(self):
        p = C.ParameterSet(1, 1, 0.5, 0.5)
        a = vietoris_sequence(10, 1, 1, 0.5, 0.5)
        assert a.a(5) * vietoris_weight(5, 1, 1, 0.5, 0.5) == pytest.approx(1.0)
        assert generate("vietoris", 10, p) == a

    def test_catalog_and_unknown(self):
        assert generate("koebe", 4).tolist() == [1, 2, 3, 4]
        with pytest.raises(DomainError):
            generate("nope", 4)
        with pytest.raises(DomainError):
            generate("koebe", 0)


class TestRandom:
    def test_seeded(self):
        a = random_polynomial(np.random.default_rng(5))
        b = random_polynomial(np.random.default_rng(5))
        assert a == b

    def test_chain_monotone(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            a0, a, p = random_chain(rng)
            w = [1.0] + [vietoris_weight(k, p.alpha, p.beta, p.lam, p.mu) for k in range(2, len(a) + 1)]
            prods = [wk * ak for wk, ak in zip(w, a)]
            assert prods[0] <= a0 / 2 * (1 + 1e-12)
            assert all(y <= x * (1 + 1e-12) for x, y in zip(prods, prods[1:]))

    def test_unknown_builder(self):
        with pytest.raises(DomainError):
            build_cesaro_input("2.2", CesaroParams(2, 1, 5), C.ParameterSet(), np.random.default_rng(0))


class TestCrossVerify:
    def test_unknown_theorem(self):
        with pytest.raises(DomainError):
            run_predicate("4.1", inverse_square(5), None, C.ParameterSet())

    def test_cesaro_needs_params(self):
        with pytest.raises(DomainError):
            run_predicate("3.1", inverse_square(5), None, C.ParameterSet())

    def test_verdicts(self):
        p = C.ParameterSet()
        f = inverse_cube(6)
        r = run_predicate("2.4", f, None, p)
        checks = cross_verify("2.4", r, f, None, p)
        assert verdict(r, checks) == "theorem-consistent"
        r = run_predicate("2.4", [1.0, 0.5], None, p)
        assert verdict(r, []) == "n/a"

    @pytest.mark.parametrize("thm", ["3.1", "3.3", "3.4", "3.5", "3.7"])
    def test_soundness_small(self, thm):
        run = soundness_run(thm, seed=11, count=25)
        assert run.satisfied == 25 and run.passed, run.inconsistent[:1]
        assert run.min_margin > 0

    def test_missing_link_always_flagged(self):
        run = soundness_run("3.1", seed=1, count=150, free_link=True, n_range=(5, 5))
        assert run.inconsistent
        assert not any(case["extras_ok"] for case in run.inconsistent)

    def test_proof_ranges_sampling(self):
        run = soundness_run("3.1", seed=2, count=50, proof_ranges=True)
        assert run.passed
