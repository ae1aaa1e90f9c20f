"""Named coefficient sequences and seeded random input builders.

The random builders construct inputs that satisfy a criterion by walking the
coefficients forward: every condition bounds the next coefficient from above
given the earlier ones, and the builder takes that bound times a random slack
in (0, 1] (exactly 1 with some probability, to exercise equality cases).
"""

from __future__ import annotations

import numpy as np

from .cesaro import CesaroParams
from .criteria import ParameterSet
from .errors import DomainError
from .series import STARLIKE_CATALOG, CoefficientSequence, catalog_entry
from .trig import vietoris_weight

__all__ = [
    "GENERATORS",
    "generate",
    "inverse_square",
    "inverse_cube",
    "log_series",
    "vietoris_sequence",
    "random_chain",
    "random_polynomial",
    "random_weight_params",
    "random_cesaro_params",
    "random_cesaro_weights",
    "build_cesaro_input",
    "build_starlike_input",
    "CESARO_THEOREMS",
]


def inverse_square(n: int) -> CoefficientSequence:
    """a_1 = 1, a_2 = 1/2, a_k = 1/k^2 for k >= 3."""
    return CoefficientSequence([1.0, 0.5][:n] + [1 / k**2 for k in range(3, n + 1)])


def inverse_cube(n: int) -> CoefficientSequence:
    """a_1 = 1, a_2 = 1/4, a_k = 1/k^3 for k >= 3."""
    return CoefficientSequence([1.0, 0.25][:n] + [1 / k**3 for k in range(3, n + 1)])


def log_series(n: int) -> CoefficientSequence:
    """a_k = 1/k, the coefficients of -log(1-z)."""
    return CoefficientSequence([1 / k for k in range(1, n + 1)])


def vietoris_sequence(n: int, alpha=0.0, beta=0.0, lam=1.0, mu=0.0) -> CoefficientSequence:
    """a_1 = 1, a_k = 1/w_k: the extremal chain with every link an equality."""
    w = [vietoris_weight(k, alpha, beta, lam, mu) for k in range(2, n + 1)]
    return CoefficientSequence([1.0] + [1 / x for x in w])


GENERATORS = {
    "inverse-square": inverse_square,
    "inverse-cube": inverse_cube,
    "log-series": log_series,
    "vietoris": vietoris_sequence,
}


def generate(name: str, n: int, p: ParameterSet | None = None) -> CoefficientSequence:
    """Look up a named generator or a starlike catalog function."""
    if n < 1:
        raise DomainError("truncation degree must be positive")
    if name == "vietoris":
        p = p or ParameterSet()
        return vietoris_sequence(n, p.alpha, p.beta, p.lam, p.mu)
    if name in GENERATORS:
        return GENERATORS[name](n)
    try:
        return catalog_entry(name).coefficients(n)
    except KeyError:
        raise DomainError(
            f"unknown generator {name!r}; choose from {sorted(GENERATORS) + sorted(STARLIKE_CATALOG)}"
        ) from None


# -- random inputs -------------------------------------------------------------


def _slack(rng, p_equal=0.2) -> float:
    return 1.0 if rng.random() < p_equal else float(rng.uniform(0.05, 1.0))


def random_weight_params(rng, shift: float | None = None, max_sum: float = 2.0) -> ParameterSet:
    """alpha, beta, lambda, mu with 1 <= lambda+mu < max_sum.

    ``shift`` caps alpha <= 6/(lambda+shift) and beta likewise; ``None``
    samples alpha, beta from [0, 2].
    """
    s = float(rng.uniform(1.0, max_sum))
    u = rng.random()
    lam = s if u < 0.15 else 0.0 if u < 0.3 else float(rng.uniform(0, s))
    mu = s - lam
    if shift is None:
        al, be = rng.uniform(0, 2, size=2)
    else:
        al = rng.uniform(0, 6 / (lam + shift))
        be = rng.uniform(0, 6 / (mu + shift))
    return ParameterSet(float(al), float(be), lam, mu)


def random_chain(rng, n_max: int = 60):
    """A positive sequence satisfying the weighted chain, with parameters.

    Returns (a0, [a_1..a_n], ParameterSet).
    """
    n = int(rng.integers(2, n_max + 1))
    p = random_weight_params(rng)
    a0 = 2.0 if rng.random() < 0.5 else float(2.0 + rng.exponential(1.0))
    a = [a0 / 2 * _slack(rng, 0.3)]
    prev = a[0]
    for k in range(2, n + 1):
        w = vietoris_weight(k, p.alpha, p.beta, p.lam, p.mu)
        cur = prev * _slack(rng, 0.3)
        a.append(cur / w)
        prev = cur
    return a0, a, p


def random_polynomial(rng, n_max: int = 64) -> CoefficientSequence:
    """Normalized polynomial with positive, loosely decaying coefficients."""
    n = int(rng.integers(2, n_max + 1))
    k = np.arange(2, n + 1)
    tail = rng.uniform(0.1, 1.0, size=k.size) / k ** rng.uniform(1.0, 3.0)
    return CoefficientSequence(np.concatenate([[1.0], tail]))


def random_cesaro_params(rng, n_min: int = 3, n_max: int = 50) -> CesaroParams:
    n = int(rng.integers(n_min, n_max + 1))
    c = float(rng.uniform(0.1, 3.0))
    b = c + float(rng.exponential(5.0))
    return CesaroParams(b, c, n)


def random_cesaro_weights(rng, proof_ranges: bool = False, max_sum: float = 2.0) -> ParameterSet:
    return random_weight_params(rng, shift=2.0 if proof_ranges else 4.0, max_sum=max_sum)


def _ctc_next(k, a_k, cp, p):
    b, c, n = cp.b, cp.c, cp.n
    num = (k - 1 + p.alpha - p.lam) * (k - 1 + p.beta - p.mu) * (b + n - k - 1) * k * a_k
    return num / ((k - 1 + p.alpha) * (k - 1 + p.beta) * (c + n - k - 1) * (k + 1))


def build_cesaro_input(theorem: str, cp: CesaroParams, p: ParameterSet, rng, free_link: bool = False):
    """Coefficients a_1..a_n meeting every condition of a Cesaro theorem.

    theorem is '3.1', '3.3', '3.4' or '3.7'. For '3.1'/'3.3' the link k = n-2,
    which the statement omits, is also enforced unless ``free_link`` is set,
    in which case a_{n-1} is drawn freely.
    """
    b, c, n = cp.b, cp.c, cp.n
    al, be, lam, mu = p.alpha, p.beta, p.lam, p.mu
    s = lam + mu
    a = np.zeros(n + 1)
    a[1] = 1.0
    if theorem in ("3.1", "3.3"):
        a[2] = _slack(rng) * (b + n - 2) / (2 * (c + n - 2))
        a[3] = _slack(rng) * (2 - al * lam) * (2 - be * mu) * (b + n - 3) * a[2] / (2 ** (s + 1) * (c + n - 3) * 3)
        for k in range(3, n - 1):
            if k == n - 2 and free_link:
                a[k + 1] = a[k] * float(rng.uniform(0.1, 3.0))
            else:
                a[k + 1] = _slack(rng) * _ctc_next(k, a[k], cp, p)
        tail = (n - 2 + al - lam) * (n - 2 + be - mu) * (1 + b - c) * (n - 1) * a[n - 1]
        bound = tail / ((n - 2 + al) * (n - 2 + be) * c * n)
    elif theorem == "3.4":
        a[2] = _slack(rng) * (3 - 2 * s) * (b + n - 2) / ((5 - 2 * s) * (c + n - 2))
        a[3] = (
            _slack(rng)
            * (2 - al * lam) * (2 - be * mu) * (5 - 2 * s) * (b + n - 3) * a[2]
            / (2 ** (s + 2) * (7 - 2 * s) * (c + n - 3))
        )
        for k in range(3, n - 1):
            num = (2 * k + 1 - 2 * s) * (k - 1 + al - lam) * (k - 1 + be - mu) * (b + n - k - 1) * a[k]
            den = (2 * k + 3 - 2 * s) * (k - 1 + al) * (k - 1 + be) * (c + n - k - 1)
            a[k + 1] = _slack(rng) * num / den
        num = (n - 2 + al - lam) * (n - 2 + be - mu) * (2 * n + 1 - 2 * s) * (1 + b - c) * a[n - 1]
        bound = num / ((n - 2 + al) * (n - 2 + be) * (2 * n + 3 - 2 * s) * c)
    elif theorem == "3.7":
        a[2] = _slack(rng) * (2 - al * lam) * (2 - be * mu) * (b + n - 2) / ((c + n - 2) * 2 ** (s + 3))
        for k in range(2, n - 1):
            num = k * (k + al - lam) * (k + be - mu) * (b + n - k - 1) * a[k]
            a[k + 1] = _slack(rng) * num / ((k + al) * (k + be) * (c + n - k - 1) * (k + 1))
        num = (n - 1 + al - lam) * (n - 1 + be - mu) * (1 + b - c) * (n - 1) * a[n - 1]
        bound = num / (c * (n - 1 + al) * (n - 1 + be) * n)
    else:
        raise DomainError(f"no input builder for theorem {theorem!r}")
    # the last condition bounds a_n, which for n = 3 was already set above
    a[n] = min(a[n], _slack(rng) * bound) if a[n] > 0 else _slack(rng) * bound
    return CoefficientSequence(a[1:])


CESARO_THEOREMS = ("3.1", "3.3", "3.4", "3.5", "3.7")


def build_starlike_input(p: ParameterSet, n: int, rng, equality: bool = False) -> CoefficientSequence:
    """A positive sequence meeting the partial-sum starlikeness conditions of
    order p.gamma; with ``equality`` every condition is tight."""
    g = p.gamma
    s = (lambda: 1.0) if equality else (lambda: _slack(rng))
    a = [1.0, s() * (1 - g) / (2 - g)]
    if n >= 3:
        w2 = vietoris_weight(2, p.alpha, p.beta, p.lam, p.mu)
        a.append(s() * (2 - g) * a[1] / ((3 - g) * w2))
    for k in range(2, n - 1):
        shrink = (1 + 1 / (k + p.alpha)) ** -p.lam * (1 + 1 / (k + p.beta)) ** -p.mu
        a.append(s() * shrink * (k + 1 - g) * a[k] / (k + 2 - g))
    return CoefficientSequence(a[:n])
