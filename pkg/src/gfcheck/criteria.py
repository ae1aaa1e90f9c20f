"""Coefficient conditions that imply starlikeness, convexity,
close-to-convexity or prestarlikeness.

Every predicate evaluates each inequality separately and returns a
:class:`CriterionReport`; nothing here samples the disk. Inequalities are
stored as ``lhs <= rhs`` (">=" forms are flipped) and accepted
within a tolerance, because the classical examples satisfy them with equality.

Theorem ids used in reports:

    2.2  partial sums starlike of order gamma
    2.4  close-to-convex w.r.t. z/(1-z^2)
    2.5  prestarlike of order gamma
    2.7  convex (2.5 at gamma = 0)
    3.1  Cesaro mean close-to-convex w.r.t. z and z/(1-z), and starlike
    3.3  Cesaro mean in R(gamma)
    3.4  Cesaro mean starlike of order lambda+mu-1/2
    3.5  Cesaro polynomial prestarlike of order gamma
    3.7  Cesaro mean close-to-convex w.r.t. z/(1-z^2)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .cesaro import CesaroParams
from .errors import DomainError
from .series import CoefficientSequence
from .trig import vietoris_weight

__all__ = [
    "ParameterSet",
    "Condition",
    "CriterionReport",
    "leq",
    "thm_starlike",
    "thm_ctc",
    "thm_prestarlike",
    "cor_convex",
    "cesaro_ctc",
    "cesaro_r_gamma_bound",
    "cesaro_r_gamma",
    "cesaro_starlike_half",
    "cesaro_prestarlike",
    "cesaro_ctc_odd",
    "example_delta_bound",
    "THEOREMS",
]

RTOL = 1e-12


def leq(lhs: float, rhs: float) -> bool:
    """lhs <= rhs up to RTOL*|rhs|.

    Purely relative: an absolute floor would accept arbitrary violations once
    the coefficients fall below it, and would make conditions that differ by a
    positive factor disagree.
    """
    return lhs <= rhs + RTOL * abs(rhs)


@dataclass(frozen=True)
class ParameterSet:
    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 1.0
    mu: float = 0.0
    gamma: float = 0.0

    def check(self, with_gamma: bool = True) -> "ParameterSet":
        if min(self.alpha, self.beta, self.lam, self.mu) < 0:
            raise DomainError("alpha, beta, lambda, mu must be nonnegative")
        if self.lam + self.mu < 1:
            raise DomainError(f"lambda + mu must be >= 1, got {self.lam + self.mu}")
        if with_gamma and not 0 <= self.gamma < 1:
            raise DomainError(f"gamma must lie in [0, 1), got {self.gamma}")
        return self

    def check_cesaro(self, proof_ranges: bool = False, with_gamma: bool = False) -> "ParameterSet":
        """The extra hypotheses of the Cesaro-mean theorems.

        The stated ranges are alpha <= 6/(lambda+4), beta <= 6/(mu+4);
        ``proof_ranges`` accepts the looser 6/(lambda+2), 6/(mu+2).
        """
        self.check(with_gamma)
        s = self.lam + self.mu
        if not 1 <= s < 2:
            raise DomainError(f"need 1 <= lambda + mu < 2, got {s}")
        shift = 2 if proof_ranges else 4
        if self.alpha > 6 / (self.lam + shift) or self.beta > 6 / (self.mu + shift):
            raise DomainError(
                f"need alpha <= 6/(lambda+{shift}) and beta <= 6/(mu+{shift}), "
                f"got alpha={self.alpha}, beta={self.beta}"
            )
        return self

    def w(self, k: int) -> float:
        return vietoris_weight(k, self.alpha, self.beta, self.lam, self.mu)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Condition:
    label: str
    k: int | None
    lhs: float | None
    rhs: float | None
    ok: bool
    vacuous: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _cond(label, lhs, rhs, k=None) -> Condition:
    return Condition(label, k, float(lhs), float(rhs), leq(lhs, rhs))


def _vacuous(label, k=None) -> Condition:
    return Condition(label, k, None, None, True, vacuous=True)


@dataclass
class CriterionReport:
    theorem: str
    params: dict
    conditions: list[Condition]
    predicted_class: str
    gating: list[Condition] = field(default_factory=list)
    extras: list[Condition] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_satisfied(self) -> bool:
        # extras are diagnostics only and never gate the verdict
        return all(c.ok for c in self.gating + self.conditions)

    @property
    def first_failure(self) -> Condition | None:
        for c in self.gating + self.conditions:
            if not c.ok:
                return c
        return None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "gating": [c.to_dict() for c in self.gating],
            "conditions": [c.to_dict() for c in self.conditions],
            "extras": [c.to_dict() for c in self.extras],
            "all_satisfied": self.all_satisfied,
            "predicted_class": self.predicted_class,
            "notes": list(self.notes),
        }


def _coeffs(a) -> CoefficientSequence:
    if not isinstance(a, CoefficientSequence):
        a = CoefficientSequence(a)
    if a.coeffs[0] != 1.0:
        raise DomainError("the theorems assume a_1 = 1")
    if not a.is_positive():
        raise DomainError("the theorems assume positive coefficients")
    return a


# -- analytic function itself --------------------------------------------------


def thm_starlike(a, p: ParameterSet) -> CriterionReport:
    """Partial sums z + a_2 z^2 + ... starlike of order gamma when

    (1) (2-g) a_2 <= (1-g) a_1
    (2) (3-g) a_3 <= (2-g) a_2 / w_2
    (3) (k+2-g) a_{k+2} <= (1+1/(k+alpha))^-lam (1+1/(k+beta))^-mu (k+1-g) a_{k+1}, k >= 2
    """
    a = _coeffs(a)
    p.check()
    g, N, A = p.gamma, a.degree, a.a
    conds = []
    conds.append(_cond("(1)", (2 - g) * A(2), (1 - g) * A(1)) if N >= 2 else _vacuous("(1)"))
    conds.append(_cond("(2)", (3 - g) * A(3), (2 - g) * A(2) / p.w(2)) if N >= 3 else _vacuous("(2)"))
    if N >= 4:
        for k in range(2, N - 1):
            shrink = (1 + 1 / (k + p.alpha)) ** -p.lam * (1 + 1 / (k + p.beta)) ** -p.mu
            conds.append(_cond("(3)", (k + 2 - g) * A(k + 2), shrink * (k + 1 - g) * A(k + 1), k))
    else:
        conds.append(_vacuous("(3)"))
    return CriterionReport("2.2", p.to_dict(), conds, f"starlike of order {g}")


def thm_ctc(a, p: ParameterSet) -> CriterionReport:
    """Weighted chain on k a_k:  w_{k+1}(k+1)a_{k+1} <= w_k k a_k <= ... <= w_2 2a_2 <= 1."""
    a = _coeffs(a)
    p.check(with_gamma=False)
    N, A = a.degree, a.a
    if N < 2:
        return CriterionReport("2.4", p.to_dict(), [_vacuous("chain")], "close-to-convex w.r.t. z/(1-z^2)")
    conds = [_cond("chain", p.w(2) * 2 * A(2), 1.0, 2)]
    for k in range(3, N + 1):
        conds.append(_cond("chain", p.w(k) * k * A(k), p.w(k - 1) * (k - 1) * A(k - 1), k))
    return CriterionReport("2.4", p.to_dict(), conds, "close-to-convex w.r.t. z/(1-z^2)")


def thm_prestarlike(a, p: ParameterSet) -> CriterionReport:
    """Prestarlike of order gamma when

    (1) w_2 (3-g)(3-2g) a_3 <= 2(2-g) a_2 <= a_1
    (2) w_{k+1}(k+2-g)(k+2-2g) a_{k+2} <= w_k (k+1-g)(k+1) a_{k+1}, k >= 2
    """
    a = _coeffs(a)
    p.check()
    g, N, A = p.gamma, a.degree, a.a
    conds = []
    if N >= 3:
        conds.append(_cond("(1) left", p.w(2) * (3 - g) * (3 - 2 * g) * A(3), 2 * (2 - g) * A(2)))
    else:
        conds.append(_vacuous("(1) left"))
    conds.append(_cond("(1) right", 2 * (2 - g) * A(2), A(1)) if N >= 2 else _vacuous("(1) right"))
    if N >= 4:
        for k in range(2, N - 1):
            lhs = p.w(k + 1) * (k + 2 - g) * (k + 2 - 2 * g) * A(k + 2)
            rhs = p.w(k) * (k + 1 - g) * (k + 1) * A(k + 1)
            conds.append(_cond("(2)", lhs, rhs, k))
    else:
        conds.append(_vacuous("(2)"))
    return CriterionReport("2.5", p.to_dict(), conds, f"prestarlike of order {g}")


def cor_convex(a, p: ParameterSet) -> CriterionReport:
    """Convexity chain  w_{k+1}(k+2)^2 a_{k+2} <= ... <= w_2 9 a_3 <= 4 a_2 <= a_1."""
    a = _coeffs(a)
    p.check(with_gamma=False)
    N, A = a.degree, a.a
    conds = [_cond("chain", 4 * A(2), A(1), 1) if N >= 2 else _vacuous("chain", 1)]
    if N >= 3:
        conds.append(_cond("chain", p.w(2) * 9 * A(3), 4 * A(2), 2))
    for k in range(2, N - 1):
        conds.append(_cond("chain", p.w(k + 1) * (k + 2) ** 2 * A(k + 2), p.w(k) * (k + 1) ** 2 * A(k + 1), k + 1))
    return CriterionReport("2.7", p.to_dict(), conds, "convex")


# -- generalized Cesaro means ----------------------------------------------------


def _cesaro_inputs(a, cp: CesaroParams):
    a = _coeffs(a)
    if not cp.b >= cp.c > 0:
        raise DomainError(f"the Cesaro theorems need b >= c > 0, got b={cp.b}, c={cp.c}")
    if cp.n < 3:
        raise DomainError("the Cesaro theorems need n >= 3 (their conditions involve a_3)")
    if a.degree < cp.n:
        raise DomainError(f"need at least n={cp.n} coefficients, got {a.degree}")
    return a


def _ctc_link(k, a, cp, p) -> tuple[float, float]:
    """(ii) of the close-to-convexity theorem at index k, as (lhs, rhs)."""
    b, c, n, A = cp.b, cp.c, cp.n, a.a
    lhs = (k - 1 + p.alpha) * (k - 1 + p.beta) * (c + n - k - 1) * (k + 1) * A(k + 1)
    rhs = (k - 1 + p.alpha - p.lam) * (k - 1 + p.beta - p.mu) * (b + n - k - 1) * k * A(k)
    return lhs, rhs


def _cesaro_params_dict(cp, p, **extra):
    d = {**cp.to_dict(), **p.to_dict(), **extra}
    return d


def cesaro_ctc(a, cp: CesaroParams, p: ParameterSet, proof_ranges: bool = False) -> CriterionReport:
    """Close-to-convexity (w.r.t. z and z/(1-z)) and starlikeness of s_n(f).

    gating  2(c+n-2) a_2 <= (b+n-2) a_1
    (i)     2^(lam+mu+1)(c+n-3) 3a_3 <= (2-alpha lam)(2-beta mu)(b+n-3) a_2
    (ii)    (k-1+alpha)(k-1+beta)(c+n-k-1)(k+1)a_{k+1}
                <= (k-1+alpha-lam)(k-1+beta-mu)(b+n-k-1) k a_k,  3 <= k <= n-3
    (iii)   (n-2+alpha)(n-2+beta) c n a_n
                <= (n-2+alpha-lam)(n-2+beta-mu)(1+b-c)(n-1) a_{n-1}

    The link (ii) at k = n-2 is needed by the summation-by-parts argument
    but absent from the stated range; it is reported under ``extras`` and
    never counts toward ``all_satisfied``. ``proof_ranges`` only loosens the
    alpha/beta hypotheses.
    """
    a = _cesaro_inputs(a, cp)
    p.check_cesaro(proof_ranges)
    b, c, n, A = cp.b, cp.c, cp.n, a.a
    s = p.lam + p.mu
    gating = [_cond("gating", 2 * (c + n - 2) * A(2), (b + n - 2) * A(1))]
    conds = [
        _cond(
            "(i)",
            2 ** (s + 1) * (c + n - 3) * 3 * A(3),
            (2 - p.alpha * p.lam) * (2 - p.beta * p.mu) * (b + n - 3) * A(2),
        )
    ]
    if n - 3 >= 3:
        conds += [_cond("(ii)", *_ctc_link(k, a, cp, p), k) for k in range(3, n - 2)]
    else:
        conds.append(_vacuous("(ii)"))
    conds.append(
        _cond(
            "(iii)",
            (n - 2 + p.alpha) * (n - 2 + p.beta) * c * n * A(n),
            (n - 2 + p.alpha - p.lam) * (n - 2 + p.beta - p.mu) * (1 + b - c) * (n - 1) * A(n - 1),
        )
    )
    extras = []
    if n - 2 >= 3:
        extras.append(_cond("(ii) proof-range extra", *_ctc_link(n - 2, a, cp, p), n - 2))
    return CriterionReport(
        "3.1",
        _cesaro_params_dict(cp, p, proof_ranges=proof_ranges),
        conds,
        "close-to-convex w.r.t. z and z/(1-z); starlike",
        gating=gating,
        extras=extras,
    )


def cesaro_r_gamma_bound(a, cp: CesaroParams) -> float:
    """Largest admissible order 1 - 2 a_2 (c+n-2)/(b+n-2); ``a`` is a
    coefficient sequence or the value of a_2."""
    if isinstance(a, (int, float)):
        a2 = float(a)
    else:
        a2 = (a if isinstance(a, CoefficientSequence) else CoefficientSequence(a)).a(2)
    return 1 - 2 * a2 * (cp.c + cp.n - 2) / (cp.b + cp.n - 2)


def cesaro_r_gamma(
    a, cp: CesaroParams, p: ParameterSet, gamma: float | None = None, proof_ranges: bool = False
) -> CriterionReport:
    """s_n(f) in R(gamma) = {Re f' > gamma}: the close-to-convexity hypotheses
    plus 0 <= gamma <= gamma_max. ``gamma=None`` uses gamma_max."""
    base = cesaro_ctc(a, cp, p, proof_ranges)
    gmax = cesaro_r_gamma_bound(a, cp)
    g = gmax if gamma is None else float(gamma)
    bound = [_cond("gamma >= 0", 0.0, g), _cond("gamma <= gamma_max", g, gmax)]
    return CriterionReport(
        "3.3",
        {**base.params, "gamma": g, "gamma_max": gmax},
        base.conditions,
        f"R({g})",
        gating=base.gating + bound,
        extras=base.extras,
    )


def cesaro_starlike_half(a, cp: CesaroParams, p: ParameterSet, proof_ranges: bool = False) -> CriterionReport:
    """s_n(f) starlike of order lam+mu-1/2; with s = lam+mu:

    (1) (5-2s)(c+n-2) a_2 <= (3-2s)(b+n-2) a_1
    (2) 2^(s+2)(7-2s)(c+n-3) a_3 <= (2-alpha lam)(2-beta mu)(5-2s)(b+n-3) a_2
    (3) (2k+3-2s)(k-1+alpha)(k-1+beta)(c+n-k-1) a_{k+1}
            <= (2k+1-2s)(k-1+alpha-lam)(k-1+beta-mu)(b+n-k-1) a_k,  3 <= k <= n-2
    (4) (n-2+alpha)(n-2+beta)(2n+3-2s) c a_n
            <= (n-2+alpha-lam)(n-2+beta-mu)(2n+1-2s)(1+b-c) a_{n-1}

    The starlikeness argument applied to the last link actually needs the
    factors (2n+1-2s) and (2n-1-2s) in (4); that version is reported under
    ``extras`` for diagnosis only.
    """
    a = _cesaro_inputs(a, cp)
    p.check_cesaro(proof_ranges)
    b, c, n, A = cp.b, cp.c, cp.n, a.a
    al, be, lam, mu = p.alpha, p.beta, p.lam, p.mu
    s = lam + mu
    order = s - 0.5
    conds = [
        _cond("(1)", (5 - 2 * s) * (c + n - 2) * A(2), (3 - 2 * s) * (b + n - 2) * A(1)),
        _cond(
            "(2)",
            2 ** (s + 2) * (7 - 2 * s) * (c + n - 3) * A(3),
            (2 - al * lam) * (2 - be * mu) * (5 - 2 * s) * (b + n - 3) * A(2),
        ),
    ]
    if n - 2 >= 3:
        for k in range(3, n - 1):
            lhs = (2 * k + 3 - 2 * s) * (k - 1 + al) * (k - 1 + be) * (c + n - k - 1) * A(k + 1)
            rhs = (2 * k + 1 - 2 * s) * (k - 1 + al - lam) * (k - 1 + be - mu) * (b + n - k - 1) * A(k)
            conds.append(_cond("(3)", lhs, rhs, k))
    else:
        conds.append(_vacuous("(3)"))
    tail_l = (n - 2 + al) * (n - 2 + be) * c * A(n)
    tail_r = (n - 2 + al - lam) * (n - 2 + be - mu) * (1 + b - c) * A(n - 1)
    conds.append(_cond("(4)", (2 * n + 3 - 2 * s) * tail_l, (2 * n + 1 - 2 * s) * tail_r))
    extras = [_cond("(4) proof-consistent", (2 * n + 1 - 2 * s) * tail_l, (2 * n - 1 - 2 * s) * tail_r)]
    notes = [f"order lambda+mu-1/2 = {order}"]
    if order >= 1:
        notes.append("order >= 1 lies outside [0, 1); condition (1) cannot hold when lambda+mu >= 3/2")
    return CriterionReport(
        "3.4",
        _cesaro_params_dict(cp, p, order=order, proof_ranges=proof_ranges),
        conds,
        f"starlike of order {order}",
        extras=extras,
        notes=notes,
    )


def cesaro_prestarlike(cp: CesaroParams, p: ParameterSet, proof_ranges: bool = False) -> CriterionReport:
    """The Cesaro polynomial s_n(z) (a_k = B_{n-k}/B_{n-1}) prestarlike of order gamma:

    (1) 2(2-g)(c+n-2) <= b+n-2
    (2) w_2 (3-g)(3-2g)(c+n-3) <= 2(2-g)(b+n-3)
    (3) w_{k+1}(k+2-g)(k+2-2g)(c+n-k-2) <= w_k (k+1-g)(k+1)(b+n-k-2),  2 <= k <= n-3
    (4) w_{n-1}(n-g)(n-2g) c <= w_{n-2}(n-1-g)(n-1)(1+b-c)
    """
    if not cp.b >= cp.c > 0:
        raise DomainError(f"the Cesaro theorems need b >= c > 0, got b={cp.b}, c={cp.c}")
    if cp.n < 3:
        raise DomainError("the Cesaro theorems need n >= 3")
    p.check_cesaro(proof_ranges, with_gamma=True)
    b, c, n, g = cp.b, cp.c, cp.n, p.gamma
    conds = [
        _cond("(1)", 2 * (2 - g) * (c + n - 2), b + n - 2),
        _cond("(2)", p.w(2) * (3 - g) * (3 - 2 * g) * (c + n - 3), 2 * (2 - g) * (b + n - 3)),
    ]
    if n - 3 >= 2:
        for k in range(2, n - 2):
            lhs = p.w(k + 1) * (k + 2 - g) * (k + 2 - 2 * g) * (c + n - k - 2)
            rhs = p.w(k) * (k + 1 - g) * (k + 1) * (b + n - k - 2)
            conds.append(_cond("(3)", lhs, rhs, k))
    else:
        conds.append(_vacuous("(3)"))
    conds.append(
        _cond(
            "(4)",
            p.w(n - 1) * (n - g) * (n - 2 * g) * c,
            p.w(n - 2) * (n - 1 - g) * (n - 1) * (1 + b - c),
        )
    )
    return CriterionReport(
        "3.5", _cesaro_params_dict(cp, p, proof_ranges=proof_ranges), conds, f"prestarlike of order {g}"
    )


def cesaro_ctc_odd(a, cp: CesaroParams, p: ParameterSet, proof_ranges: bool = False) -> CriterionReport:
    """s_n(f) close-to-convex w.r.t. z/(1-z^2):

    (1) (c+n-2) 2^(lam+mu+3) a_2 <= (2-alpha lam)(2-beta mu)(b+n-2) a_1
    (2) (k+alpha)(k+beta)(c+n-k-1)(k+1) a_{k+1}
            <= k (k+alpha-lam)(k+beta-mu)(b+n-k-1) a_k,  2 <= k <= n-2
    (3) c (n-1+alpha)(n-1+beta) n a_n <= (n-1+alpha-lam)(n-1+beta-mu)(1+b-c)(n-1) a_{n-1}
    """
    a = _cesaro_inputs(a, cp)
    p.check_cesaro(proof_ranges)
    b, c, n, A = cp.b, cp.c, cp.n, a.a
    al, be, lam, mu = p.alpha, p.beta, p.lam, p.mu
    s = lam + mu
    conds = [
        _cond("(1)", (c + n - 2) * 2 ** (s + 3) * A(2), (2 - al * lam) * (2 - be * mu) * (b + n - 2) * A(1)),
    ]
    if n - 2 >= 2:
        for k in range(2, n - 1):
            lhs = (k + al) * (k + be) * (c + n - k - 1) * (k + 1) * A(k + 1)
            rhs = k * (k + al - lam) * (k + be - mu) * (b + n - k - 1) * A(k)
            conds.append(_cond("(2)", lhs, rhs, k))
    else:
        conds.append(_vacuous("(2)"))
    conds.append(
        _cond(
            "(3)",
            c * (n - 1 + al) * (n - 1 + be) * n * A(n),
            (n - 1 + al - lam) * (n - 1 + be - mu) * (1 + b - c) * (n - 1) * A(n - 1),
        )
    )
    return CriterionReport(
        "3.7", _cesaro_params_dict(cp, p, proof_ranges=proof_ranges), conds, "close-to-convex w.r.t. z/(1-z^2)"
    )


def example_delta_bound(kind: str, n: int, p: ParameterSet) -> float:
    """Displayed lower bounds on delta for the classical means s_n^delta.

    kind='ctc' (log-series, close-to-convexity):
        max{0, (n-2)(2^(s+2)/((2-alpha lam)(2-beta mu)) - 1),
               (n-3)(2s+alpha mu+beta lam+lam mu)/((2+alpha-lam)(2+beta-mu))}
    kind='prestarlike' (order gamma):
        max{(n-1)(3-2g), (n-2)(w_2(3-g)(3-2g)/(2(2-g)) - 1),
            (n-3)(w_3(4-g)(4-2g)/(w_2(3-g)3) - 1)}
    """
    al, be, lam, mu, g = p.alpha, p.beta, p.lam, p.mu, p.gamma
    s = lam + mu
    if kind == "ctc":
        return max(
            0.0,
            (n - 2) * (2 ** (s + 2) / ((2 - al * lam) * (2 - be * mu)) - 1),
            (n - 3) * (2 * s + al * mu + be * lam + lam * mu) / ((2 + al - lam) * (2 + be - mu)),
        )
    if kind == "prestarlike":
        return max(
            (n - 1) * (3 - 2 * g),
            (n - 2) * (p.w(2) * (3 - g) * (3 - 2 * g) / (2 * (2 - g)) - 1),
            (n - 3) * (p.w(3) * (4 - g) * (4 - 2 * g) / (p.w(2) * (3 - g) * 3) - 1),
        )
    raise DomainError(f"kind must be 'ctc' or 'prestarlike', got {kind!r}")


THEOREMS = {
    "2.2": thm_starlike,
    "2.4": thm_ctc,
    "2.5": thm_prestarlike,
    "2.7": cor_convex,
    "3.1": cesaro_ctc,
    "3.3": cesaro_r_gamma,
    "3.4": cesaro_starlike_half,
    "3.5": cesaro_prestarlike,
    "3.7": cesaro_ctc_odd,
}
