"""Gilbert-Varshamov type existence conditions for nested code pairs.

``gv_finite`` evaluates the finite-length sufficient condition with exact
integers, ``gv_asymptotic`` the rate form with high-precision logarithms, and
``gv_search`` tries to exhibit an actual pair ``C_S ⊂ C_R`` by random
self-orthogonal growth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from .errors import InvalidParams, OutOfRange
from .field import FieldSpec, gf
from .linalg import Subspace, rref_basis
from .symplectic import coset_distance, lagrangian_extend, symp_dual

ASYMPTOTIC_MARGIN = mpmath.mpf("1e-12")
_DPS = 40


@dataclass(frozen=True)
class GVQuery:
    q: int
    n: int
    k: int
    s: int
    delta_t: int
    delta_r: int

    def validate(self) -> None:
        if min(self.n, self.k) < 1 or self.s < 0:
            raise InvalidParams("n, k must be positive and s nonnegative")
        if self.k + self.s > self.n:
            raise InvalidParams(f"k + s = {self.k + self.s} exceeds n = {self.n}")
        if self.delta_t < 1 or self.delta_r < 1:
            raise InvalidParams("target distances must be >= 1")
        try:
            gf(self.q)
        except Exception as exc:
            raise InvalidParams(f"q = {self.q} is not a usable prime power") from exc


@dataclass(frozen=True)
class GVResult:
    numerator: int
    denominator: int

    @property
    def lhs(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def feasible(self) -> bool:
        return self.numerator < self.denominator

    def lhs_str(self) -> str:
        if self.numerator == 0:
            return "0/1"
        return f"{self.numerator}/{self.denominator}"

    def to_json(self) -> dict:
        return {"lhs": self.lhs_str(), "lhs_reduced": str(self.lhs), "feasible": self.feasible}


def _ball(n: int, q: int, radius: int) -> int:
    """Number of nonzero vectors of symplectic weight at most ``radius``."""
    return sum(comb(n, i) * (q * q - 1) ** i for i in range(1, radius + 1))


def gv_finite(query: GVQuery) -> GVResult:
    """Left-hand side of the finite GV condition over the common denominator
    ``q^{2n} - 1``; feasible iff it is below 1."""
    query.validate()
    q, n, k, s = query.q, query.n, query.k, query.s
    num = (q ** (n + k + s) - q ** (n + s)) * _ball(n, q, query.delta_r - 1)
    num += (q ** (n - s) - q ** (n - k - s)) * _ball(n, q, query.delta_t - 1)
    return GVResult(num, q ** (2 * n) - 1)


# -- asymptotic form -----------------------------------------------------------


def h_q(x, q: int):
    """q-ary entropy ``-x log_q x - (1-x) log_q(1-x)`` with ``h_q(0) = 0``."""
    with mpmath.workdps(_DPS):
        x = mpmath.mpf(x)
        if x == 0:
            return mpmath.mpf(0)
        if x == 1:
            return mpmath.mpf(0)
        return -x * mpmath.log(x, q) - (1 - x) * mpmath.log(1 - x, q)


@dataclass(frozen=True)
class AsymptoticCheck:
    lhs_t: mpmath.mpf
    rhs_t: mpmath.mpf
    lhs_r: mpmath.mpf
    rhs_r: mpmath.mpf

    @property
    def margin_t(self):
        return self.rhs_t - self.lhs_t

    @property
    def margin_r(self):
        return self.rhs_r - self.lhs_r

    @staticmethod
    def _verdict(margin) -> str:
        if abs(margin) <= ASYMPTOTIC_MARGIN:
            return "indeterminate"
        return "pass" if margin > 0 else "fail"

    @property
    def verdict_t(self) -> str:
        return self._verdict(self.margin_t)

    @property
    def verdict_r(self) -> str:
        return self._verdict(self.margin_r)

    @property
    def passed(self) -> bool:
        return self.verdict_t == "pass" and self.verdict_r == "pass"

    def to_json(self) -> dict:
        return {
            "privacy": {"lhs": float(self.lhs_t), "rhs": float(self.rhs_t), "margin": float(self.margin_t),
                        "verdict": self.verdict_t},
            "reconstruction": {"lhs": float(self.lhs_r), "rhs": float(self.rhs_r), "margin": float(self.margin_r),
                               "verdict": self.verdict_r},
            "passed": self.passed,
        }


def _weight_exponent(eps, q: int):
    with mpmath.workdps(_DPS):
        return h_q(eps, q) + mpmath.mpf(eps) * mpmath.log(q * q - 1, q)


def gv_asymptotic(R, S, eps_t, eps_r, q: int) -> AsymptoticCheck:
    """Both rate inequalities; ``*_t`` concerns privacy, ``*_r`` reconstruction.
    Arguments may be floats, ints or decimal strings."""
    with mpmath.workdps(_DPS):
        R, S, eps_t, eps_r = (mpmath.mpf(str(v)) for v in (R, S, eps_t, eps_r))
        for name, v in (("R", R), ("S", S)):
            if not (0 <= v <= 1):
                raise OutOfRange(f"{name} = {v} outside [0, 1]")
        for name, v in (("eps_t", eps_t), ("eps_r", eps_r)):
            if not (0 <= v < mpmath.mpf("0.5")):
                raise OutOfRange(f"{name} = {v} outside [0, 0.5)")
        return AsymptoticCheck(
            lhs_t=_weight_exponent(eps_t, q),
            rhs_t=1 + S,
            lhs_r=_weight_exponent(eps_r, q),
            rhs_r=1 - R - S,
        )


def gv_asymptotic_deterministic(R, eps_t, eps_r, q: int) -> AsymptoticCheck:
    """The special case without encoding randomness, written out directly:
    ``h_q(e_t) + e_t log_q(q^2-1) < 1`` and ``h_q(e_r) + e_r log_q(q^2-1) < 1 - R``."""
    with mpmath.workdps(_DPS):
        def expo(e):
            e = mpmath.mpf(str(e))
            ent = 0 if e == 0 else -e * mpmath.log(e) / mpmath.log(q) - (1 - e) * mpmath.log(1 - e) / mpmath.log(q)
            return ent + e * mpmath.log(q * q - 1) / mpmath.log(q)

        return AsymptoticCheck(expo(eps_t), mpmath.mpf(1), expo(eps_r), 1 - mpmath.mpf(str(R)))


# -- constructive search -------------------------------------------------------


@dataclass(frozen=True)
class GVWitness:
    c_s: Subspace
    c_r: Subspace
    ds_rc: int
    ds_dual: int
    trial: int


def sample_nested_pair(field: FieldSpec, n: int, k: int, s: int, rng: random.Random) -> tuple[Subspace, Subspace]:
    """Random ``C_S ⊂ C_R`` with ``C_R`` self-orthogonal: grow from ``{0}`` by
    uniformly random admissible vectors, stopping at ``n-k-s`` and ``n-s``."""
    zero = rref_basis([], field, 2 * n, symplectic=True)
    c_s = lagrangian_extend(zero, rng=rng, target_dim=n - k - s)
    c_r = lagrangian_extend(c_s, rng=rng, target_dim=n - s)
    return c_s, c_r


def gv_search(query: GVQuery, trials: int = 1000, seed: int = 0, field: FieldSpec | None = None) -> GVWitness | None:
    """First sampled pair meeting both distance targets, or ``None``.

    Trial ``i`` draws from ``random.Random(f"{seed}:{i}")`` so each trial is
    reproducible on its own.
    """
    query.validate()
    F = field if field is not None else gf(query.q)
    n, k, s = query.n, query.k, query.s
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        c_s, c_r = sample_nested_pair(F, n, k, s, rng)
        ds_rc = coset_distance(c_r, c_s)
        if ds_rc < query.delta_t:
            continue
        ds_dual = coset_distance(symp_dual(c_s), symp_dual(c_r))
        if ds_dual < query.delta_r:
            continue
        return GVWitness(c_s, c_r, ds_rc, ds_dual, trial)
    return None
