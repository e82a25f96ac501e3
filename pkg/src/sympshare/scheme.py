"""Stabilizer-based ramp secret sharing with message randomization.

A scheme is the nested chain ``C_S ⊆ C_R ⊆ C_max = C_max^⊥s ⊆ C_R^⊥s ⊆ C_S^⊥s``
in GF(q)^{2n} together with an explicit secret map: representatives
``r_1..r_k`` whose cosets modulo ``C_R^⊥s`` form a basis of ``C_S^⊥s/C_R^⊥s``.
The randomness representatives ``t_1..t_s`` span ``C_R^⊥s`` modulo ``C_max``.

Everything here is exact finite-field linear algebra; information amounts are
integers counted in q-ary symbols (multiply by ``log2 q`` for bits).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (
    BadDimensions,
    BadSecretReps,
    EnumerationTooLarge,
    FieldMismatch,
    IndexOutOfRange,
    NestingViolated,
    OddK,
    TooManySubsets,
)
from .field import FieldSpec
from .linalg import (
    Subspace,
    complement_reps,
    coord_project,
    coord_restrict,
    enum_cap,
    rref_basis,
    span,
)
from .symplectic import (
    MAX_SUBSET_N,
    coset_distance,
    is_lagrangian,
    is_self_orthogonal,
    lagrangian_extend,
    relative_dim,
    rgsw,
    symp_dual,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Scheme:
    field: FieldSpec
    n: int
    k: int
    s: int
    c_s: Subspace
    c_r: Subspace
    c_r_dual: Subspace
    c_s_dual: Subspace
    c_max: Subspace
    secret_reps: tuple[Vector, ...]
    rand_reps: tuple[Vector, ...]
    meta: dict = dc_field(default_factory=dict, compare=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def prime_field(self) -> bool:
        return self.field.m == 1


def _as_symp(V: Subspace, field: FieldSpec, two_n: int, name: str) -> Subspace:
    if V.field != field:
        raise FieldMismatch(f"{name} is over {V.field}, expected {field}")
    if V.ambient_dim != two_n:
        raise BadDimensions(f"{name} has ambient dimension {V.ambient_dim}, expected {two_n}")
    return V.with_layout(True)


def scheme_build(
    c_s: Subspace,
    c_r: Subspace,
    secret_reps: Sequence[Sequence[int]] | None = None,
    *,
    c_max: Subspace | None = None,
    k: int | None = None,
    s: int | None = None,
    meta: dict | None = None,
) -> Scheme:
    """Assemble and validate a scheme from ``C_S ⊆ C_R``.

    ``C_max`` defaults to the deterministic Lagrangian extension of ``C_R``;
    ``secret_reps`` default to the echelon completion of ``C_R^⊥s`` inside
    ``C_S^⊥s``.  When ``k``/``s`` are given they are checked against the
    dimensions.
    """
    F = c_r.field
    if c_r.ambient_dim % 2:
        raise BadDimensions("ambient dimension must be even")
    two_n = c_r.ambient_dim
    n = two_n // 2
    c_s = _as_symp(c_s, F, two_n, "C_S")
    c_r = c_r.with_layout(True)
    if not c_s.issubset(c_r):
        raise NestingViolated("C_S is not contained in C_R")
    if not is_self_orthogonal(c_r):
        raise NestingViolated("C_R is not contained in its symplectic dual")
    kk = c_r.dim - c_s.dim
    ss = n - c_r.dim
    if (k is not None and k != kk) or (s is not None and s != ss):
        raise BadDimensions(f"dimensions give k={kk}, s={ss}; expected k={k}, s={s}")
    c_r_dual = symp_dual(c_r)
    c_s_dual = symp_dual(c_s)
    if c_max is None:
        c_max = lagrangian_extend(c_r)
    else:
        c_max = _as_symp(c_max, F, two_n, "C_max")
        if not is_lagrangian(c_max) or not c_r.issubset(c_max):
            raise NestingViolated("C_max must be Lagrangian and contain C_R")
    if secret_reps is None:
        reps = complement_reps(c_s_dual, c_r_dual)
    else:
        reps = [tuple(int(x) for x in r) for r in secret_reps]
        if len(reps) != kk:
            raise BadSecretReps(f"{len(reps)} secret representatives for k = {kk}")
        for r in reps:
            if len(r) != two_n:
                raise BadSecretReps(f"representative of length {len(r)}, expected {two_n}")
            F.check(r)
            if not c_s_dual.contains(r):
                raise BadSecretReps("secret representative outside C_S^⊥s")
        if span(c_r_dual, reps).dim != c_r_dual.dim + kk:
            raise BadSecretReps("secret representatives are dependent modulo C_R^⊥s")
    rand = complement_reps(c_r_dual, c_max)
    return Scheme(
        field=F,
        n=n,
        k=kk,
        s=ss,
        c_s=c_s,
        c_r=c_r,
        c_r_dual=c_r_dual,
        c_s_dual=c_s_dual,
        c_max=c_max,
        secret_reps=tuple(tuple(r) for r in reps),
        rand_reps=tuple(rand),
        meta=dict(meta or {}),
    )


def with_c_max(scheme: Scheme, c_max: Subspace) -> Scheme:
    """Same scheme and secret map, different Lagrangian ``C_max``."""
    return scheme_build(scheme.c_s, scheme.c_r, scheme.secret_reps, c_max=c_max, meta=scheme.meta)


# -- access structure ----------------------------------------------------------


class Access(enum.Enum):
    QUALIFIED = "qualified"
    FORBIDDEN = "forbidden"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class AccessClass:
    kind: Access
    ell: int

    def __str__(self) -> str:
        if self.kind is Access.INTERMEDIATE:
            return f"intermediate({self.ell})"
        return self.kind.value


def _positions(scheme: Scheme, A: Iterable[int]) -> list[int]:
    A = sorted(set(A))
    for i in A:
        if not (1 <= i <= scheme.n):
            raise IndexOutOfRange(f"participant {i} outside 1..{scheme.n}")
    return A


def info_amount(scheme: Scheme, A: Iterable[int]) -> int:
    """``dim (C_R ∩ F^A)/(C_S ∩ F^A)``, cross-checked against
    ``dim P_A(C_S^⊥s) - dim P_A(C_R^⊥s)``."""
    A = _positions(scheme, A)
    ell = relative_dim(scheme.c_r, scheme.c_s, A)
    if A:
        other = coord_project(scheme.c_s_dual, A).dim - coord_project(scheme.c_r_dual, A).dim
    else:
        other = 0
    if ell != other:
        raise AssertionError(f"shortening/puncturing mismatch on {A}: {ell} vs {other}")
    return ell


def info_bits(scheme: Scheme, A: Iterable[int]) -> float:
    return info_amount(scheme, A) * math.log2(scheme.q)


def classify(scheme: Scheme, A: Iterable[int]) -> AccessClass:
    ell = relative_dim(scheme.c_r, scheme.c_s, _positions(scheme, A))
    if ell == 0:
        return AccessClass(Access.FORBIDDEN, 0)
    if ell == scheme.k:
        return AccessClass(Access.QUALIFIED, ell)
    return AccessClass(Access.INTERMEDIATE, ell)


def complement_info(scheme: Scheme, A: Iterable[int]) -> int:
    """Information of the complement of ``A`` computed on the dual pair:
    ``dim(C_S^⊥s ∩ F^Ā) - dim(C_R^⊥s ∩ F^Ā)``.  Equals ``k - info_amount(A)``."""
    A = set(_positions(scheme, A))
    comp = [i for i in range(1, scheme.n + 1) if i not in A]
    return relative_dim(scheme.c_s_dual, scheme.c_r_dual, comp)


def partial_leakage(scheme: Scheme, A: Iterable[int], B: Iterable[int]) -> int:
    """Information ``A`` holds about the secret coordinates in ``B`` (1-based),
    the remaining coordinates acting as dummy randomness."""
    A = _positions(scheme, A)
    B = set(B)
    for j in B:
        if not (1 <= j <= scheme.k):
            raise IndexOutOfRange(f"secret coordinate {j} outside 1..{scheme.k}")
    if not A or not B:
        return 0
    dummies = [scheme.secret_reps[j - 1] for j in range(1, scheme.k + 1) if j not in B]
    widened = span(scheme.c_r_dual, dummies)
    return coord_project(scheme.c_s_dual, A).dim - coord_project(widened, A).dim


def secret_vector(scheme: Scheme, m: Sequence[int]) -> Vector:
    """``sum_i m_i r_i``, one representative of the coset ``f(m)``."""
    F = scheme.field
    if len(m) != scheme.k:
        raise FieldMismatch(f"secret of length {len(m)}, expected {scheme.k}")
    F.check(m)
    v = [0] * (2 * scheme.n)
    for c, r in zip(m, scheme.secret_reps):
        if c:
            v = F.axpy(v, F.neg(c), r)
    return tuple(v)


def encode_reps(scheme: Scheme, m: Sequence[int]) -> list[Vector]:
    """The ``q^s`` cosets of ``C_max`` making up ``f(m)``, each as its canonical
    representative modulo ``C_max``."""
    F = scheme.field
    if F.q**scheme.s > enum_cap():
        raise EnumerationTooLarge(f"q^s = {F.q}^{scheme.s} exceeds the cap")
    base = secret_vector(scheme, m)
    out = []
    for u in product(range(F.q), repeat=scheme.s):
        v = list(base)
        for c, t in zip(u, scheme.rand_reps):
            if c:
                v = F.axpy(v, F.neg(c), t)
        out.append(scheme.c_max.reduce(v))
    return out


def all_secrets(scheme: Scheme) -> list[tuple[int, ...]]:
    return list(product(range(scheme.q), repeat=scheme.k))


# -- reports -------------------------------------------------------------------


@dataclass
class AccessReport:
    n: int
    k: int
    s: int
    q: int
    exhaustive: bool
    subsets: list[tuple[tuple[int, ...], int]]
    per_size: list[dict]
    t: dict[int, int]
    r: dict[int, int]
    ds_rc: int | None
    ds_dual: int | None
    dist_forbidden_upto: int | None
    dist_qualified_from: int | None
    t_lower: dict[int, int]
    r_upper: dict[int, int]
    violations: list[str]
    non_prime_field: bool

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "q": self.q,
            "exhaustive": self.exhaustive,
            "per_size": self.per_size,
            "t": {str(i): v for i, v in self.t.items()},
            "r": {str(i): v for i, v in self.r.items()},
            "coset_distance": {"C_R/C_S": self.ds_rc, "C_S_dual/C_R_dual": self.ds_dual},
            "bounds": {
                "forbidden_upto": self.dist_forbidden_upto,
                "qualified_from": self.dist_qualified_from,
                "t_lower": {str(i): v for i, v in self.t_lower.items()},
                "r_upper": {str(i): v for i, v in self.r_upper.items()},
            },
            "consistent": self.consistent,
            "violations": self.violations,
        }
        if self.exhaustive:
            out["subsets"] = [{"A": list(A), "ell": ell} for A, ell in self.subsets]
        if self.non_prime_field:
            out["note"] = "non-prime field: dimension formulas applied as in the prime case"
        return out


def _check_subset_limit(n: int) -> None:
    if n > MAX_SUBSET_N:
        raise TooManySubsets(f"n = {n} exceeds {MAX_SUBSET_N} for exhaustive enumeration")


def iter_subsets(n: int, sizes: Iterable[int] | None = None):
    """Subsets of 1..n ordered by size, then lexicographically."""
    for size in sizes if sizes is not None else range(n + 1):
        yield from combinations(range(1, n + 1), size)


def access_report(scheme: Scheme, exhaustive: bool = True) -> AccessReport:
    n, k = scheme.n, scheme.k
    subsets: list[tuple[tuple[int, ...], int]] = []
    per_size: list[dict] = []
    t: dict[int, int] = {}
    r: dict[int, int] = {}
    if exhaustive:
        _check_subset_limit(n)
        lo = [k] * (n + 1)
        hi = [0] * (n + 1)
        for A in iter_subsets(n):
            ell = info_amount(scheme, A)
            subsets.append((A, ell))
            lo[len(A)] = min(lo[len(A)], ell)
            hi[len(A)] = max(hi[len(A)], ell)
        for size in range(n + 1):
            per_size.append({"size": size, "min": lo[size], "max": hi[size], "count": math.comb(n, size)})
        for i in range(1, k + 1):
            a = -1
            while a + 1 <= n and hi[a + 1] < i:
                a += 1
            t[i] = a
            b = n + 1
            while b - 1 >= 0 and lo[b - 1] >= i:
                b -= 1
            r[i] = b

    ds_rc = ds_dual = f_upto = q_from = None
    t_lower: dict[int, int] = {}
    r_upper: dict[int, int] = {}
    if k > 0:
        ds_rc = coset_distance(scheme.c_r, scheme.c_s)
        ds_dual = coset_distance(scheme.c_s_dual, scheme.c_r_dual)
        f_upto = ds_rc - 1
        q_from = n - ds_dual + 1
        for i in range(1, k + 1):
            t_lower[i] = rgsw(scheme.c_r, scheme.c_s, i) - 1
            r_upper[k + 1 - i] = n - rgsw(scheme.c_s_dual, scheme.c_r_dual, i) + 1

    violations = []
    if exhaustive:
        for i in range(1, k + 1):
            if t[i] < t_lower[i]:
                violations.append(f"t_{i} = {t[i]} below bound {t_lower[i]}")
            if r[i] > r_upper[i]:
                violations.append(f"r_{i} = {r[i]} above bound {r_upper[i]}")
        if k > 0:
            for row in per_size:
                if row["size"] <= f_upto and row["max"] != 0:
                    violations.append(f"size {row['size']} should be forbidden")
                if row["size"] >= q_from and row["min"] != k:
                    violations.append(f"size {row['size']} should be qualified")
        for a in range(n):
            if per_size[a]["max"] > per_size[a + 1]["max"] or per_size[a]["min"] > per_size[a + 1]["min"]:
                violations.append(f"information not monotone between sizes {a} and {a + 1}")

    return AccessReport(
        n=n,
        k=k,
        s=scheme.s,
        q=scheme.q,
        exhaustive=exhaustive,
        subsets=subsets,
        per_size=per_size,
        t=t,
        r=r,
        ds_rc=ds_rc,
        ds_dual=ds_dual,
        dist_forbidden_upto=f_upto,
        dist_qualified_from=q_from,
        t_lower=t_lower,
        r_upper=r_upper,
        violations=violations,
        non_prime_field=not scheme.prime_field,
    )


@dataclass(frozen=True)
class StrongSecurityResult:
    passed: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    leaked: int = 0
    ell: int = 0
    checked: int = 0

    def to_json(self) -> dict:
        out = {"passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            A, Z = self.witness
            out["witness"] = {"A": list(A), "Z": list(Z), "ell": self.ell, "leaked": self.leaked}
        return out


def strong_security_check(scheme: Scheme) -> StrongSecurityResult:
    """Search for a set ``A`` holding ``ell > 0`` symbols and a pair-index set
    ``Z`` with ``2|Z| <= k - ell`` such that ``A`` learns something about the
    coordinates ``Z ∪ (k/2 + Z)``.  Returns the first such witness."""
    k, n = scheme.k, scheme.n
    if k % 2:
        raise OddK(f"k = {k} is odd")
    if k == 0:
        return StrongSecurityResult(True)
    _check_subset_limit(n)
    if k > 16:
        raise TooManySubsets(f"k = {k} exceeds 16")
    half = k // 2
    checked = 0
    for A in iter_subsets(n, range(1, n + 1)):
        ell = info_amount(scheme, A)
        if ell == 0:
            continue
        for zsize in range(1, (k - ell) // 2 + 1):
            for Z in combinations(range(1, half + 1), zsize):
                B = list(Z) + [half + z for z in Z]
                checked += 1
                leak = partial_leakage(scheme, A, B)
                if leak:
                    return StrongSecurityResult(False, (A, Z), leak, ell, checked)
    return StrongSecurityResult(True, checked=checked)
