"""Dense qudit simulation of the randomized encoding (prime fields only).

States are complex vectors of length ``p^n``; basis vector ``|v>`` sits at the
index whose base-``p`` digits, most significant first, are ``v_1..v_n``.
Reduced states are never formed from the full ``p^{2n}`` density matrix: each
pure share state is reshaped into a ``p^|A| x p^(n-|A|)`` matrix ``M`` and
``Tr_Ā |ψ><ψ| = M M^†``.

Tolerances: 1e-8 for equality/orthogonality of reduced states, 1e-6 for
entropies, 1e-12 below which eigenvalues count as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import NonPrimeField, ProjectionVanished, TooLarge
from .field import FieldSpec
from .linalg import Subspace
from .scheme import Access, Scheme, all_secrets, classify, encode_reps, info_amount

EQ_TOL = 1e-8
ENTROPY_TOL = 1e-6
EIG_FLOOR = 1e-12
MAX_STATE_DIM = 10**4
MAX_RAND = 10**3
MAX_REDUCED_DIM = 10**3
MAX_SECRETS = 10**4


def _require_prime(field: FieldSpec) -> None:
    if field.m != 1:
        raise NonPrimeField(f"{field} is not a prime field")


def _omega(p: int) -> complex:
    return np.exp(2j * np.pi / p)


@dataclass
class PureState:
    amps: np.ndarray
    p: int
    n: int

    def tensor(self) -> np.ndarray:
        return self.amps.reshape((self.p,) * self.n)


@dataclass
class DensityMatrix:
    matrix: np.ndarray
    subset: tuple[int, ...]

    def check(self) -> None:
        rho = self.matrix
        assert np.linalg.norm(rho - rho.conj().T) <= 1e-10
        assert abs(np.trace(rho) - 1) <= 1e-10
        if rho.size:
            assert np.linalg.eigvalsh(rho).min() >= -1e-9


def basis_state(p: int, n: int, index: int = 0) -> PureState:
    amps = np.zeros(p**n, dtype=complex)
    amps[index] = 1.0
    return PureState(amps, p, n)


def _phase_exponents(p: int, n: int, b: Sequence[int]) -> np.ndarray:
    """``<b, v> mod p`` for every basis vector ``v``, shaped ``(p,)*n``."""
    acc = np.zeros((p,) * n, dtype=np.int64)
    digits = np.arange(p, dtype=np.int64)
    for i, bi in enumerate(b):
        if bi:
            shape = [1] * n
            shape[i] = p
            acc = acc + bi * digits.reshape(shape)
    return acc % p


def pauli_apply(field: FieldSpec, a: Sequence[int], b: Sequence[int], psi: PureState) -> PureState:
    """``X(a)Z(b)|ψ>``: phase ``ω^{<b,v>}`` on ``|v>``, then ``|v> -> |v+a>``."""
    _require_prime(field)
    p, n = psi.p, psi.n
    if len(a) != n or len(b) != n:
        raise ValueError(f"operator on {len(a)} qudits applied to {n}")
    t = psi.tensor()
    if any(b):
        t = t * _omega(p) ** _phase_exponents(p, n, b)
    if any(a):
        t = np.roll(t, shift=[int(x) for x in a], axis=tuple(range(n)))
    return PureState(np.ascontiguousarray(t).reshape(-1), p, n)


def pauli_vec(field: FieldSpec, v: Sequence[int], psi: PureState) -> PureState:
    n = len(v) // 2
    return pauli_apply(field, v[:n], v[n:], psi)


def _power_scalar(p: int, a: Sequence[int], b: Sequence[int]) -> complex:
    """``(X(a)Z(b))^p`` is this multiple of the identity."""
    ab = sum(int(x) * int(y) for x, y in zip(a, b)) % p
    return _omega(p) ** ((p * (p - 1) // 2 * ab) % p)


def _seed_state(p: int, n: int, seed: int) -> PureState:
    if seed == 0:
        return basis_state(p, n)
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=p**n) + 1j * rng.normal(size=p**n)
    return PureState(amps / np.linalg.norm(amps), p, n)


def stabilizer_state(c_max: Subspace, seed: int = 0, attempts: int = 8) -> PureState:
    """Joint eigenvector of ``X(a)Z(b)`` for all ``(a|b)`` in the Lagrangian
    ``c_max``, by projecting a seed state onto one eigenspace per generator.
    Seed 0 is ``|0...0>``; other seeds are fixed pseudo-random states."""
    F = c_max.field
    _require_prime(F)
    p, n = F.p, c_max.ambient_dim // 2
    if p**n > MAX_STATE_DIM:
        raise TooLarge(f"p^n = {p**n} exceeds {MAX_STATE_DIM}")
    if 2 * c_max.dim != c_max.ambient_dim:
        raise ValueError("C_max must be Lagrangian")
    w = _omega(p)
    for s in range(seed, seed + attempts):
        psi = _seed_state(p, n, s)
        ok = True
        for g in c_max.basis:
            a, b = g[:n], g[n:]
            root = _power_scalar(p, a, b) ** (1.0 / p)
            powers = [psi]
            for _ in range(p - 1):
                powers.append(pauli_apply(F, a, b, powers[-1]))
            for j in range(p):
                lam = root * w**j
                proj = sum(lam ** (-t) * powers[t].amps for t in range(p)) / p
                norm = np.linalg.norm(proj)
                if norm > 1e-9:
                    psi = PureState(proj / norm, p, n)
                    break
            else:
                ok = False
                break
        if ok:
            for g in c_max.basis:
                out = pauli_vec(F, g, psi).amps
                lam = np.vdot(psi.amps, out)
                if np.linalg.norm(out - lam * psi.amps) > 1e-9 or abs(abs(lam) - 1) > 1e-9:
                    raise ProjectionVanished("projected state is not a joint eigenvector")
            return psi
    raise ProjectionVanished(f"every seed in {seed}..{seed + attempts - 1} projected to zero")


def _factor(psi: PureState, A: Sequence[int]) -> np.ndarray:
    """``M`` with ``Tr_Ā |ψ><ψ| = M M^†`` (A is 1-based)."""
    n, p = psi.n, psi.p
    axes = [i - 1 for i in A] + [i for i in range(n) if i + 1 not in set(A)]
    t = np.transpose(psi.tensor(), axes)
    return t.reshape(p ** len(A), p ** (n - len(A)))


class _Encoder:
    """Shares the stabilizer state between the reduced-state computations."""

    def __init__(self, scheme: Scheme, phi: PureState | None = None, seed: int = 0):
        F = scheme.field
        _require_prime(F)
        if F.p**scheme.n > MAX_STATE_DIM:
            raise TooLarge(f"p^n = {F.p**scheme.n} exceeds {MAX_STATE_DIM}")
        if F.p**scheme.s > MAX_RAND:
            raise TooLarge(f"p^s = {F.p**scheme.s} exceeds {MAX_RAND}")
        self.scheme = scheme
        self.phi = phi if phi is not None else stabilizer_state(scheme.c_max, seed)

    def factor(self, m: Sequence[int], A: Sequence[int]) -> np.ndarray:
        """``K`` with ``ρ_A(m) = K K^†``."""
        sch = self.scheme
        reps = encode_reps(sch, m)
        weight = 1.0 / math.sqrt(len(reps))
        blocks = [_factor(pauli_vec(sch.field, v, self.phi), A) for v in reps]
        return np.hstack(blocks) * weight


def share_density(scheme: Scheme, m: Sequence[int], A: Iterable[int], phi: PureState | None = None) -> DensityMatrix:
    """``Tr_Ā ρ(m)`` with ``ρ(m)`` the uniform mixture over the ``p^s`` cosets of ``f(m)``."""
    A = tuple(sorted(set(A)))
    enc = _Encoder(scheme, phi)
    K = enc.factor(m, A)
    return DensityMatrix(K @ K.conj().T, A)


def _entropy_of_factor(K: np.ndarray) -> float:
    """von Neumann entropy (bits) of ``K K^†`` via the smaller Gram matrix."""
    G = K @ K.conj().T if K.shape[0] <= K.shape[1] else K.conj().T @ K
    ev = np.linalg.eigvalsh(G)
    ev = ev[ev > EIG_FLOOR]
    return float(-(ev * np.log2(ev)).sum())


def von_neumann_entropy(rho: np.ndarray) -> float:
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > EIG_FLOOR]
    return float(-(ev * np.log2(ev)).sum())


@dataclass
class VerifyReport:
    subset: tuple[int, ...]
    class_quantum: str
    class_linear: str
    ell: int
    distinct: int
    fibers: list[int]
    equal_or_orthogonal: bool
    match: bool

    def to_json(self) -> dict:
        return {
            "A": list(self.subset),
            "class_quantum": self.class_quantum,
            "class_linear": self.class_linear,
            "ell": self.ell,
            "distinct_states": self.distinct,
            "fiber_sizes": sorted(set(self.fibers)),
            "equal_or_orthogonal": self.equal_or_orthogonal,
            "match": self.match,
        }


def verify_scheme(scheme: Scheme, A: Iterable[int], phi: PureState | None = None) -> VerifyReport:
    """Classify ``A`` from the reduced density matrices alone and compare with
    the linear-algebra answer, the count ``p^ell`` of distinct reduced states
    and the fiber size ``p^(k-ell)``."""
    A = tuple(sorted(set(A)))
    p, k = scheme.field.p, scheme.k
    if p ** len(A) > MAX_REDUCED_DIM:
        raise TooLarge(f"p^|A| = {p ** len(A)} exceeds {MAX_REDUCED_DIM}")
    if p**k > MAX_SECRETS:
        raise TooLarge(f"p^k = {p**k} exceeds {MAX_SECRETS}")
    enc = _Encoder(scheme, phi)
    classes: list[np.ndarray] = []
    fibers: list[int] = []
    for m in all_secrets(scheme):
        K = enc.factor(m, A)
        rho = K @ K.conj().T
        for idx, rep in enumerate(classes):
            if np.linalg.norm(rho - rep) <= EQ_TOL:
                fibers[idx] += 1
                break
        else:
            classes.append(rho)
            fibers.append(1)
    ortho = all(
        np.linalg.norm(classes[i] @ classes[j]) <= EQ_TOL
        for i in range(len(classes))
        for j in range(i + 1, len(classes))
    )
    if len(classes) == 1:
        cq = Access.FORBIDDEN.value
    elif ortho and all(f == 1 for f in fibers):
        cq = Access.QUALIFIED.value
    else:
        cq = Access.INTERMEDIATE.value
    lin = classify(scheme, A)
    ell = lin.ell
    match = (
        cq == lin.kind.value
        and ortho
        and len(classes) == p**ell
        and all(f == p ** (k - ell) for f in fibers)
    )
    return VerifyReport(A, cq, lin.kind.value, ell, len(classes), fibers, ortho, match)


def holevo_numeric(scheme: Scheme, A: Iterable[int], phi: PureState | None = None) -> float:
    """Holevo information (bits) between a uniform secret and ``ρ_A``."""
    return holevo_partial(scheme, A, range(1, scheme.k + 1), phi)


def holevo_partial(
    scheme: Scheme, A: Iterable[int], B: Iterable[int], phi: PureState | None = None
) -> float:
    """Holevo information (bits) between the secret coordinates in ``B``
    (1-based) and ``ρ_A``, the other coordinates being uniform."""
    A = tuple(sorted(set(A)))
    B = sorted(set(B))
    p, k = scheme.field.p, scheme.k
    if not A or not B:
        return 0.0
    if p ** len(A) > MAX_REDUCED_DIM:
        raise TooLarge(f"p^|A| = {p ** len(A)} exceeds {MAX_REDUCED_DIM}")
    if p**k > MAX_SECRETS:
        raise TooLarge(f"p^k = {p**k} exceeds {MAX_SECRETS}")
    enc = _Encoder(scheme, phi)
    rest = [j for j in range(1, k + 1) if j not in B]
    dim = p ** len(A)
    total = np.zeros((dim, dim), dtype=complex)
    cond = 0.0
    n_b = p ** len(B)
    n_rest = p ** len(rest)
    for mb in product(range(p), repeat=len(B)):
        rho_b = np.zeros((dim, dim), dtype=complex)
        for mr in product(range(p), repeat=len(rest)):
            m = [0] * k
            for j, v in zip(B, mb):
                m[j - 1] = v
            for j, v in zip(rest, mr):
                m[j - 1] = v
            K = enc.factor(m, A)
            rho_b += K @ K.conj().T
        rho_b /= n_rest
        cond += von_neumann_entropy(rho_b)
        total += rho_b
    total /= n_b
    return von_neumann_entropy(total) - cond / n_b
