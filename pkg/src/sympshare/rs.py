"""Reed-Solomon constructions.

* :func:`build_strong_rs` - the strongly secure scheme with ``n = q`` shares,
  ``C_S = RS((n-k-s)/2)^2`` and ``C_R = RS((n-s)/2)^2``.
* :func:`build_insecure` - the ``s = 0`` scheme over an even field whose
  ``n-1`` shares pin down individual secret symbols.
* :func:`puncture` - fewer than ``q`` participants by discarding shares.
* :class:`MSScheme` - the classical McEliece-Sarwate ramp scheme used as the
  baseline.

Evaluation points default to ``g^0, g^1, ..., g^(q-2), 0`` for the primitive
element ``g`` of the field, so the leading points are nonzero and the last one
is zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (
    AlphaZeroInPrefix,
    BadParity,
    BPrimeTooLarge,
    DegeneratePuncture,
    DegreeTooLarge,
    DuplicateAlpha,
    FieldMismatch,
    OddQ,
    OutOfRange,
    SympShareError,
    TooManyParticipants,
)
from .field import FieldSpec, gf, is_prime
from .linalg import (
    Subspace,
    coord_project,
    coord_restrict,
    enum_cap,
    min_hamming_weight,
    rank,
    rref_basis,
    span,
)
from .scheme import (
    Scheme,
    access_report,
    info_amount,
    iter_subsets,
    partial_leakage,
    scheme_build,
)
from .symplectic import symp_dual

Vector = tuple[int, ...]


# -- polynomials, coefficient lists lowest degree first ----------------------------


def poly_eval(F: FieldSpec, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_mul(F: FieldSpec, f: Sequence[int], g: Sequence[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def poly_add(F: FieldSpec, f: Sequence[int], g: Sequence[int]) -> list[int]:
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] = a
    for i, b in enumerate(g):
        out[i] = F.add(out[i], b)
    return out


def vanishing_poly(F: FieldSpec, roots: Iterable[int]) -> list[int]:
    out = [1]
    for r in roots:
        out = poly_mul(F, out, [F.neg(r), 1])
    return out


def interpolate(F: FieldSpec, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Lagrange interpolation: the unique polynomial of degree < len(xs)."""
    if len(set(xs)) != len(xs):
        raise DuplicateAlpha("interpolation nodes must be distinct")
    out = [0] * len(xs)
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if not yj:
            continue
        basis = [1]
        denom = 1
        for i, xi in enumerate(xs):
            if i != j:
                basis = poly_mul(F, basis, [F.neg(xi), 1])
                denom = F.mul(denom, F.sub(xj, xi))
        c = F.div(yj, denom)
        for t, b in enumerate(basis):
            out[t] = F.add(out[t], F.mul(c, b))
    return out


def evaluate_all(F: FieldSpec, coeffs: Sequence[int], alphas: Sequence[int]) -> tuple[int, ...]:
    return tuple(poly_eval(F, coeffs, a) for a in alphas)


def default_alphas(F: FieldSpec) -> list[int]:
    return list(F.nonzero_ordered()) + [0]


# -- codes -------------------------------------------------------------------------


def _check_alphas(F: FieldSpec, alphas: Sequence[int]) -> None:
    F.check(alphas)
    if len(set(alphas)) != len(alphas):
        raise DuplicateAlpha(f"evaluation points {list(alphas)} are not distinct")


def rs_code(F: FieldSpec, n: int, ktilde: int, alphas: Sequence[int] | None = None) -> Subspace:
    """``RS(n, ktilde) = {(g(α_1), ..., g(α_n)) : deg g < ktilde}`` in plain layout."""
    alphas = list(alphas) if alphas is not None else default_alphas(F)[:n]
    if len(alphas) != n:
        raise DuplicateAlpha(f"{len(alphas)} evaluation points for length {n}")
    _check_alphas(F, alphas)
    if not (0 <= ktilde <= n):
        raise DegreeTooLarge(f"dimension {ktilde} outside 0..{n}")
    rows = [[F.pow(a, i) for a in alphas] for i in range(ktilde)]
    return rref_basis(rows, F, n)


def pair_code(D1: Subspace, D2: Subspace | None = None) -> Subspace:
    """``{(a|b) : a ∈ D1, b ∈ D2}`` in symplectic layout."""
    D2 = D1 if D2 is None else D2
    n = D1.ambient_dim
    zero = (0,) * n
    rows = [tuple(r) + zero for r in D1.basis] + [zero + tuple(r) for r in D2.basis]
    return rref_basis(rows, D1.field, 2 * n, symplectic=True)


@dataclass(frozen=True)
class RsParams:
    field: FieldSpec
    n: int
    k: int
    s: int
    alphas: tuple[int, ...]

    @property
    def half(self) -> int:
        return self.k // 2

    @property
    def forbid(self) -> int:
        """``(n+s)/2``: largest forbidden size."""
        return (self.n + self.s) // 2

    @property
    def qualify(self) -> int:
        """``(n+k+s)/2``: smallest qualified size."""
        return (self.n + self.k + self.s) // 2


def rs_params(F: FieldSpec, k: int, s: int, alphas: Sequence[int] | None = None) -> RsParams:
    n = F.q
    alphas = tuple(alphas) if alphas is not None else tuple(default_alphas(F))
    if len(alphas) != n:
        raise DuplicateAlpha(f"need {n} evaluation points, got {len(alphas)}")
    _check_alphas(F, alphas)
    if k < 2 or k % 2 or s < 0 or n - s - k < 0 or (n - s - k) % 2:
        raise BadParity(f"need k >= 2 even and n-s-k >= 0 even (n={n}, k={k}, s={s})")
    if any(a == 0 for a in alphas[: k // 2]):
        raise AlphaZeroInPrefix("the first k/2 evaluation points must be nonzero")
    return RsParams(F, n, k, s, alphas)


def rs_encode(params: RsParams, m: Sequence[int]) -> Vector:
    """Representative ``(g3(α) | g4(α))`` of ``f(m)`` with ``g3 = x^{(n+s)/2} g1``
    and ``g1(α_j) = m_j / α_j^{(n+s)/2}`` for ``j <= k/2`` (same for g4/g2 with
    the second half of ``m``)."""
    F, half, shift = params.field, params.half, params.forbid
    if len(m) != params.k:
        raise FieldMismatch(f"secret of length {len(m)}, expected {params.k}")
    F.check(m)
    xs = params.alphas[:half]
    scale = [F.inv(F.pow(a, shift)) for a in xs]
    g1 = interpolate(F, xs, [F.mul(mj, c) for mj, c in zip(m[:half], scale)])
    g2 = interpolate(F, xs, [F.mul(mj, c) for mj, c in zip(m[half:], scale)])
    g3 = [0] * shift + g1
    g4 = [0] * shift + g2
    return evaluate_all(F, g3, params.alphas) + evaluate_all(F, g4, params.alphas)


def _unit(k: int, j: int) -> list[int]:
    return [int(i == j) for i in range(k)]


def build_strong_rs(F: FieldSpec, k: int, s: int, alphas: Sequence[int] | None = None) -> Scheme:
    params = rs_params(F, k, s, alphas)
    n, al = params.n, params.alphas
    code = lambda d: rs_code(F, n, d, al)  # noqa: E731
    c_s = pair_code(code((n - k - s) // 2))
    c_r = pair_code(code((n - s) // 2))
    c_max = pair_code(code(n // 2), code((n + 1) // 2))
    reps = [rs_encode(params, _unit(k, j)) for j in range(k)]
    scheme = scheme_build(
        c_s,
        c_r,
        reps,
        c_max=c_max,
        k=k,
        s=s,
        meta={"construction": "strong_rs", "q": F.q, "k": k, "s": s, "n_full": n, "alphas": list(al)},
    )
    if scheme.c_r_dual != pair_code(code((n + s) // 2)) or scheme.c_s_dual != pair_code(code((n + k + s) // 2)):
        raise SympShareError("symplectic duals do not match the expected Reed-Solomon pairs")
    return scheme


def params_of(scheme: Scheme) -> RsParams:
    meta = scheme.meta
    if meta.get("construction") != "strong_rs":
        raise SympShareError("scheme was not built by build_strong_rs")
    F = scheme.field
    return RsParams(F, meta["n_full"], meta["k"], meta["s"], tuple(meta["alphas"]))


# -- closed forms ------------------------------------------------------------------


def ell(a: int, b: int, n: int, k: int, s: int) -> int:
    """Leakage of a ``b``-coordinate half-block to ``a`` shares.  At ``b = k/2``
    this is the whole half block, where the formula still holds because the
    codes involved are MDS."""
    if not (0 <= a <= n) or not (0 <= b <= k // 2):
        raise OutOfRange(f"ell({a}, {b}) outside 0<=a<={n}, 0<=b<={k // 2}")
    top = (n + k + s) // 2
    if a <= top - b:
        return 0
    if a <= top:
        return a + b - top
    return b


def closed_form_info(params: RsParams, a: int) -> int:
    n, k, s = params.n, params.k, params.s
    if not (0 <= a <= n):
        raise OutOfRange(f"|A| = {a} outside 0..{n}")
    if 2 * a <= n + s:
        return 0
    if 2 * a <= n + k + s:
        return 2 * a - (n + s)
    return k


def closed_form_partial(params: RsParams, a: int, b1: int, b2: int) -> int:
    half = params.half
    if not (0 <= b1 <= half and 0 <= b2 <= half) or not (0 <= a <= params.n):
        raise OutOfRange(f"({a}, {b1}, {b2}) outside the admissible range")
    n, k, s = params.n, params.k, params.s
    return ell(a, b1, n, k, s) + ell(a, b2, n, k, s)


def d_code(params: RsParams, b_prime: Iterable[int], verify: bool = True) -> Subspace:
    """``D_{B'} = RS((n+s)/2) + span{a-part of f(e_j) : j ∉ B'}`` (plain layout).

    With ``verify`` the dimension ``(n+k+s)/2 - |B'|`` is checked and, when the
    code is small enough to enumerate, the minimum distance
    ``(n-k-s)/2 + 1 + |B'|`` as well.
    """
    b_prime = sorted(set(b_prime))
    if len(b_prime) > params.half:
        raise BPrimeTooLarge(f"|B'| = {len(b_prime)} exceeds k/2 = {params.half}")
    for j in b_prime:
        if not (1 <= j <= params.half):
            raise OutOfRange(f"B' index {j} outside 1..{params.half}")
    F, n = params.field, params.n
    base = rs_code(F, n, params.forbid, params.alphas)
    extra = [rs_encode(params, _unit(params.k, j - 1))[:n] for j in range(1, params.half + 1) if j not in b_prime]
    D = span(base, extra)
    if verify:
        want_dim = params.qualify - len(b_prime)
        if D.dim != want_dim:
            raise SympShareError(f"D_B' has dimension {D.dim}, expected {want_dim}")
        if F.q**D.dim <= enum_cap():
            want_d = (n - params.k - params.s) // 2 + 1 + len(b_prime)
            got = min_hamming_weight(D)
            if got != want_d:
                raise SympShareError(f"D_B' has minimum distance {got}, expected {want_d}")
    return D


def closed_form_report(scheme: Scheme, params: RsParams | None = None) -> dict:
    """Compare information and partial leakage of every share set against the
    closed forms.  For a punctured scheme the share sets range over the kept
    positions while the closed forms use the original parameters."""
    params = params if params is not None else params_of(scheme)
    half = params.half
    info_bad, partial_bad = [], []
    checked_info = checked_partial = 0
    blocks1 = [B for size in range(half) for B in combinations(range(1, half + 1), size)]
    blocks2 = [tuple(half + j for j in B) for B in blocks1]
    for A in iter_subsets(scheme.n):
        a = len(A)
        got = info_amount(scheme, A)
        want = closed_form_info(params, a)
        checked_info += 1
        if got != want:
            info_bad.append({"A": list(A), "got": got, "expected": want})
        for B1 in blocks1:
            for B2 in blocks2:
                got = partial_leakage(scheme, A, B1 + B2)
                want = closed_form_partial(params, a, len(B1), len(B2))
                checked_partial += 1
                if got != want:
                    partial_bad.append({"A": list(A), "B": list(B1 + B2), "got": got, "expected": want})
    return {
        "info_checked": checked_info,
        "info_mismatches": info_bad,
        "partial_checked": checked_partial,
        "partial_mismatches": partial_bad,
        "ok": not info_bad and not partial_bad,
    }


def d_code_report(params: RsParams, b_prime: Iterable[int]) -> dict:
    """Measured dimension and minimum distance of ``D_{B'}`` and
    ``dim P_A(RS((n+k+s)/2)) - dim P_A(D_{B'})`` for every A, each against its
    closed form."""
    b_prime = sorted(set(b_prime))
    D = d_code(params, b_prime, verify=False)
    big = rs_code(params.field, params.n, params.qualify, params.alphas)
    want_dim = params.qualify - len(b_prime)
    want_dist = (params.n - params.k - params.s) // 2 + 1 + len(b_prime)
    dist = min_hamming_weight(D)
    bad = []
    for A in iter_subsets(params.n, range(1, params.n + 1)):
        got = coord_project(big, A).dim - coord_project(D, A).dim
        want = ell(len(A), len(b_prime), params.n, params.k, params.s)
        if got != want:
            bad.append({"A": list(A), "got": got, "expected": want})
    return {
        "b_prime": b_prime,
        "dim": D.dim,
        "expected_dim": want_dim,
        "distance": dist,
        "expected_distance": want_dist,
        "mismatches": bad,
        "ok": not bad and D.dim == want_dim and dist == want_dist,
    }


# -- the insecure example ------------------------------------------------------------


def build_insecure(q: int | FieldSpec) -> Scheme:
    """``C_S = 0``, ``C_R = C_max = RS(n/2)^2``, ``k = n = q``, ``s = 0``; the secret
    map sends ``m`` to the evaluations of ``m_1 x^{n/2} + ... + m_{n/2} x^{n-1}``
    and of the analogous polynomial for the second half."""
    F = q if isinstance(q, FieldSpec) else gf(q)
    if F.q % 2:
        raise OddQ(f"q = {F.q} is odd")
    n = F.q
    half = n // 2
    alphas = default_alphas(F)
    zero = (0,) * n
    c_r = pair_code(rs_code(F, n, half, alphas))
    c_s = rref_basis([], F, 2 * n, symplectic=True)
    reps = []
    for j in range(half):
        ev = tuple(F.pow(a, half + j) for a in alphas)
        reps.append(ev + zero)
    for j in range(half):
        ev = tuple(F.pow(a, half + j) for a in alphas)
        reps.append(zero + ev)
    return scheme_build(
        c_s, c_r, reps, c_max=c_r, k=n, s=0, meta={"construction": "insecure", "q": F.q, "alphas": alphas}
    )


def determined_coordinates(scheme: Scheme, A: Iterable[int]) -> list[int]:
    """Secret coordinates ``j`` that ``A`` learns completely."""
    A = list(A)
    return [j for j in range(1, scheme.k + 1) if partial_leakage(scheme, A, [j]) == 1]


# -- puncturing -----------------------------------------------------------------------


def puncture(scheme: Scheme, A: Iterable[int]) -> Scheme:
    """Keep only the shares in ``A``: ``C_S' = P_A(C_S ∩ F^A)``,
    ``C_R' = P_A(C_R ∩ F^A)`` and secret representatives ``P_A(r_j)``.

    The new scheme has ``n' = |A|`` positions, the same secret length and
    ``s' = n' - dim C_R'``.  Raises :class:`DegeneratePuncture` when the kept
    shares cannot carry the whole secret.
    """
    A = sorted(set(A))
    if not A:
        raise DegeneratePuncture("cannot keep zero shares")
    if A == list(range(1, scheme.n + 1)):
        return scheme
    c_s = coord_project(coord_restrict(scheme.c_s, A), A)
    c_r = coord_project(coord_restrict(scheme.c_r, A), A)
    cols = [i - 1 for i in A] + [scheme.n + i - 1 for i in A]
    reps = [tuple(r[c] for c in cols) for r in scheme.secret_reps]
    if c_r.dim - c_s.dim != scheme.k:
        raise DegeneratePuncture(f"kept shares {A} carry {c_r.dim - c_s.dim} of {scheme.k} symbols")
    meta = dict(scheme.meta)
    meta["kept"] = list(A) if "kept" not in meta else [meta["kept"][i - 1] for i in A]
    try:
        return scheme_build(c_s, c_r, reps, meta=meta)
    except SympShareError as exc:
        raise DegeneratePuncture(str(exc)) from exc


# -- McEliece-Sarwate baseline ----------------------------------------------------------


@dataclass(frozen=True)
class MSScheme:
    """Shares ``g(α_{k+i})`` of a random ``g`` with ``deg g < (n+k+s)/2`` and
    ``g(α_j) = m_j`` for the first ``k`` points."""

    field: FieldSpec
    n: int
    k: int
    s: int
    alphas: tuple[int, ...]

    @property
    def degree_bound(self) -> int:
        return (self.n + self.k + self.s) // 2

    def ms_thresholds(self) -> tuple[int, int]:
        """(smallest reconstructing size, largest size with no information)."""
        return (self.n + self.k + self.s) // 2, (self.n - self.k + self.s) // 2

    def ms_encode(self, m: Sequence[int], rng: random.Random) -> tuple[int, ...]:
        F, k = self.field, self.k
        F.check(m)
        secret_pts = self.alphas[:k]
        base = interpolate(F, secret_pts, list(m))
        h = [rng.randrange(F.q) for _ in range(self.degree_bound - k)]
        g = poly_add(F, base, poly_mul(F, vanishing_poly(F, secret_pts), h))
        return evaluate_all(F, g, self.alphas[k:])

    def ms_decode(self, shares: dict[int, int]) -> tuple[int, ...]:
        """Recover the secret from at least ``(n+k+s)/2`` shares (1-based keys)."""
        F = self.field
        if len(shares) < self.degree_bound:
            raise SympShareError(f"need {self.degree_bound} shares, got {len(shares)}")
        idx = sorted(shares)[: self.degree_bound]
        g = interpolate(F, [self.alphas[self.k + i - 1] for i in idx], [shares[i] for i in idx])
        return evaluate_all(F, g, self.alphas[: self.k])

    def ms_leakage(self, A: Iterable[int]) -> int:
        """``rank E_S + rank E_A - rank [E_S; E_A]`` for the evaluation maps on
        polynomials of degree below the bound: the q-ary mutual information
        between the secret and the shares in ``A``."""
        F, D, k = self.field, self.degree_bound, self.k
        A = sorted(set(A))
        for i in A:
            if not (1 <= i <= self.n):
                raise OutOfRange(f"participant {i} outside 1..{self.n}")
        rows_s = [[F.pow(a, e) for e in range(D)] for a in self.alphas[:k]]
        rows_a = [[F.pow(self.alphas[k + i - 1], e) for e in range(D)] for i in A]
        return rank(rows_s, F, D) + rank(rows_a, F, D) - rank(rows_s + rows_a, F, D)


def ms_scheme(F: FieldSpec, n: int, k: int, s: int, alphas: Sequence[int] | None = None) -> MSScheme:
    if n + k > F.q:
        raise TooManyParticipants(f"n + k = {n + k} exceeds q = {F.q}; at most q - k = {F.q - k} participants")
    if (n + k + s) % 2 or (n - k + s) < 0:
        raise BadParity(f"(n+k+s) must be even and n-k+s >= 0 (n={n}, k={k}, s={s})")
    if (n + k + s) // 2 < k:
        raise DegreeTooLarge("degree bound must be at least k")
    alphas = tuple(alphas) if alphas is not None else tuple(range(n + k)) if F.m == 1 else tuple(default_alphas(F)[: n + k])
    if len(alphas) != n + k:
        raise DuplicateAlpha(f"need {n + k} evaluation points, got {len(alphas)}")
    _check_alphas(F, alphas)
    return MSScheme(F, n, k, s, alphas)


def _next_prime(x: int) -> int:
    while not is_prime(x):
        x += 1
    return x


def ms_profile(ms: MSScheme) -> list[int]:
    """Leakage for ``|A| = 0..n`` (any set of that size; the code is MDS) after
    checking that every set of a given size agrees when ``n`` is small."""
    out = []
    for a in range(ms.n + 1):
        vals = {ms.ms_leakage(A) for A in _sample_sets(ms.n, a)}
        if len(vals) != 1:
            raise SympShareError(f"leakage for |A| = {a} depends on the set: {sorted(vals)}")
        out.append(vals.pop())
    return out


def _sample_sets(n: int, a: int, limit: int = 64):
    for i, A in enumerate(combinations(range(1, n + 1), a)):
        if i >= limit:
            break
        yield A


def ms_compare(q: int, k: int, s: int) -> dict:
    """Side-by-side thresholds of the strongly secure RS scheme with ``n = q``
    and McEliece-Sarwate instances: one with the same ``(n, k, s)`` and one with
    the same access structure (half the secret)."""
    F = gf(q)
    n = q
    ours = build_strong_rs(F, k, s)
    params = params_of(ours)
    if n <= 10:
        rep = access_report(ours, exhaustive=True)
        forb = max(row["size"] for row in rep.per_size if row["max"] == 0)
        qual = min(row["size"] for row in rep.per_size if row["min"] == k)
        profile = [row["max"] for row in rep.per_size]
    else:
        forb, qual = params.forbid, params.qualify
        profile = [closed_form_info(params, a) for a in range(n + 1)]

    def ms_block(kk: int, ss: int) -> dict:
        Fm = gf(_next_prime(n + kk))
        ms = ms_scheme(Fm, n, kk, ss)
        prof = ms_profile(ms)
        recon, priv = ms.ms_thresholds()
        return {
            "field": Fm.q,
            "n": n,
            "k": kk,
            "s": ss,
            "profile": prof,
            "reconstruct_from": recon,
            "no_information_upto": priv,
            "empirical_reconstruct_from": min(a for a in range(n + 1) if all(v == kk for v in prof[a:])),
            "empirical_no_information_upto": max(a for a in range(n + 1) if all(v == 0 for v in prof[: a + 1])),
            "max_participants_over_field": Fm.q - kk,
        }

    same_params = ms_block(k, s)
    same_access = ms_block(k // 2, s + k // 2)
    return {
        "proposed": {
            "q": q,
            "n": n,
            "k": k,
            "s": s,
            "profile": profile,
            "forbidden_upto": forb,
            "qualified_from": qual,
            "max_participants": q,
        },
        "ms_same_parameters": same_params,
        "ms_same_access_structure": same_access,
        "ms_max_participants_over_GF(q)": q - k,
        "forbidden_threshold_gain": forb - same_params["no_information_upto"],
        "secret_size_ratio": k / same_access["k"],
    }
