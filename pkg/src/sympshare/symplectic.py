"""The symplectic form on GF(q)^{2n} and the distances built on it.

Vectors are tuples of length ``2n`` laid out as ``(a_1..a_n | b_1..b_n)`` and

    <(a|b), (a'|b')>_s = <a, b'> - <a', b>.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    IndexOutOfRange,
    NotASubspacePair,
    NotSelfOrthogonal,
)
from .field import Felt, FieldSpec
from .linalg import (
    Subspace,
    check_enum,
    coord_restrict,
    enum_cap,
    iter_span_blocks,
    nullspace,
    rref_basis,
    span,
    combos_array,
)

SympSpace = Subspace

MAX_SUBSET_N = 24


def symp_space(field: FieldSpec, n: int, rows: Iterable[Sequence[int]] = ()) -> Subspace:
    """Subspace of GF(q)^{2n} in symplectic layout."""
    return rref_basis(rows, field, 2 * n, symplectic=True)


def _split(v: Sequence[int]) -> tuple[Sequence[int], Sequence[int]]:
    if len(v) % 2:
        raise DimensionMismatch("symplectic vectors have even length")
    n = len(v) // 2
    return v[:n], v[n:]


def symp_inner_raw(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    a, b = _split(u)
    a2, b2 = _split(v)
    return field.sub(field.dot(a, b2), field.dot(a2, b))


def symp_inner(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Felt:
    return Felt(symp_inner_raw(field, u, v), field)


def symp_dual(C: Subspace) -> Subspace:
    """Symplectic complement ``C^⊥s``."""
    if C.ambient_dim % 2:
        raise DimensionMismatch("symplectic layout needs an even ambient dimension")
    F, n = C.field, C.ambient_dim // 2
    # w = (x|z) is orthogonal to c = (a|b) iff x.b - a.z = 0, i.e. w . (b | -a) = 0
    rows = [list(c[n:]) + [F.neg(x) for x in c[:n]] for c in C.basis]
    kern = nullspace(rows, F, 2 * n) if rows else None
    if kern is None:
        return rref_basis([[int(i == j) for j in range(2 * n)] for i in range(2 * n)], F, 2 * n, symplectic=True)
    return rref_basis(kern, F, 2 * n, symplectic=True)


def is_self_orthogonal(C: Subspace) -> bool:
    F = C.field
    rows = C.basis
    return all(symp_inner_raw(F, rows[i], rows[j]) == 0 for i in range(len(rows)) for j in range(i + 1, len(rows)))


def is_lagrangian(C: Subspace) -> bool:
    return 2 * C.dim == C.ambient_dim and is_self_orthogonal(C)


def swt(v: Sequence[int]) -> int:
    """Number of positions ``i`` with ``(a_i, b_i) != (0, 0)``."""
    a, b = _split(v)
    return sum(1 for x, y in zip(a, b) if x or y)


def _swt_rows(arr: np.ndarray, n: int) -> np.ndarray:
    return np.count_nonzero((arr[:, :n] != 0) | (arr[:, n:] != 0), axis=1)


def relative_dim(V1: Subspace, V2: Subspace, A: Iterable[int]) -> int:
    """``dim(F^A ∩ V1) - dim(F^A ∩ V2)``."""
    A = list(A)
    return coord_restrict(V1, A).dim - coord_restrict(V2, A).dim


def _check_pair(V1: Subspace, V2: Subspace, strict: bool) -> None:
    if V1.field != V2.field or V1.ambient_dim != V2.ambient_dim:
        raise NotASubspacePair("spaces live in different ambient spaces")
    if not V2.issubset(V1):
        raise NotASubspacePair("second space is not contained in the first")
    if strict and V1.dim == V2.dim:
        raise NotASubspacePair("coset distance needs a proper inclusion")


def coset_distance(V1: Subspace, V2: Subspace, method: str = "auto") -> int:
    """``min{swt(v) : v in V1 \\ V2}``.

    ``method="enumerate"`` walks every vector of ``V1``; ``"support"`` scans
    position sets by size and is exact as well.  ``"auto"`` enumerates when
    ``q^dim V1`` is within the enumeration cap and falls back to the support
    scan otherwise.
    """
    _check_pair(V1, V2, strict=True)
    if method == "auto":
        method = "enumerate" if V1.field.q**V1.dim <= enum_cap() else "support"
    if method == "support":
        return rgsw(V1, V2, 1)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    check_enum(V1.field, V1.dim, "V1")
    F, N, n = V1.field, V1.ambient_dim, V1.ambient_dim // 2
    # V1 = V2 (+) W; a vector lies outside V2 iff its W-part is nonzero
    cur = V2
    w_rows = []
    for row in V1.basis:
        if not cur.contains(row):
            w_rows.append(row)
            cur = span(cur, [row])
    best = n + 1
    v2_rows = list(V2.basis)
    # loop over the smaller factor, vectorise over the larger
    if F.q ** len(v2_rows) <= F.q ** len(w_rows):
        for v2_block in iter_span_blocks(v2_rows, F, N, block_bits=12):
            for v2 in v2_block:
                first = True
                for wb in iter_span_blocks(w_rows, F, N):
                    arr = F.np_add(wb, v2[None, :])
                    if first:
                        arr = arr[1:]
                        first = False
                    if arr.size:
                        best = min(best, int(_swt_rows(arr, n).min()))
    else:
        nonzero_w = combos_array(w_rows, F, N)[1:]
        for v2_block in iter_span_blocks(v2_rows, F, N):
            for w in nonzero_w:
                arr = F.np_add(v2_block, w[None, :])
                best = min(best, int(_swt_rows(arr, n).min()))
    return best


def rgsw(V1: Subspace, V2: Subspace, i: int) -> int:
    """i-th relative generalized symplectic weight:
    ``min{|A| : dim(F^A ∩ V1) - dim(F^A ∩ V2) >= i}``."""
    _check_pair(V1, V2, strict=False)
    gap = V1.dim - V2.dim
    if not (1 <= i <= gap):
        raise IndexOutOfRange(f"i = {i} outside 1..{gap}")
    n = V1.ambient_dim // 2
    if n > MAX_SUBSET_N:
        raise EnumerationTooLarge(f"n = {n} exceeds {MAX_SUBSET_N} positions")
    for size in range(1, n + 1):
        for A in combinations(range(1, n + 1), size):
            if relative_dim(V1, V2, A) >= i:
                return size
    raise AssertionError("unreachable: the full position set attains the gap")


def lagrangian_extend(C: Subspace, rng: random.Random | None = None, target_dim: int | None = None) -> Subspace:
    """Grow a self-orthogonal space to a Lagrangian one (``L = L^⊥s``).

    Without ``rng`` the growth is deterministic: at each step the first row of
    the echelon basis of ``L^⊥s`` not already in ``L`` is appended.  With
    ``rng`` a uniformly random vector of ``L^⊥s \\ L`` is appended instead.
    ``target_dim`` stops the growth early (used to sample self-orthogonal
    chains).
    """
    if C.ambient_dim % 2:
        raise DimensionMismatch("symplectic layout needs an even ambient dimension")
    if not is_self_orthogonal(C):
        raise NotSelfOrthogonal("input is not contained in its symplectic dual")
    n = C.ambient_dim // 2
    goal = n if target_dim is None else target_dim
    if not (C.dim <= goal <= n):
        raise DimensionMismatch(f"cannot grow a {C.dim}-dim space to {goal} in 2*{n} dims")
    L = C.with_layout(True)
    F = C.field
    while L.dim < goal:
        D = symp_dual(L)
        if rng is None:
            pick = next(row for row in D.basis if not L.contains(row))
        else:
            while True:
                coeffs = [rng.randrange(F.q) for _ in D.basis]
                v = [0] * (2 * n)
                for c, row in zip(coeffs, D.basis):
                    if c:
                        v = F.axpy(v, F.neg(c), row)
                if not L.contains(v):
                    pick = v
                    break
        L = span(L, [pick])
    return L
