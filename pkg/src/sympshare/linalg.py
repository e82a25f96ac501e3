"""Canonical linear algebra on subspaces of GF(q)^N.

A :class:`Subspace` stores its reduced row-echelon basis, so two subspaces are
equal exactly when their bases are equal row for row.

Participant positions are numbered from 1, as in the usual secret-sharing
notation.  For a subspace in symplectic layout (``symplectic=True``, ambient
dimension ``2n`` with rows ``(a_1..a_n | b_1..b_n)``) position ``i`` owns the
two columns ``i-1`` and ``n+i-1``; in plain layout it owns column ``i-1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    FieldMismatch,
    IndexOutOfRange,
    NotASubspacePair,
)
from .field import FieldSpec

DEFAULT_MAX_ENUM = 1 << 24

Vector = tuple[int, ...]


def enum_cap() -> int:
    """Enumeration cap, overridable through ``SYMPSHARE_MAX_ENUM``."""
    raw = os.environ.get("SYMPSHARE_MAX_ENUM")
    if raw:
        return int(raw)
    return DEFAULT_MAX_ENUM


def rref(rows: Iterable[Sequence[int]], field: FieldSpec, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column system")
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        piv = None
        for i in range(top, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        lead = work[top][col]
        if lead != 1:
            work[top] = field.scale(work[top], field.inv(lead))
        prow = work[top]
        for i in range(len(work)):
            if i != top and work[i][col]:
                work[i] = field.axpy(work[i], work[i][col], prow)
        pivots.append(col)
        top += 1
    return work[:top], pivots


def rank(rows: Sequence[Sequence[int]], field: FieldSpec, ncols: int) -> int:
    return len(rref(rows, field, ncols)[1])


def nullspace(rows: Sequence[Sequence[int]], field: FieldSpec, ncols: int) -> list[list[int]]:
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows, field, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [0] * ncols
        x[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                x[pc] = field.neg(row[free])
        basis.append(x)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A linear subspace held in canonical (reduced row-echelon) form."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple[Vector, ...]
    symplectic: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        """Number of positions: ``ambient_dim/2`` in symplectic layout."""
        return self.ambient_dim // 2 if self.symplectic else self.ambient_dim

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical coset representative of ``v`` modulo this subspace."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} vs ambient {self.ambient_dim}")
        w = list(v)
        F = self.field
        for row, pc in zip(self.basis, self.pivots):
            if w[pc]:
                w = F.axpy(w, w[pc], row)
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        _same_space(self, other)
        return all(other.contains(r) for r in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def with_layout(self, symplectic: bool) -> "Subspace":
        return Subspace(self.field, self.ambient_dim, self.basis, symplectic)

    def __repr__(self) -> str:
        kind = "symplectic " if self.symplectic else ""
        return f"<{kind}Subspace dim {self.dim} in {self.field!r}^{self.ambient_dim}>"


def _same_space(U: Subspace, V: Subspace) -> None:
    if U.field != V.field:
        raise FieldMismatch("subspaces over different fields")
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {U.ambient_dim} and {V.ambient_dim} differ")


def rref_basis(
    vectors: Iterable[Sequence[int]],
    field: FieldSpec,
    ambient_dim: int | None = None,
    *,
    symplectic: bool = False,
) -> Subspace:
    """Canonical subspace spanned by ``vectors``."""
    rows = [list(v) for v in vectors]
    if ambient_dim is None:
        if not rows:
            raise DimensionMismatch("ambient_dim is required for an empty generating set")
        ambient_dim = len(rows[0])
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        field.check(r)
    if symplectic and ambient_dim % 2:
        raise DimensionMismatch("symplectic layout needs an even ambient dimension")
    red, _ = rref(rows, field, ambient_dim)
    return Subspace(field, ambient_dim, tuple(tuple(r) for r in red), symplectic)


def zero_space(field: FieldSpec, ambient_dim: int, symplectic: bool = False) -> Subspace:
    return Subspace(field, ambient_dim, (), symplectic)


def full_space(field: FieldSpec, ambient_dim: int, symplectic: bool = False) -> Subspace:
    rows = tuple(tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim))
    return Subspace(field, ambient_dim, rows, symplectic)


def span(U: Subspace, vectors: Iterable[Sequence[int]]) -> Subspace:
    """``U + span(vectors)``."""
    return rref_basis(list(U.basis) + [list(v) for v in vectors], U.field, U.ambient_dim, symplectic=U.symplectic)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _same_space(U, V)
    return span(U, V.basis)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """``U ∩ V`` from the left kernel of the stacked bases."""
    _same_space(U, V)
    if not U.dim or not V.dim:
        return zero_space(U.field, U.ambient_dim, U.symplectic)
    F = U.field
    stacked = list(U.basis) + list(V.basis)
    # (lam | mu) with lam*U + mu*V = 0, i.e. the kernel of the transpose
    transpose = [[row[j] for row in stacked] for j in range(U.ambient_dim)]
    kern = nullspace(transpose, F, len(stacked))
    vecs = []
    for lam in kern:
        acc = [0] * U.ambient_dim
        for c, row in zip(lam[: U.dim], U.basis):
            if c:
                acc = F.axpy(acc, F.neg(c), row)
        vecs.append(acc)
    return rref_basis(vecs, F, U.ambient_dim, symplectic=U.symplectic)


def quotient_dim(V1: Subspace, V2: Subspace) -> int:
    """``dim V1/V2``; ``V2`` must lie inside ``V1``."""
    if not V2.issubset(V1):
        raise NotASubspacePair("second space is not contained in the first")
    return V1.dim - V2.dim


def position_columns(V: Subspace, A: Iterable[int]) -> list[int]:
    """Columns owned by the 1-based positions in ``A`` (a-columns first)."""
    n = V.n
    pos = sorted(set(A))
    for i in pos:
        if not (1 <= i <= n):
            raise IndexOutOfRange(f"position {i} outside 1..{n}")
    if V.symplectic:
        return [i - 1 for i in pos] + [n + i - 1 for i in pos]
    return [i - 1 for i in pos]


def coord_restrict(V: Subspace, A: Iterable[int]) -> Subspace:
    """Vectors of ``V`` vanishing at every position outside ``A``."""
    keep = set(position_columns(V, A))
    outside = [j for j in range(V.ambient_dim) if j not in keep]
    if not outside:
        return V
    if not V.dim:
        return V
    F = V.field
    # lam with (lam * basis)[outside] == 0
    system = [[row[j] for row in V.basis] for j in outside]
    kern = nullspace(system, F, V.dim)
    vecs = []
    for lam in kern:
        acc = [0] * V.ambient_dim
        for c, row in zip(lam, V.basis):
            if c:
                acc = F.axpy(acc, F.neg(c), row)
        vecs.append(acc)
    return rref_basis(vecs, F, V.ambient_dim, symplectic=V.symplectic)


def coord_project(V: Subspace, A: Iterable[int]) -> Subspace:
    """Projection onto the positions in ``A``; the layout is preserved, so a
    symplectic space projects into ``GF(q)^{2|A|}`` as ``(a_A | b_A)``."""
    cols = position_columns(V, A)
    rows = [[row[j] for j in cols] for row in V.basis]
    return rref_basis(rows, V.field, len(cols), symplectic=V.symplectic)


def complement_reps(V: Subspace, W: Subspace) -> list[Vector]:
    """Scan the echelon basis of ``V`` and keep each row independent of ``W``
    plus the rows kept so far.  The kept rows, reduced modulo ``W``, form a
    basis of ``(V + W)/W``."""
    _same_space(V, W)
    cur = W
    out = []
    for row in V.basis:
        if not cur.contains(row):
            out.append(W.reduce(row))
            cur = span(cur, [row])
    return out


# -- enumeration -------------------------------------------------------------


def combos_array(rows: Sequence[Sequence[int]], field: FieldSpec, ncols: int) -> np.ndarray:
    """Every linear combination of ``rows`` as an integer array of shape
    ``(q**len(rows), ncols)``.  Row ``0`` is the zero vector; the coefficient of
    the last input row varies fastest."""
    arr = np.zeros((1, ncols), dtype=np.int64)
    coeffs = np.arange(field.q, dtype=np.int64)
    for row in rows:
        r = np.asarray(row, dtype=np.int64)
        scaled = field.np_mul(coeffs[:, None], r[None, :])  # (q, ncols)
        arr = field.np_add(arr[:, None, :], scaled[None, :, :]).reshape(-1, ncols)
    return arr


def iter_span_blocks(
    rows: Sequence[Sequence[int]], field: FieldSpec, ncols: int, block_bits: int = 16
) -> Iterator[np.ndarray]:
    """Yield the span of ``rows`` in blocks, at most ``~2**block_bits`` vectors each."""
    q = field.q
    inner = 0
    size = 1
    while inner < len(rows) and size * q <= (1 << block_bits):
        size *= q
        inner += 1
    inner = max(inner, min(1, len(rows)))
    tail = combos_array(rows[len(rows) - inner :], field, ncols)
    outer = rows[: len(rows) - inner]
    outer_np = [np.asarray(r, dtype=np.int64) for r in outer]
    for cs in product(range(q), repeat=len(outer)):
        off = np.zeros(ncols, dtype=np.int64)
        for c, r in zip(cs, outer_np):
            if c:
                off = field.np_add(off, field.np_mul(np.int64(c), r))
        yield field.np_add(tail, off[None, :]) if any(cs) else tail


def check_enum(field: FieldSpec, dim: int, what: str = "space") -> None:
    cap = enum_cap()
    if field.q**dim > cap:
        raise EnumerationTooLarge(f"{what} has {field.q}^{dim} elements, cap is {cap}")


def min_hamming_weight(V: Subspace) -> int | None:
    """Minimum Hamming weight of a nonzero vector of ``V`` (plain layout), by
    enumeration.  ``None`` for the zero space."""
    if not V.dim:
        return None
    check_enum(V.field, V.dim, "code")
    best = V.ambient_dim
    first = True
    for block in iter_span_blocks(V.basis, V.field, V.ambient_dim):
        w = np.count_nonzero(block, axis=1)
        if first:
            w = w[1:]
            first = False
        if w.size:
            best = min(best, int(w.min()))
    return best
