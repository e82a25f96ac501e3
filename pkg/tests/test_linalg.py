import random

import pytest

from sympshare.errors import NotASubspacePair
from sympshare.field import field_make, gf
from sympshare.linalg import (
    coord_project,
    coord_restrict,
    full_space,
    intersect,
    nullspace,
    quotient_dim,
    rank,
    rref_basis,
    subspace_sum,
    zero_space,
)
from sympshare.symplectic import symp_dual, symp_space

from conftest import V1, Z4


def rand_space(F, dim_max, N, rng):
    return rref_basis([[rng.randrange(F.q) for _ in range(N)] for _ in range(rng.randint(0, dim_max))], F, N)


def test_rref_canonical():
    F = field_make(3)
    U = rref_basis([(1, 1, 1, 0), (2, 2, 2, 0)], F)
    assert U.basis == ((1, 1, 1, 0),)
    assert U.dim == 1
    assert rref_basis([], F, 4).dim == 0
    assert symp_space(F, 4, [V1 + Z4, Z4 + V1]).dim == 2


def test_intersection_cases():
    F = field_make(3)
    rng = random.Random(1)
    U = rand_space(F, 4, 6, rng)
    assert intersect(U, U) == U
    assert intersect(U, zero_space(F, 6)) == zero_space(F, 6)
    for _ in range(50):
        U, V = rand_space(F, 5, 6, rng), rand_space(F, 5, 6, rng)
        # independent rank count for dim(U+V)
        r = rank(list(U.basis) + list(V.basis), F, 6)
        assert intersect(U, V).dim == U.dim + V.dim - r
        assert subspace_sum(U, V).dim == r


def test_quotient_dim():
    F = field_make(3)
    V = symp_space(F, 4, [V1 + Z4, Z4 + V1])
    assert quotient_dim(V, V) == 0
    assert quotient_dim(V, symp_space(F, 4)) == 2
    assert quotient_dim(full_space(F, 8, True), symp_dual(V)) == 2
    with pytest.raises(NotASubspacePair):
        quotient_dim(symp_space(F, 4), V)


def test_restrict_and_project():
    F = field_make(3)
    V = symp_space(F, 4, [V1 + Z4, Z4 + V1])
    assert coord_restrict(V, [1, 2, 3, 4]) == V
    assert coord_restrict(V, [1, 2, 3]).dim == 2
    assert coord_restrict(V, []).dim == 0
    assert coord_project(V, [1, 2, 3, 4]) == V
    assert coord_project(zero_space(F, 8, True), [1, 2]).dim == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_projection_kernel_identity(q):
    F = gf(q)
    rng = random.Random(q)
    for _ in range(40):
        V = rref_basis(
            [[rng.randrange(q) for _ in range(8)] for _ in range(rng.randint(0, 8))], F, 8, symplectic=True
        )
        A = [i for i in range(1, 5) if rng.random() < 0.5]
        Abar = [i for i in range(1, 5) if i not in A]
        assert coord_project(V, A).dim == V.dim - coord_restrict(V, Abar).dim


def test_nullspace_rank_nullity():
    F = gf(5)
    rng = random.Random(3)
    for _ in range(50):
        rows = [[rng.randrange(5) for _ in range(7)] for _ in range(rng.randint(0, 6))]
        ker = nullspace(rows, F, 7)
        assert len(ker) + rank(rows, F, 7) == 7
        assert all(F.dot(r, v) == 0 for r in rows for v in ker)
