"""Seeded random-instance property checks shared by the unit and acceptance suites.

Each check draws ``instances`` cases spread evenly over GF(2), GF(3), GF(5)
and GF(4) and returns the number of failing cases.
"""

import random

from sympshare.field import gf
from sympshare.gv import sample_nested_pair
from sympshare.linalg import coord_project, coord_restrict, nullspace, rank, rref_basis
from sympshare.scheme import (
    classify,
    complement_info,
    info_amount,
    iter_subsets,
    partial_leakage,
    scheme_build,
    with_c_max,
)
from sympshare.symplectic import lagrangian_extend, symp_dual

FIELDS = (2, 3, 5, 4)


def _cases(instances, seed):
    fields = [gf(q) for q in FIELDS]
    for i in range(instances):
        yield fields[i % len(fields)], random.Random(f"{seed}:{i}")


def _rand_rows(F, rng, rows, cols):
    return [[rng.randrange(F.q) for _ in range(cols)] for _ in range(rows)]


def _rand_scheme(F, rng, n_max=4):
    n = rng.randint(1, n_max)
    k = rng.randint(0, n)
    s = rng.randint(0, n - k)
    c_s, c_r = sample_nested_pair(F, n, k, s, rng)
    return scheme_build(c_s, c_r)


def duality_involution(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        n = rng.randint(1, 4)
        C = rref_basis(_rand_rows(F, rng, rng.randint(0, 2 * n), 2 * n), F, 2 * n, symplectic=True)
        D = symp_dual(C)
        bad += not (symp_dual(D) == C and C.dim + D.dim == 2 * n)
    return bad


def rank_nullity(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        cols = rng.randint(1, 8)
        M = _rand_rows(F, rng, rng.randint(0, 8), cols)
        ker = nullspace(M, F, cols)
        ok = rank(M, F, cols) + len(ker) == cols
        ok &= all(F.dot(r, v) == 0 for r in M for v in ker)
        bad += not ok
    return bad


def projection_kernel(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        n = rng.randint(1, 4)
        V = rref_basis(_rand_rows(F, rng, rng.randint(0, 2 * n), 2 * n), F, 2 * n, symplectic=True)
        A = [i for i in range(1, n + 1) if rng.random() < 0.5]
        Abar = [i for i in range(1, n + 1) if i not in A]
        bad += coord_project(V, A).dim != V.dim - coord_restrict(V, Abar).dim
    return bad


def info_monotone(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        sch = _rand_scheme(F, rng)
        A = [i for i in range(1, sch.n + 1) if rng.random() < 0.5]
        bigger = sorted(set(A) | {rng.randint(1, sch.n)})
        bad += info_amount(sch, A) > info_amount(sch, bigger)
    return bad


def duality_complement(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        sch = _rand_scheme(F, rng)
        A = [i for i in range(1, sch.n + 1) if rng.random() < 0.5]
        bad += info_amount(sch, A) + complement_info(sch, A) != sch.k
    return bad


def c_max_independence(instances=1000, seed=0):
    bad = 0
    for F, rng in _cases(instances, seed):
        sch = _rand_scheme(F, rng, n_max=3)
        other = with_c_max(sch, lagrangian_extend(sch.c_r, rng=rng))
        B = [j for j in range(1, sch.k + 1) if rng.random() < 0.5]
        for A in iter_subsets(sch.n):
            if (
                classify(sch, A) != classify(other, A)
                or info_amount(sch, A) != info_amount(other, A)
                or partial_leakage(sch, A, B) != partial_leakage(other, A, B)
            ):
                bad += 1
                break
    return bad


PROPERTIES = {
    "duality involution": duality_involution,
    "rank-nullity": rank_nullity,
    "projection/kernel identity": projection_kernel,
    "info monotonicity": info_monotone,
    "duality-complement identity": duality_complement,
    "C_max independence": c_max_independence,
}
