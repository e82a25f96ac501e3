import random

import pytest

from sympshare.errors import BadParity, DegeneratePuncture, OddQ, TooManyParticipants
from sympshare.field import gf
from sympshare.linalg import coord_project, coord_restrict, rank, span
from sympshare.rs import (
    build_insecure,
    build_strong_rs,
    closed_form_info,
    closed_form_partial,
    closed_form_report,
    d_code,
    determined_coordinates,
    ell,
    interpolate,
    d_code_report,
    ms_compare,
    ms_scheme,
    pair_code,
    params_of,
    poly_eval,
    puncture,
    rs_code,
    rs_encode,
)
from sympshare.scheme import access_report, info_amount, iter_subsets, partial_leakage, strong_security_check
from sympshare.symplectic import symp_inner_raw


def test_rs_code_edges():
    F = gf(5)
    assert rs_code(F, 5, 0).dim == 0
    assert rs_code(F, 5, 5).dim == 5


def test_rs_dual_full_length():
    F = gf(5)
    G, H = rs_code(F, 5, 2), rs_code(F, 5, 3)
    assert all(F.dot(g, h) == 0 for g in G.basis for h in H.basis)
    assert G.dim + H.dim == 5


def test_interpolation_roundtrip():
    F = gf(9)
    rng = random.Random(0)
    xs = rng.sample(range(9), 5)
    ys = [rng.randrange(9) for _ in xs]
    g = interpolate(F, xs, ys)
    assert [poly_eval(F, g, x) for x in xs] == ys


def test_strong_rs_dims(rs7, rs5):
    assert (rs7.c_s.dim, rs7.c_r.dim) == (2, 6)
    rep = access_report(rs7)
    assert rep.t[1] == 4 and rep.r[4] == 6
    assert (rs5.c_s.dim, rs5.c_r.dim) == (2, 4)
    for A in iter_subsets(5):
        assert (info_amount(rs5, A) == 2) == (len(A) >= 4)
    with pytest.raises(BadParity):
        build_strong_rs(gf(7), 3, 2)


def test_encoder(rs7):
    p = params_of(rs7)
    F = p.field
    assert rs_encode(p, [0, 0, 0, 0]) == (0,) * 14
    rng = random.Random(1)
    for _ in range(20):
        m = [rng.randrange(7) for _ in range(4)]
        v = rs_encode(p, m)
        for j in range(2):
            assert v[j] == m[j]
            assert v[7 + j] == m[2 + j]
        assert rs7.c_s_dual.contains(v)
    reps = [rs_encode(p, [int(i == j) for i in range(4)]) for j in range(4)]
    assert span(rs7.c_r_dual, reps).dim == rs7.c_r_dual.dim + 4


def test_ell_values():
    assert all(ell(a, 0, 7, 4, 1) == 0 for a in range(8))
    assert ell(6, 1, 7, 4, 1) == 1
    assert ell(7, 1, 7, 4, 1) == 1
    p = params_of(build_strong_rs(gf(7), 4, 1))
    assert [closed_form_info(p, a) for a in range(8)] == [0, 0, 0, 0, 0, 2, 4, 4]
    assert closed_form_partial(p, 5, 1, 1) == 0
    assert closed_form_partial(p, 5, 0, 0) == 0


def test_d_code_small(rs5):
    p = params_of(rs5)
    D = d_code(p, [])
    assert D.dim == p.qualify
    rep = d_code_report(p, [])
    assert rep["ok"]
    # the whole half block: D is RS((n+s)/2) itself
    D1 = d_code(p, [1])
    assert D1.dim == 3 and d_code_report(p, [1])["distance"] == 3


def test_closed_forms_k2(rs5):
    rep = closed_form_report(rs5)
    assert rep["ok"], rep


def _functional_leak(scheme, A, B):
    """Rank of the pairing matrix <c, r_j> on C_R ∩ F^A, minus its rank on the
    columns outside B: the number of symbols of m_B that A can compute."""
    F = scheme.field
    cs = coord_restrict(scheme.c_r, A).basis
    M = [[symp_inner_raw(F, c, r) for r in scheme.secret_reps] for c in cs]
    outside = [[row[j - 1] for j in range(1, scheme.k + 1) if j not in B] for row in M]
    return rank(M, F, scheme.k) - rank(outside, F, scheme.k - len(B))


def test_partial_leakage_matches_functional_oracle(rs7):
    for A in iter_subsets(7, [5, 6]):
        for B in ([1], [2, 4], [1, 3], [1, 2]):
            assert partial_leakage(rs7, A, B) == _functional_leak(rs7, A, B)


def test_q7_pair_block_leaks(rs7):
    # shares missing alpha=4 and alpha=0 learn m_2 and m_4 outright
    A, B = (1, 2, 3, 4, 6), [2, 4]
    assert info_amount(rs7, A) == 2
    assert _functional_leak(rs7, A, B) == 2
    assert closed_form_partial(params_of(rs7), 5, 1, 1) == 0
    res = strong_security_check(rs7)
    assert not res.passed and res.witness == (A, (2,))


def test_q7_info_profile_matches_closed_form(rs7):
    assert not closed_form_report(rs7)["info_mismatches"]


def test_d_code_distance_q7(rs7):
    p = params_of(rs7)
    D = d_code(p, [1], verify=False)
    assert D.dim == p.qualify - 1
    from sympshare.linalg import min_hamming_weight

    # four roots of the degree-5 multiplier plus alpha_1 sum to zero here
    assert min_hamming_weight(D) == 2


def test_insecure_example(insecure4):
    A = (1, 2, 3)
    assert info_amount(insecure4, A) == 2
    assert len(determined_coordinates(insecure4, A)) == 2
    assert not strong_security_check(insecure4).passed
    with pytest.raises(OddQ):
        build_insecure(5)


def test_puncture(rs7):
    assert puncture(rs7, range(1, 8)) is rs7
    with pytest.raises(DegeneratePuncture):
        puncture(rs7, [])
    with pytest.raises(DegeneratePuncture):
        puncture(rs7, [1, 2, 3])
    A = [1, 2, 3, 4, 5, 6]
    P = puncture(rs7, A)
    p = params_of(rs7)
    F, al = p.field, p.alphas
    code = lambda d: pair_code(rs_code(F, 7, d, al))  # noqa: E731
    assert P.c_s == coord_project(coord_restrict(code(1), A), A)
    assert P.c_r == coord_project(coord_restrict(code(3), A), A)
    assert P.c_r_dual == coord_project(code(4), A)
    assert P.c_s_dual == coord_project(code(6), A)
    # discarding shares keeps the access structure of the surviving sets
    for sub in iter_subsets(6):
        assert info_amount(P, sub) == info_amount(rs7, sub)


def test_ms_thresholds():
    F = gf(11)
    ms = ms_scheme(F, 7, 4, 1)
    recon, priv = ms.ms_thresholds()
    for a in range(8):
        A = range(1, a + 1)
        if a <= priv:
            assert ms.ms_leakage(A) == 0
        if a >= recon:
            assert ms.ms_leakage(A) == 4
    rng = random.Random(0)
    m = (3, 1, 4, 1)
    shares = ms.ms_encode(m, rng)
    assert ms.ms_decode({i + 1: v for i, v in enumerate(shares)}) == m
    with pytest.raises(TooManyParticipants):
        ms_scheme(gf(7), 7, 4, 1)


def test_ms_compare_report():
    rep = ms_compare(7, 4, 1)
    assert rep["proposed"]["forbidden_upto"] == 4
    assert rep["ms_same_parameters"]["no_information_upto"] == 2
    assert rep["proposed"]["max_participants"] == 7
    assert rep["ms_max_participants_over_GF(q)"] == 3
