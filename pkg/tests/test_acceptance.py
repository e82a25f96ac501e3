"""Acceptance criteria, one test per criterion.

Each test prints a single ``CRITERION n: PASS|FAIL ...`` line (also when run
as ``python3 tests/test_acceptance.py``).  Tolerances and time limits are the
ones the criteria fix; nothing is relaxed here.
"""

import math
import os
import sys
import time
from itertools import combinations, product

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from sympshare.field import field_make, gf  # noqa: E402
from sympshare.gv import GVQuery, gv_asymptotic, gv_asymptotic_deterministic, gv_finite, gv_search  # noqa: E402
from sympshare.qsim import holevo_numeric, verify_scheme  # noqa: E402
from sympshare.rs import (  # noqa: E402
    build_insecure,
    build_strong_rs,
    closed_form_info,
    closed_form_partial,
    determined_coordinates,
    d_code_report,
    ms_compare,
    ms_scheme,
    params_of,
)
from sympshare.scheme import (  # noqa: E402
    Access,
    classify,
    info_amount,
    iter_subsets,
    partial_leakage,
    scheme_build,
    strong_security_check,
)
from sympshare.symplectic import coset_distance, is_self_orthogonal, swt, symp_dual, symp_space  # noqa: E402

import props  # noqa: E402

# collected here and printed by the terminal-summary hook in conftest.py
RESULTS: dict[int, str] = {}


def report(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = f"CRITERION {num}: {'PASS' if ok else 'FAIL'} - {detail}"


def _ternary4():
    F = field_make(3)
    v1, z = (1, 1, 1, 0), (0, 0, 0, 0)
    return scheme_build(symp_space(F, 4), symp_space(F, 4, [v1 + z, z + v1]))


def test_criterion_1_example_distances_and_classes():
    t0 = time.perf_counter()
    sch = _ternary4()
    d1 = coset_distance(sch.c_r, sch.c_s)
    d2 = coset_distance(sch.c_s_dual, sch.c_r_dual)
    small_forbidden = all(classify(sch, A).kind is Access.FORBIDDEN for A in iter_subsets(4, [0, 1, 2]))
    full_qualified = classify(sch, (1, 2, 3, 4)).kind is Access.QUALIFIED
    elapsed = time.perf_counter() - t0
    ok = d1 == 3 and d2 == 1 and small_forbidden and full_qualified and elapsed < 1.0
    report(1, ok, f"d_s(C_R,C_S)={d1} d_s(C_S^perp,C_R^perp)={d2} |A|<=2 forbidden={small_forbidden} "
                  f"all-4 qualified={full_qualified} time={elapsed:.3f}s")
    assert ok


def test_criterion_2_quantum_oracle_example():
    t0 = time.perf_counter()
    sch = _ternary4()
    bad = []
    for A in iter_subsets(4):
        ell = info_amount(sch, A)
        rep = verify_scheme(sch, A)
        chi = holevo_numeric(sch, A)
        if not (
            rep.match
            and rep.distinct == 3**ell
            and all(f == 3 ** (sch.k - ell) for f in rep.fibers)
            and abs(chi - ell * math.log2(3)) <= 1e-6
        ):
            bad.append(A)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    report(2, ok, f"16 subsets, mismatches={bad} time={elapsed:.2f}s")
    assert ok


def test_criterion_3_rs_profile_partial_and_strong():
    t0 = time.perf_counter()
    sch = build_strong_rs(gf(7), 4, 1)
    p = params_of(sch)
    info_bad = [A for A in iter_subsets(7) if info_amount(sch, A) != closed_form_info(p, len(A))]
    blocks1 = [(), (1,), (2,)]
    blocks2 = [(), (3,), (4,)]
    partial_bad = []
    for A in iter_subsets(7):
        for B1, B2 in product(blocks1, blocks2):
            got = partial_leakage(sch, A, B1 + B2)
            want = closed_form_partial(p, len(A), len(B1), len(B2))
            if got != want:
                partial_bad.append((A, B1 + B2, got, want))
    strong = strong_security_check(sch)
    elapsed = time.perf_counter() - t0
    ok = not info_bad and not partial_bad and strong.passed and elapsed < 10.0
    example = partial_bad[0] if partial_bad else None
    report(3, ok, f"info mismatches={len(info_bad)}/128 partial mismatches={len(partial_bad)} "
                  f"(first A,B,got,expected={example}) strong={'pass' if strong.passed else 'fail'} "
                  f"witness={strong.witness} time={elapsed:.2f}s")
    assert ok


def test_criterion_4_d_code_closed_forms():
    t0 = time.perf_counter()
    lines, ok = [], True
    for q, k, s in ((5, 2, 1), (7, 4, 1)):
        p = params_of(build_strong_rs(gf(q), k, s))
        for size in range(k // 2):
            for B in combinations(range(1, k // 2 + 1), size):
                r = d_code_report(p, B)
                ok &= r["ok"]
                lines.append(f"q={q} B'={list(B)} dim={r['dim']}/{r['expected_dim']} "
                             f"dist={r['distance']}/{r['expected_distance']} proj-dim-mismatches={len(r['mismatches'])}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10.0
    report(4, ok, "; ".join(lines) + f" time={elapsed:.2f}s")
    assert ok


def test_criterion_5_insecure_example():
    t0 = time.perf_counter()
    sch = build_insecure(4)
    A = (1, 2, 3)
    ell = info_amount(sch, A)
    det = determined_coordinates(sch, A)
    strong = strong_security_check(sch)
    elapsed = time.perf_counter() - t0
    ok = ell == sch.n - 2 and len(det) == 2 and not strong.passed and strong.witness is not None and elapsed < 1.0
    report(5, ok, f"ell({A})={ell} determined={det} strong witness={strong.witness} time={elapsed:.3f}s")
    assert ok


def _independent_gv(q, n, k, s, dt, dr):
    count = {}
    for v in product(range(q), repeat=2 * n):
        w = swt(v)
        count[w] = count.get(w, 0) + 1
    ball = lambda r: sum(count.get(i, 0) for i in range(1, r + 1))  # noqa: E731
    num = (q ** (n + k + s) - q ** (n + s)) * ball(dr - 1) + (q ** (n - s) - q ** (n - k - s)) * ball(dt - 1)
    return num, q ** (2 * n) - 1


def test_criterion_6_gv():
    res = gv_finite(GVQuery(2, 4, 1, 1, 2, 2))
    num, den = _independent_gv(2, 4, 1, 1, 2, 2)
    exact = res.lhs_str() == "432/255" and (res.numerator, res.denominator) == (num, den) and not res.feasible
    w = gv_search(GVQuery(3, 4, 2, 2, 3, 1), trials=1000, seed=0)
    search_ok = (
        w is not None
        and w.c_s.dim == 0
        and w.c_r.dim == 2
        and w.c_s <= w.c_r
        and is_self_orthogonal(w.c_r)
        and coset_distance(w.c_r, w.c_s) >= 3
        and coset_distance(symp_dual(w.c_s), symp_dual(w.c_r)) >= 1
    )
    worst = 0.0
    for i in range(10):
        R, et, er = f"{i / 20:.3f}", f"{(1 + 2 * i) / 100:.3f}", f"{3 * i / 200:.3f}"
        q = (2, 3, 5)[i % 3]
        a = gv_asymptotic(R, 0, et, er, q)
        b = gv_asymptotic_deterministic(R, et, er, q)
        worst = max(worst, abs(float(a.margin_t - b.margin_t)), abs(float(a.margin_r - b.margin_r)))
    grid_ok = worst <= 1e-12
    ok = exact and search_ok and grid_ok
    report(6, ok, f"lhs={res.lhs_str()} oracle={num}/{den} feasible={res.feasible} "
                  f"witness trial={None if w is None else w.trial} S=0 max diff={worst:.1e}")
    assert ok


def test_criterion_7_mceliece_sarwate():
    n, k, s = 7, 4, 1
    ms = ms_scheme(gf(11), n, k, s)
    priv, recon = (n - k + s) // 2, (n + k + s) // 2
    lo_ok = all(ms.ms_leakage(A) == 0 for a in range(priv + 1) for A in combinations(range(1, n + 1), a))
    hi_ok = all(ms.ms_leakage(A) == k for a in range(recon, n + 1) for A in combinations(range(1, n + 1), a))
    rep = ms_compare(7, 4, 1)
    ours = rep["proposed"]["forbidden_upto"]
    theirs = rep["ms_same_parameters"]["no_information_upto"]
    part_ok = rep["proposed"]["max_participants"] == 7 and rep["ms_max_participants_over_GF(q)"] == 7 - 4
    ok = lo_ok and hi_ok and ours == (n + s) // 2 and ours > theirs and part_ok
    report(7, ok, f"MS zero up to {priv}: {lo_ok}, full from {recon}: {hi_ok}; forbidden threshold "
                  f"{ours} vs MS {theirs}; max participants q={rep['proposed']['max_participants']} "
                  f"vs q-k={rep['ms_max_participants_over_GF(q)']}")
    assert ok


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    failures = {name: fn(instances=1000, seed=0) for name, fn in props.PROPERTIES.items()}
    elapsed = time.perf_counter() - t0
    ok = not any(failures.values()) and elapsed < 60.0
    report(8, ok, f"1000 instances each over GF(2),GF(3),GF(5),GF(4); failures={failures} time={elapsed:.2f}s")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
