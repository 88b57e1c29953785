from fractions import Fraction
from math import factorial

import pytest

from gkpfrac.exactalg import MPoly, as_field, felem_eq, variables
from gkpfrac.gkpcore import gkp_triangle
from gkpfrac.cfrac import eval_sr
from gkpfrac.combinat import (
    InvalidPermutation, SizeLimit, cyc_exc_count_bruteforce,
    cyc_exc_count_formula, eulerian, eulerian_traditional,
    explicit_formula_checks, master_egf, master_poly_bruteforce,
    master_poly_vy_formula, perm_stats, stirling_cycle, stirling_subset,
    stirling_cycle_egf, verify_master_sfrac, x_stirling_egf_check,
    x_stirling_transform,
)


def test_perm_stats_examples():
    st = perm_stats((1, 2, 3))
    assert (st.cyc, st.exc, st.erec) == (3, 0, 0)
    st = perm_stats((2, 1))
    assert (st.cyc, st.exc, st.erec) == (1, 1, 1)
    st = perm_stats((2, 3, 1))
    assert (st.exc, st.cyc) == (2, 1)
    with pytest.raises(InvalidPermutation):
        perm_stats((1, 1, 2))


def test_record_structure_facts():
    from itertools import permutations
    for n in range(1, 7):
        for sigma in permutations(range(1, n + 1)):
            st = perm_stats(sigma)
            # index 1 is a record, index n is an antirecord
            assert st.rec >= 1 and st.arec >= 1
            assert st.erec <= st.rec and st.erec <= st.exc
            assert st.exc + st.cyc <= n


def test_master_poly_small():
    w, y, u, v = variables("w y u v")
    assert master_poly_bruteforce(0) == 1
    assert master_poly_bruteforce(1) == w
    assert master_poly_bruteforce(2) == w * w + w * y
    with pytest.raises(SizeLimit):
        master_poly_bruteforce(10)


def test_master_sfrac():
    rep = verify_master_sfrac(6)
    assert rep["ok"]


def test_master_specializations():
    w, y, u, v = variables("w y u v")
    # all weights 1 counts permutations
    assert master_poly_bruteforce(5).eval_scalar(
        {"w": 1, "y": 1, "u": 1, "v": 1}) == 120
    # u = y gives homogenized cycle products
    for n in range(6):
        lhs = master_poly_bruteforce(n).subs({"u": y, "v": y})
        prod = MPoly.one(w.vars)
        for k in range(n):
            prod = prod * (w + k * y)
        assert felem_eq(as_field(lhs), prod)
    # u = w, v = y matches the excedance S-fraction
    cs = []
    for i in range(1, 7):
        k = (i + 1) // 2
        cs.append(k * w if i % 2 else k * y)
    s = eval_sr(cs, 6)
    for n in range(7):
        brute = master_poly_bruteforce(n).subs({"u": w, "v": y})
        assert felem_eq(as_field(s.coeffs[n]), as_field(brute))


def test_classical_numbers():
    assert stirling_subset(3, 2) == 3
    assert stirling_cycle(4, 2) == 11
    assert eulerian(3, 1) == 4
    assert eulerian_traditional(3, 2) == 4
    assert sum(eulerian(5, k) for k in range(5)) == 120


def test_classical_triangles_match_recurrence_arrays():
    t = gkp_triangle((0, 1, 0, 0, 0, 1), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == stirling_subset(n, k)
    t = gkp_triangle((1, 0, -1, 0, 0, 1), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == stirling_cycle(n, k)
    # the two Eulerian indexings
    t = gkp_triangle((0, 1, 1, 1, -1, 0), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == eulerian(n, k), (n, k)
    t = gkp_triangle((0, 1, 0, 1, -1, 1), 7)
    for n in range(1, 8):
        for k in range(n + 1):
            assert t.entry(n, k) == eulerian_traditional(n, k), (n, k)
    # ordered set partitions
    t = gkp_triangle((0, 1, 0, 0, 1, 0), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == factorial(k) * stirling_subset(n, k)
    # shifted ordered set partitions
    t = gkp_triangle((0, 1, 1, 0, 1, 0), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == factorial(k) * stirling_subset(n + 1, k + 1)
    # injections and the dual ratio array
    t = gkp_triangle((0, 0, 1, 0, 1, 0), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == factorial(n) // factorial(n - k)
    t = gkp_triangle((1, -1, 0, 0, 0, 1), 7)
    for n in range(8):
        for k in range(n + 1):
            assert t.entry(n, k) == factorial(n) // factorial(k)


def test_explicit_formulas():
    rep = explicit_formula_checks(6)
    assert rep["ok"], rep
    counts = cyc_exc_count_bruteforce(2)
    assert counts[(2, 0)] == 1 and counts[(1, 1)] == 1
    assert cyc_exc_count_formula(2, 2, 0) == 1
    assert cyc_exc_count_formula(2, 1, 1) == 1
    # n = 3 with all weights 1 counts the six permutations
    assert master_poly_vy_formula(3).eval_scalar(
        {"w": 1, "y": 1, "u": 1, "v": 1}) == 6


def test_x_stirling_transform():
    assert x_stirling_transform([1, 0, 0, 0, 0], 1) == [1, 0, 0, 0, 0]
    assert x_stirling_transform([1] * 5, 1) == [1, 1, 2, 5, 15]
    assert x_stirling_egf_check(4)


def test_master_egf_numeric():
    for (wv, uv, yv) in [(1, 2, 3), (Fraction(1, 2), 1, 2), (2, 3, 5)]:
        F = master_egf(wv, uv, yv, 8)
        for n in range(9):
            want = master_poly_bruteforce(n).eval_scalar(
                {"w": wv, "y": yv, "u": uv, "v": yv}) * Fraction(1, factorial(n))
            assert F.coeffs[n] == want


def test_stirling_cycle_egf_symbolic():
    w, y = variables("w y")
    F = stirling_cycle_egf(w, y, 6)
    for n in range(7):
        prod = MPoly.one(w.vars)
        for k in range(n):
            prod = prod * (w + k * y)
        assert felem_eq(as_field(F.coeffs[n] * factorial(n)), prod)


def test_record_facts_through_n7():
    from itertools import permutations
    n = 7
    for sigma in permutations(range(1, n + 1)):
        st = perm_stats(sigma)
        assert st.rec >= 1 and st.arec >= 1
        assert st.erec <= st.rec


def test_master_specialization_chain_n7():
    w, y, u, v = variables("w y u v")
    for n in range(8):
        lhs = master_poly_bruteforce(n).subs({"u": y, "v": y})
        prod = MPoly.one(w.vars)
        for k in range(n):
            prod = prod * (w + k * y)
        assert felem_eq(as_field(lhs), prod)
