import random
from fractions import Fraction

import pytest

from gkpfrac.exactalg import MPoly, as_field, felem_eq, variables
from gkpfrac.gkpcore import gkp_triangle, row_polys
from gkpfrac.hankel import (
    RequiresNumeric, bareiss_det, coeffwise_nonneg, cofactor_det,
    gkp_tilde_polys, hankel_tp, hypothesis_check, log_convexity,
)


def test_coeffwise_nonneg():
    x, = variables("x")
    assert coeffwise_nonneg(x + 2)[0]
    ok, wit = coeffwise_nonneg(x - 1)
    assert not ok and wit["coeff"] == -1
    t = gkp_triangle((0, 1, 0, 0, 0, 1), 7)
    ps = row_polys(t)
    assert coeffwise_nonneg(ps[2] * ps[4] - ps[3] * ps[3])[0]


def test_factorial_hankel():
    assert bareiss_det([[1, 1, 2], [1, 2, 6], [2, 6, 24]]) == 4
    rep = hankel_tp([1, 1, 2, 6, 24], 3, 3)
    assert rep.ok


def test_failing_hankel_witness():
    x, = variables("x")
    rep = hankel_tp([MPoly.one(("x",)), x, x * x - 1], 2, 2)
    assert not rep.ok
    assert rep.witness is not None
    # the full 2x2 determinant is -1, the documented failing minor
    det = bareiss_det([[MPoly.one(("x",)), x], [x, x * x - 1]])
    assert det == -1


def test_bell_hankel_order2():
    ps = row_polys(gkp_triangle((0, 1, 0, 0, 0, 1), 7))
    assert hankel_tp(ps, 4, 2).ok


def test_bareiss_matches_cofactor_on_random_matrices():
    rng = random.Random(7)
    u, v = variables("u v")

    def rand_poly():
        p = MPoly.zero(("u", "v"))
        for _ in range(3):
            p = p + rng.randint(-3, 3) * u ** rng.randint(0, 2) \
                * v ** rng.randint(0, 2)
        return p if not p.is_zero() else p + 1

    for _ in range(50):
        M = [[rand_poly() for _ in range(4)] for _ in range(4)]
        assert felem_eq(as_field(bareiss_det(M)), as_field(cofactor_det(M)))


def test_log_convexity_basics():
    assert log_convexity([1] * 13, 10)["ok"]
    rep = log_convexity([1, 2, 3, 4], 1)
    assert not rep["ok"] and rep["first_failure"]["m"] == 0
    ps = row_polys(gkp_triangle((0, 1, 0, 0, 0, 1), 12))
    assert log_convexity(ps, 10)["ok"]


def test_tilde_strong_log_convexity_small():
    ps = gkp_tilde_polys(7)
    assert log_convexity(ps, 5, strong=True)["ok"]


def test_order3_tp_on_random_nonneg_samples():
    rng = random.Random(11)
    for _ in range(3):
        mu = tuple(Fraction(rng.randint(0, 4), rng.randint(1, 3))
                   for _ in range(6))
        ps = row_polys(gkp_triangle(mu, 8))
        assert hankel_tp(ps, 5, 3).ok, mu


def test_size_cap():
    with pytest.raises(ValueError):
        hankel_tp([1] * 17, 9, 2)
    # explicit opt-in raises the cap
    assert hankel_tp([1] * 17, 9, 1, size_cap=9).ok


def test_hypothesis_sets():
    assert hypothesis_check((1, 0, 0, 0, 0, 1), "LiuWang")
    assert hypothesis_check((1, 0, 0, 0, 0, 1), "ChenWangYang")
    assert hypothesis_check((0, 1, 0, 1, -1, 0), "LiuWang")
    assert not hypothesis_check((-1, 0, 0, 0, 0, 0), "LiuWang")
    assert not hypothesis_check((0, -1, 0, 0, 0, 0), "ChenWangYang")
    with pytest.raises(RequiresNumeric):
        a = variables("a")[0]
        hypothesis_check((a, 0, 0, 0, 0, 0), "LiuWang")
    with pytest.raises(ValueError):
        hypothesis_check((1, 0, 0, 0, 0, 0), "nope")


def test_packed_kernel_matches_generic_path():
    from gkpfrac.hankel import (_as_mpoly_list, _log_convexity_generic,
                                _log_convexity_packed, _poly_frame)
    ps = _as_mpoly_list(gkp_tilde_polys(7))
    frame = _poly_frame(ps)
    packed = [frame.pack(p) for p in ps]
    for strong in (False, True):
        a = _log_convexity_packed(frame, packed, 5, strong)
        b = _log_convexity_generic(ps, 5, strong)
        assert a["ok"] == b["ok"] == True
