from math import factorial

import pytest

from gkpfrac.exactalg import MPoly, as_field, felem_eq, felem_is_zero, variables
from gkpfrac.gkpcore import (
    GKPParams, UnknownFamily, binomial_like_triangle, closed_form_check,
    egf_trunc, gkp_rule, gkp_triangle, gkpz_triangle, ogf_trunc,
    rescale_weight, rescaled_rule, residual_checks, row_polys, tilde_params,
)


def test_stirling_subset_row():
    t = gkp_triangle((0, 1, 0, 0, 0, 1), 3)
    assert t.rows[3] == [0, 1, 3, 1]


def test_factorial_column():
    t = gkp_triangle((1, 0, 0, 0, 0, 0), 4)
    assert [t.rows[n][0] for n in range(5)] == [1, 1, 2, 6, 24]
    assert all(t.rows[n][k] == 0 for n in range(5) for k in range(1, n + 1))


def test_symbolic_first_row_and_P2():
    mu = GKPParams.symbolic()
    a, b, g, ap, bp, gp = mu
    t = gkp_triangle(mu, 2)
    assert t.entry(1, 0) == a + g
    assert t.entry(1, 1) == ap + bp + gp
    ps = row_polys(t)
    x = MPoly.variable("x", ps[1].vars)
    want = (a + g) * (2 * a + g) \
        + (4 * a * ap + b * ap + 3 * a * bp + b * bp + 3 * g * ap
           + 2 * g * bp + 3 * a * gp + b * gp + 2 * g * gp) * x \
        + (ap + bp + gp) * (2 * ap + 2 * bp + gp) * x ** 2
    assert ps[2] == want


def test_structural_triangularity_symbolic():
    mu = GKPParams.symbolic()
    t = gkp_triangle(mu, 8)
    for n in range(9):
        assert len(t.rows[n]) == n + 1
        assert t.entry(n, -1) == 0 and t.entry(n, n + 1) == 0


def test_row_polys_bell_and_trivial():
    t = gkp_triangle((0, 1, 0, 0, 0, 1), 3)
    ps = row_polys(t)
    x = MPoly.variable("x", ps[2].vars)
    assert ps[2] == x + x * x
    assert ogf_trunc(gkp_triangle((0, 1, 0, 0, 0, 1), 0)).coeffs == [1]


def test_egf_scaling():
    t = gkp_triangle((1, 0, 0, 0, 0, 0), 5)
    egf = egf_trunc(t)
    assert all(felem_eq(as_field(c), 1) for c in egf.coeffs)


def test_gkpz_degenerate_and_reductions():
    t1 = gkpz_triangle((0, 1, 2, 3, 4, 5, 0, 0), 6)
    t2 = gkp_triangle((0, 1, 2, 3, 4, 5), 6)
    assert t1 == t2

    # Zhu parameters with kappa = 0 agree with the self-dual J-family
    b, g, ap, gp = variables("beta gamma alphap gammap")
    z = gkpz_triangle((0, b, g, ap, -ap + 0 * b, gp, 0 * ap, 0), 8)
    f1c = gkp_triangle((0, b, g, ap, -ap, gp), 8)
    assert z == f1c

    # with alphap = 0 they reduce to the k-weighted family
    b, g, gp, kp = variables("beta gamma gammap kappa")
    z = gkpz_triangle((0, b, g, 0 * b, kp * b, gp, 0 * b, 0), 8)
    f7a = gkp_triangle((0, b, g, 0, kp * b, gp), 8)
    assert z == f7a


def test_binomial_like_pascal_and_gkp_rule():
    t = binomial_like_triangle(lambda n, k: (1, 1), 4)
    assert t.rows[4] == [1, 4, 6, 4, 1]
    mu = GKPParams.symbolic()
    assert binomial_like_triangle(gkp_rule(mu), 8) == gkp_triangle(mu, 8)


def test_rescaling_product_formula_symbolic():
    # fully symbolic weight sequences at depth 5
    N = 5
    names = (["a%d%d" % (n, k) for n in range(1, N + 1) for k in range(n + 1)]
             + ["ad%d%d" % (n, k) for n in range(1, N + 1) for k in range(n + 1)]
             + ["c%d" % j for j in range(1, N + 1)]
             + ["d%d" % j for j in range(1, N + 1)]
             + ["e%d" % j for j in range(1, N + 1)])
    gens = dict(zip(names, variables(names)))

    def base(n, k):
        return gens["a%d%d" % (n, k)], gens["ad%d%d" % (n, k)]

    c = lambda j: gens["c%d" % j]
    d = lambda j: gens["d%d" % j]
    e = lambda j: gens["e%d" % j]
    T = binomial_like_triangle(base, N)
    T2 = binomial_like_triangle(rescaled_rule(base, c, d, e), N)
    for n in range(N + 1):
        for k in range(n + 1):
            want = rescale_weight(c, d, e, n, k) * T.entry(n, k)
            assert felem_eq(as_field(T2.entry(n, k)), as_field(want)), (n, k)


def test_residuals_symbolic():
    mu = GKPParams.symbolic()
    odes, pde = residual_checks(mu, 6)
    assert all(felem_is_zero(as_field(r)) for r in odes)
    assert pde.is_zero()


def test_residuals_numeric_and_trivial():
    odes, pde = residual_checks((0, 1, 0, 0, 0, 1), 10)
    assert all(felem_is_zero(as_field(r)) for r in odes)
    assert pde.is_zero()
    mu = GKPParams.symbolic()
    odes, _ = residual_checks(mu, 1)
    assert felem_is_zero(as_field(odes[0]))


def test_closed_forms():
    a, b, g, bp = variables("a b g bp")
    assert closed_form_check("2b", (a, b, g, bp), 8)["ok"]
    al, ap, bp2, gp = variables("al ap bp gp")
    assert closed_form_check("2a", (al, ap, bp2, gp), 8)["ok"]
    ap, bp, gp, kp = variables("ap bp gp kp")
    assert closed_form_check("6", (ap, bp, gp, kp), 6)["ok"]
    assert closed_form_check("stirling-cycle", (), 7)["ok"]
    t = gkp_triangle((1, 0, -1, 0, 0, 1), 3)
    assert t.rows[3] == [0, 2, 3, 1]
    s, = variables("s")
    assert closed_form_check("6-eulerian-s", (s,), 8)["ok"]
    nu, rho = variables("nu rho")
    assert closed_form_check("multifactorial-c", (nu, rho), 6)["ok"]
    assert closed_form_check("multifactorial-b", (nu, rho), 6)["ok"]
    a, g, ap, gp = variables("a g ap gp")
    assert closed_form_check("5", (a, g, ap, gp), 6)["ok"]
    assert closed_form_check("ordered-subset-shift", (), 8)["ok"]
    with pytest.raises(UnknownFamily):
        closed_form_check("nope", (), 3)


def test_duality_consistency():
    from gkpfrac.symmetry import D, apply_map
    mu = GKPParams.symbolic()
    t = gkp_triangle(mu, 8)
    td = gkp_triangle(apply_map(D, mu), 8)
    for n in range(9):
        for k in range(n + 1):
            assert felem_eq(as_field(td.entry(n, k)), as_field(t.entry(n, n - k)))


def test_tilde_reparametrization():
    tilde = variables("ta tb tg tap tbp tgp")
    mu = tilde_params(tilde)
    t = gkp_triangle(mu, 6)
    ta, tb, tg, tap, tbp, tgp = tilde

    def shifted_rule(n, k):
        return (ta * (n - 1) + tb * k + tg,
                tap * (n - 1) + tbp * (k - 1) + tgp)

    t2 = binomial_like_triangle(shifted_rule, 6)
    assert t == t2


def test_row_polynomial_closed_forms():
    # diagonal and column families, and the two self-dual product forms
    from gkpfrac.gkpcore import _prod
    al, ap, bp, gp = variables("al ap bp gp")
    ps = row_polys(gkp_triangle((al, -al, -al, ap, bp, gp), 6))
    x = MPoly.variable("x", ps[1].vars)
    for n in range(7):
        want = x ** n * _prod(gp + j * (ap + bp) for j in range(1, n + 1))
        assert felem_eq(as_field(ps[n]), as_field(want))
    a, b, g, bp2 = variables("a b g bp")
    ps = row_polys(gkp_triangle((a, b, g, 0, bp2, -bp2), 6))
    for n in range(7):
        want = _prod(g + j * a for j in range(1, n + 1))
        assert felem_eq(as_field(ps[n]), as_field(want))
    a, g, ap, gp = variables("a g ap gp")
    ps = row_polys(gkp_triangle((a, 0, g, ap, 0, gp), 6))
    x = MPoly.variable("x", ps[1].vars)
    for n in range(7):
        want = _prod((g + gp * x) + k * (a + ap * x) for k in range(1, n + 1))
        assert felem_eq(as_field(ps[n]), as_field(want))
    ap, bp, gp, kp = variables("ap bp gp kp")
    ps = row_polys(gkp_triangle((kp * (ap + bp), kp * bp, kp * gp,
                                 ap, bp, gp), 6))
    x = MPoly.variable("x", ps[1].vars)
    for n in range(7):
        want = (kp + x) ** n * _prod(gp + j * (ap + bp)
                                     for j in range(1, n + 1))
        assert felem_eq(as_field(ps[n]), as_field(want))
