from fractions import Fraction

import pytest

from gkpfrac.exactalg import MPoly, TruncSeries, as_field, felem_eq, variables
from gkpfrac.gkpcore import gkp_triangle, ogf_trunc
from gkpfrac.cfrac import (
    CFrac, InsufficientDepth, NonExtractableSeries, NotContractible,
    binomial_transform_seq, contract, eval_cfrac, eval_jr, eval_sr, eval_tr,
    extract_jfrac, extract_sfrac, transform_laws,
)


def sym_c(m, extra=()):
    names = ["c%d" % i for i in range(1, m + 1)]
    return variables(names, extra=extra)


def test_factorial_sfrac():
    fac = TruncSeries(6, [1, 1, 2, 6, 24, 120, 720])
    cf = extract_sfrac(fac, 5)
    assert list(cf.c) == [1, 1, 2, 2, 3]
    assert cf.terminated_at is None


def test_bell_sfrac():
    ogf = ogf_trunc(gkp_triangle((0, 1, 0, 0, 0, 1), 7))
    cf = extract_sfrac(ogf, 6)
    x = MPoly.variable("x", ("x",))
    want = [x, 1, x, 2, x, 3]
    assert all(felem_eq(as_field(a), as_field(b)) for a, b in zip(cf.c, want))


def test_terminated_extraction():
    cf = extract_sfrac(TruncSeries(5, [1]), 5)
    assert cf.terminated_at == 1 and cf.c == ()
    with pytest.raises(NonExtractableSeries):
        extract_sfrac(TruncSeries(4, [1, 0, 1]), 4)
    with pytest.raises(InsufficientDepth):
        extract_sfrac(TruncSeries(3, [1, 1, 2, 6]), 5)


def test_eval_sr_factorials_and_S3():
    s = eval_sr([1, 1, 2, 2, 3, 3], 6)
    assert s.coeffs == [1, 1, 2, 6, 24, 120, 720]
    c = sym_c(3)
    s = eval_sr(c, 3)
    c1, c2, c3 = c
    assert felem_eq(as_field(s.coeffs[3]),
                    c1 ** 3 + 2 * c1 ** 2 * c2 + c1 * c2 ** 2 + c1 * c2 * c3)


def test_eval_sr_dyck_path_oracle():
    # independent oracle: weighted Dyck paths, weight c_i on a fall from
    # height i
    def dyck_sum(c, n):
        paths = []

        def walk(h, steps, weight):
            if steps == 2 * n:
                if h == 0:
                    paths.append(weight)
                return
            if 2 * n - steps < h:
                return
            walk(h + 1, steps + 1, weight)
            if h > 0:
                walk(h - 1, steps + 1, weight * c[h - 1])

        walk(0, 0, MPoly.one(c[0].vars))
        acc = 0
        for w in paths:
            acc = acc + w
        return acc

    c = sym_c(4)
    s = eval_sr(c, 4)
    for n in range(5):
        assert felem_eq(as_field(s.coeffs[n]), as_field(dyck_sum(c, n))), n


def test_eval_tr_zero_d_is_sr():
    c = sym_c(6)
    assert eval_tr(c, [0] * 6, 6) == eval_sr(c, 6)


def test_jfrac_factorials_and_geometric():
    cf = extract_jfrac(TruncSeries(6, [1, 1, 2, 6, 24, 120, 720]), 3)
    assert list(cf.e) == [1, 3, 5] and list(cf.f) == [1, 4, 9]
    geo = TruncSeries(6, [1] * 7)
    cf = extract_jfrac(geo, 3)
    assert list(cf.e) == [1] and cf.terminated_at == 1
    assert eval_cfrac(cf, 6) == geo


def test_roundtrip_symbolic_S_depth8():
    c = sym_c(8)
    back = extract_sfrac(eval_sr(c, 8), 8)
    assert all(felem_eq(as_field(a), as_field(b)) for a, b in zip(back.c, c))


def test_roundtrip_symbolic_J_depth4():
    enames = ["e%d" % i for i in range(4)]
    fnames = ["f%d" % i for i in range(1, 5)]
    gens = variables(enames + fnames)
    e, f = gens[:4], gens[4:]
    back = extract_jfrac(eval_jr(e, f, 8), 4)
    assert all(felem_eq(as_field(a), as_field(b)) for a, b in zip(back.e, e))
    assert all(felem_eq(as_field(a), as_field(b)) for a, b in zip(back.f, f))


def test_contraction_identities():
    c = sym_c(12)
    j = contract(CFrac("S", c=c[:6]))
    c1, c2, c3, c4 = c[:4]
    assert felem_eq(as_field(j.e[0]), c1)
    assert felem_eq(as_field(j.e[1]), c2 + c3)
    assert felem_eq(as_field(j.f[0]), c1 * c2)
    assert felem_eq(as_field(j.f[1]), c3 * c4)
    for m in (4, 6):
        jf = contract(CFrac("S", c=c[: 2 * m]))
        assert eval_cfrac(jf, 2 * m) == eval_sr(c[: 2 * m], 2 * m)


def test_contraction_T_variant():
    c = sym_c(12, extra=["d%d" % i for i in range(1, 13)])
    reg = c[0].vars
    d = tuple(MPoly.variable("d%d" % i, reg) if i % 2 == 1 else 0
              for i in range(1, 13))
    j = contract(CFrac("T", c=c, d=d))
    assert felem_eq(as_field(j.e[0]), c[0] + d[0])
    assert eval_cfrac(j, 12) == eval_tr(c, d, 12)
    bad = tuple(MPoly.variable("d%d" % i, reg) for i in range(1, 13))
    with pytest.raises(NotContractible):
        contract(CFrac("T", c=c, d=bad))


def test_contract_empty():
    assert contract(CFrac("S", c=())).kind == "J"


def test_binomial_transform():
    fac = TruncSeries(4, [1, 1, 2, 6, 24])
    assert binomial_transform_seq(fac, 1).coeffs == [1, 2, 5, 16, 65]
    a = variables(["a%d" % i for i in range(4)], extra=("xi",))
    xi = MPoly.variable("xi", a[0].vars)
    bt = binomial_transform_seq(TruncSeries(3, list(a)), xi)
    a0, a1, a2, a3 = a
    assert felem_eq(as_field(bt.coeffs[3]),
                    a0 * xi ** 3 + 3 * a1 * xi ** 2 + 3 * a2 * xi + a3)
    assert binomial_transform_seq(fac, 0) == fac


def test_euler_substitution_law_symbolic_order12():
    a = variables(["a%d" % i for i in range(13)], extra=("xi",))
    xi = MPoly.variable("xi", a[0].vars)
    # binomial_transform_seq raises if summation and substitution disagree
    binomial_transform_seq(TruncSeries(12, list(a)), xi)


def test_transform_laws():
    c = sym_c(6, extra=("xi",))
    xi = MPoly.variable("xi", c[0].vars)
    t = transform_laws("S->T", c, xi, verify_order=6)
    assert all(felem_eq(as_field(a), as_field(b)) for a, b in zip(t.c, c))
    assert felem_eq(as_field(t.d[0]), xi) and felem_eq(as_field(t.d[1]), 0)

    j = transform_laws("J->J", (c[:3], c[3:]), xi, verify_order=6)
    assert felem_eq(as_field(j.e[0]), c[0] + xi)

    s2j = transform_laws("S->J", c, xi, verify_order=6)
    assert felem_eq(as_field(s2j.e[0]), c[0] + xi)

    d = tuple(MPoly.variable("xi", c[0].vars) * 0 + (c[i] if i % 2 == 0 else 0)
              for i in range(6))
    t2 = transform_laws("T->T", (c, d), xi, verify_order=6)
    assert felem_eq(as_field(t2.d[0]), d[0] + xi)
    t2j = transform_laws("T->J", (c, d), xi, verify_order=6)
    assert felem_eq(as_field(t2j.e[0]), c[0] + d[0] + xi)

    # xi = 0 leaves everything unchanged
    t0 = transform_laws("S->T", c, 0)
    assert all(felem_eq(as_field(v), 0) for v in t0.d)


def test_transform_commutes_with_contraction():
    c = sym_c(9, extra=("xi",))
    xi = MPoly.variable("xi", c[0].vars)
    via_T = contract(transform_laws("S->T", c, xi))
    direct = transform_laws("S->J", c, xi)
    for a, b in zip(via_T.e, direct.e):
        assert felem_eq(as_field(a), as_field(b))
    for a, b in zip(via_T.f, direct.f):
        assert felem_eq(as_field(a), as_field(b))


def test_insufficient_depth_eval():
    with pytest.raises(InsufficientDepth):
        eval_sr([1, 2], 5)
    with pytest.raises(InsufficientDepth):
        eval_jr([1], [1], 5)


def test_cfrac_json():
    cf = CFrac("S", c=(1, Fraction(1, 2)), terminated_at=None)
    d = cf.to_json()
    assert d["kind"] == "S" and d["c"] == ["1", "1/2"]
    assert d["terminated_at"] is None


def test_extraction_with_rational_function_coefficients():
    # series whose coefficients carry a parameter denominator: the
    # extraction clears it and still reproduces the polynomial-in-x rule
    from gkpfrac.exactalg import RatFunc, ratfunc
    from gkpfrac.gkpcore import gkp_triangle, ogf_trunc
    a, g, gp = variables("alpha gamma gammap")
    mu = (a, -a, g, a * gp / (a + g), -a * gp / (a + g), gp)
    ogf = ogf_trunc(gkp_triangle(mu, 4))
    assert any(isinstance(c, RatFunc) for c in ogf.coeffs)
    cf = extract_sfrac(ogf, 4)
    kappa = ratfunc(gp, a + g)
    x = MPoly.variable("x", ("alpha", "gamma", "gammap", "x"))
    for i, got in enumerate(cf.c, start=1):
        k = (i + 1) // 2
        want = (g + k * a) * (1 + kappa * x) if i % 2 else k * a
        assert felem_eq(as_field(got), as_field(want)), i


def test_jfrac_inconsistent_tail():
    with pytest.raises(NonExtractableSeries):
        extract_jfrac(TruncSeries(4, [1, 0, 0, 1]), 2)
