import random
from fractions import Fraction

import pytest

from gkpfrac.exactalg import (
    DivisionByZeroPolynomial, MPoly, NonInvertibleSeries, RatFunc, TruncSeries,
    as_field, divide_exact, felem_eq, generalized_binomial_series, mpoly_gcd,
    ratfunc, remainder_in_x, series_reciprocal, variables,
)


def rand_poly(rng, gens, nterms=3, maxdeg=2, maxc=4):
    p = MPoly.zero(gens[0].vars)
    for _ in range(nterms):
        term = MPoly.constant(rng.randint(-maxc, maxc), gens[0].vars)
        for g in gens:
            term = term * g ** rng.randint(0, maxdeg)
        p = p + term
    return p


def test_ring_axioms_randomized():
    rng = random.Random(0)
    gens = variables("a b c")
    for _ in range(200):
        p = rand_poly(rng, gens)
        q = rand_poly(rng, gens)
        assert p * q == q * p
        assert (p + q) - q == p


def test_canonical_form_no_zero_coeffs():
    a, b = variables("a b")
    p = (a + b) - a - b
    assert p.is_zero() and p.terms == {}
    q = (a + 1) * (a - 1) - a * a
    assert q == -1


def test_ratfunc_normalize_idempotent_and_cross_mult():
    rng = random.Random(1)
    gens = variables("a b")
    for _ in range(200):
        num = rand_poly(rng, gens, nterms=2)
        den = rand_poly(rng, gens, nterms=2)
        if den.is_zero():
            den = den + 1
        r = RatFunc(num, den)
        r2 = RatFunc(r.num, r.den)
        assert r2.num == r.num and r2.den == r.den
        # equality via normalization agrees with cross-multiplication
        s = RatFunc(num * (gens[0] + 1), den * (gens[0] + 1))
        assert r == s
        assert r.num * s.den == s.num * r.den


def test_ratfunc_zero_denominator():
    a, = variables("a")
    with pytest.raises(DivisionByZeroPolynomial):
        ratfunc(a, a - a)


def test_gcd_basic():
    a, b, g = variables("a b g")
    f1 = (a + b) ** 2 * (a - g)
    f2 = (a + b) * (a + g)
    assert mpoly_gcd(f1, f2) == a + b
    assert divide_exact(f1, (a + b) ** 2) == a - g
    assert divide_exact(f1, a + g) is None


def test_remainder_in_x_exact_divisibility():
    x, al = variables("x al")
    quo, rem = remainder_in_x(al * x ** 2 + x, x + 0 * al, "x")
    assert rem == 0
    assert quo == al * x + 1


def test_remainder_in_x_paper_node_values():
    # the two documented polynomial remainders over the parameter field
    a, b, g, ap, bp, gp, x = variables("alpha beta gamma alphap betap gammap x")
    P1 = (a + g) + (ap + bp + gp) * x
    Q = a * (a + g) \
        + (2 * a * ap + ap * b + a * bp + b * bp + ap * g + a * gp + b * gp) * x \
        + (ap + bp) * (ap + bp + gp) * x ** 2
    quo, rem = remainder_in_x(Q, P1, "x")
    want = ratfunc((a + g) * ((a + g) * bp - (ap + bp + gp) * b), ap + bp + gp)
    assert felem_eq(as_field(rem), want)

    Q2 = a * (2 * a + g) + ap * (3 * a + b + g) * x + ap * (ap + bp) * x ** 2
    R2 = a + ap * x
    quo, rem = remainder_in_x(Q2, R2, "x")
    assert felem_eq(as_field(rem), ratfunc(a * (a * bp - b * ap), ap))
    # reconstruction
    assert felem_eq(as_field(quo * R2 + rem), as_field(Q2))


def test_remainder_zero_divisor():
    x, = variables("x")
    with pytest.raises(DivisionByZeroPolynomial):
        remainder_in_x(x, MPoly.zero(("x",)), "x")


def test_series_reciprocal_geometric():
    s = TruncSeries(6, [1, -1])
    assert series_reciprocal(s).coeffs == [1] * 7
    x, = variables("x")
    s = TruncSeries(2, [1, x])
    assert series_reciprocal(s) == TruncSeries(2, [1, -x, x * x])


def test_series_reciprocal_factorials_long_division_oracle():
    fac = [1, 1, 2, 6]

    # independent long-division oracle for 1/f
    def long_division(coeffs, order):
        out = [Fraction(1) / coeffs[0]]
        for n in range(1, order + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                cj = coeffs[j] if j < len(coeffs) else 0
                acc += cj * out[n - j]
            out.append(-acc / coeffs[0])
        return out

    oracle = long_division(fac, 3)
    got = series_reciprocal(TruncSeries(3, fac))
    assert got.coeffs == oracle == [1, -1, -1, -3]


def test_series_reciprocal_involution():
    rng = random.Random(2)
    for _ in range(20):
        coeffs = [1] + [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                        for _ in range(6)]
        s = TruncSeries(6, coeffs)
        assert series_reciprocal(series_reciprocal(s)) == s


def test_series_reciprocal_zero_constant_term():
    with pytest.raises(NonInvertibleSeries):
        series_reciprocal(TruncSeries(3, [0, 1]))


def test_generalized_binomial_examples():
    assert generalized_binomial_series(TruncSeries(4, [1, -1]), -1).coeffs \
        == [1, 1, 1, 1, 1]
    got = generalized_binomial_series(TruncSeries(2, [1, -2]), Fraction(-1, 2))
    assert got.coeffs == [1, 1, Fraction(3, 2)]
    # (1 - y t)^(-w/y) at w = y = 1 is the geometric series
    got = generalized_binomial_series(TruncSeries(5, [1, -1]), Fraction(-1))
    assert got.coeffs == [1] * 6


def test_generalized_binomial_integer_exponent_is_repeated_product():
    x, = variables("x")
    base = TruncSeries(5, [1, x, 2 * x])
    for m in range(4):
        direct = TruncSeries.one(5)
        for _ in range(m):
            direct = direct * base
        assert generalized_binomial_series(base, m) == direct


def test_exp_log_roundtrip():
    x, = variables("x")
    s = TruncSeries(6, [0, x, 1, x * x])
    assert s.exp().log() == s


def test_json_roundtrip():
    from gkpfrac.exactalg import mpoly_from_json, mpoly_to_json
    a, b = variables("a b")
    p = 3 * a * a - Fraction(1, 2) * b + 7
    assert mpoly_from_json(mpoly_to_json(p)) == p
