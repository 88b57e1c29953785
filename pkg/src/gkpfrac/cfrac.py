"""Continued-fraction machinery for ordinary generating functions:

* extraction of S-type and J-type coefficients from a truncated series,
* evaluation of S-, T- and J-fractions by bottom-up convergents,
* even contraction (S or special T -> J),
* the shifted binomial transform and its coefficient laws.

Extraction runs on a pair of polynomial-coefficient series representing the
current convergent as a quotient, so only one rational-function reduction is
needed per level.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactalg import (
    MPoly, RatFunc, TruncSeries, as_field, felem_eq, felem_is_zero,
    felem_to_json, mpoly_gcd, divide_exact,
)


class InsufficientDepth(ValueError):
    pass


class NotContractible(ValueError):
    pass


class NonExtractableSeries(ValueError):
    """A t-coefficient vanished while the tail did not: no S-/J-fraction."""


@dataclass(frozen=True)
class CFrac:
    """Tagged coefficient bundle for S-, T- or J-type continued fractions.

    ``terminated_at`` records the level i at which extraction found an
    identically zero coefficient (the fraction is then finite)."""
    kind: str
    c: tuple = ()
    d: tuple = ()
    e: tuple = ()
    f: tuple = ()
    terminated_at: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("S", "T", "J"):
            raise ValueError("kind must be S, T or J")

    def to_json(self):
        return {
            "kind": self.kind,
            "c": [felem_to_json(v) for v in self.c],
            "d": [felem_to_json(v) for v in self.d],
            "e": [felem_to_json(v) for v in self.e],
            "f": [felem_to_json(v) for v in self.f],
            "terminated_at": self.terminated_at,
        }


@dataclass(frozen=True)
class SeqTransform:
    """Shift weights for the generalized binomial transform b = B_xi a."""
    xi0: object = 0
    xi1: object = 0
    xi2: object = 0


# ---------------------------------------------------------------------------
# internal quotient-of-polynomial-series representation
# ---------------------------------------------------------------------------

def _strip_content(A, B):
    """Remove a common polynomial factor of all coefficients of A and B."""
    g = None
    for c in A + B:
        if isinstance(c, (int, Fraction)):
            if c != 0:
                return A, B
            continue
        if c.is_zero():
            continue
        g = c if g is None else mpoly_gcd(g, c)
        if g.is_constant():
            return A, B
    if g is None or g.is_constant():
        return A, B
    div = lambda c: 0 if isinstance(c, (int, Fraction)) and c == 0 else divide_exact(c, g)
    return [div(c) for c in A], [div(c) for c in B]


def _as_quot(series: TruncSeries):
    """Series with scalar/MPoly/RatFunc coefficients -> (A, B) polynomial
    coefficient lists with series = A/B and B constant in t."""
    coeffs = [as_field(c) for c in series.coeffs]
    dens = [c.den for c in coeffs if isinstance(c, RatFunc) and not c.is_poly()]
    if not dens:
        A = [c.as_mpoly() if isinstance(c, RatFunc) else c for c in coeffs]
        return A, [1] + [0] * series.order
    L = dens[0]
    for d in dens[1:]:
        g = mpoly_gcd(L, d)
        L = L * divide_exact(d, g)
    A = []
    for c in coeffs:
        if isinstance(c, RatFunc):
            A.append(c.num * divide_exact(L, c.den))
        else:
            A.append(c * L)
    return A, [L] + [0] * series.order


def _poly_ratio(num, den):
    """Reduce num/den where both are MPoly or scalar."""
    if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
        return Fraction(num) / Fraction(den)
    if isinstance(num, (int, Fraction)):
        num = MPoly.constant(num, den.vars)
    if isinstance(den, (int, Fraction)):
        den = MPoly.constant(den, num.vars)
    r = RatFunc(num, den)
    return r.as_mpoly() if r.is_poly() else r


def _split_ratio(c):
    """Field element -> (p, q) with c = p/q, both MPoly/scalar."""
    if isinstance(c, RatFunc):
        return c.num, c.den
    return c, 1


def extract_sfrac(a: TruncSeries, m: int) -> CFrac:
    """S-fraction coefficients c_1..c_m of a series with [t^0] = 1.

    Iterates f_0 = a,  c_k = [t^1](1 - 1/f_{k-1}),
    f_k = (1 - 1/f_{k-1})/(c_k t); stops early (``terminated_at``) when some
    c_k vanishes identically, which requires the whole tail to vanish.
    """
    if not felem_eq(as_field(a.coeffs[0]), 1):
        raise ValueError("series must have constant term 1")
    if m > a.order:
        raise InsufficientDepth("need order >= %d, have %d" % (m, a.order))
    A, B = _as_quot(a)
    cs = []
    for k in range(1, m + 1):
        diff = [x - y for x, y in zip(A, B)]
        if len(diff) < 2:
            break
        num, den = diff[1], A[0]
        ck = _poly_ratio(num, den)
        if felem_is_zero(ck):
            if any(not felem_is_zero(as_field(x)) for x in diff[1:]):
                raise NonExtractableSeries(
                    "c_%d vanishes but the series continues" % k)
            return CFrac("S", c=tuple(cs), terminated_at=k)
        cs.append(ck)
        p, q = _split_ratio(ck)
        A2 = [q * x for x in diff[1:]]
        B2 = [p * x for x in A[:-1]]
        A, B = _strip_content(A2, B2)
    return CFrac("S", c=tuple(cs))


def extract_jfrac(a: TruncSeries, m: int) -> CFrac:
    """J-fraction coefficients e_0..e_{m-1}, f_1..f_m of a series with
    [t^0] = 1; needs order >= 2m.

    Level step: 1 - 1/g_k = e_k t + f_{k+1} t^2 g_{k+1}; terminates when
    some f vanishes identically."""
    if not felem_eq(as_field(a.coeffs[0]), 1):
        raise ValueError("series must have constant term 1")
    if 2 * m > a.order:
        raise InsufficientDepth("need order >= %d, have %d" % (2 * m, a.order))
    A, B = _as_quot(a)
    es, fs = [], []
    for k in range(m):
        diff = [x - y for x, y in zip(A, B)]
        ek = _poly_ratio(diff[1], A[0])
        es.append(ek)
        p, q = _split_ratio(ek)
        # C = q*(diff) - p*t*A  has zero t^0 and t^1 coefficients
        C = [q * diff[j] - (p * A[j - 1] if j >= 1 else 0) for j in range(len(A))]
        fk = _poly_ratio(C[2], q * A[0])
        if felem_is_zero(fk):
            if any(not felem_is_zero(as_field(x)) for x in C[2:]):
                raise NonExtractableSeries(
                    "f_%d vanishes but the series continues" % (k + 1))
            return CFrac("J", e=tuple(es), f=tuple(fs), terminated_at=k + 1)
        fs.append(fk)
        p2, q2 = _split_ratio(fk)
        A2 = [q2 * x for x in C[2:]]
        B2 = [(p2 * q) * x for x in A[:-2]]
        A, B = _strip_content(A2, B2)
    return CFrac("J", e=tuple(es), f=tuple(fs))


# ---------------------------------------------------------------------------
# evaluation by bottom-up convergents
# ---------------------------------------------------------------------------

def eval_sr(c: Sequence, order: int) -> TruncSeries:
    """Truncated series of the S-fraction with coefficients c_1..c_m."""
    if len(c) < order:
        raise InsufficientDepth("S-fraction needs %d levels for order %d"
                                % (order, len(c)))
    h = TruncSeries.one(order)
    for ci in reversed(c[:order]):
        h = (TruncSeries.one(order) - h.shift_up().scale(ci)).reciprocal()
    return h


def eval_tr(c: Sequence, d: Sequence, order: int) -> TruncSeries:
    """Truncated series of the T-fraction with coefficients (c_i, d_i)."""
    if len(c) < order or len(d) < order:
        raise InsufficientDepth("T-fraction needs %d levels for order %d"
                                % (order, min(len(c), len(d))))
    h = TruncSeries.one(order)
    t = TruncSeries.t(order)
    for ci, di in reversed(list(zip(c[:order], d[:order]))):
        h = (TruncSeries.one(order) - t.scale(di) - h.shift_up().scale(ci)).reciprocal()
    return h


def eval_jr(e: Sequence, f: Sequence, order: int) -> TruncSeries:
    """Truncated series of the J-fraction with coefficients (e_i, f_i)."""
    levels = (order + 1) // 2
    if len(e) < levels or len(f) < order // 2:
        raise InsufficientDepth("J-fraction needs %d levels for order %d"
                                % (levels, order))
    h = TruncSeries.one(order)
    t = TruncSeries.t(order)
    for j in range(levels - 1, -1, -1):
        u = TruncSeries.one(order) - t.scale(e[j])
        if j < len(f):
            u = u - h.shift_up(2).scale(f[j])
        h = u.reciprocal()
    return h


def eval_cfrac(cf: CFrac, order: int) -> TruncSeries:
    if cf.kind == "S":
        c = list(cf.c)
        if cf.terminated_at is not None:
            c = c + [0] * (order - len(c))
        return eval_sr(c, order)
    if cf.kind == "T":
        return eval_tr(list(cf.c), list(cf.d), order)
    e = list(cf.e)
    f = list(cf.f)
    if cf.terminated_at is not None:
        e = e + [0] * ((order + 1) // 2 - len(e))
        f = f + [0] * (order // 2 - len(f))
    return eval_jr(e, f, order)


# ---------------------------------------------------------------------------
# contraction and binomial transform
# ---------------------------------------------------------------------------

def contract(cf: CFrac) -> CFrac:
    """Even contraction of an S-fraction, or of a T-fraction whose even-level
    d coefficients vanish, into a J-fraction."""
    if cf.kind == "S":
        c = list(cf.c)
        d = [0] * len(c)
    elif cf.kind == "T":
        c = list(cf.c)
        d = list(cf.d)
        for i in range(2, len(d) + 1, 2):
            if not felem_is_zero(as_field(d[i - 1])):
                raise NotContractible("d_%d must vanish for even contraction" % i)
    else:
        raise NotContractible("input must be S or T kind")
    if not c:
        return CFrac("J")
    e = [c[0] + d[0]]
    f = []
    n = 1
    while 2 * n - 1 < len(c):
        if 2 * n < len(c):
            f.append(c[2 * n - 2] * c[2 * n - 1])
            if 2 * n + 1 <= len(c):
                en = c[2 * n - 1] + c[2 * n]
                if 2 * n + 1 <= len(d):
                    en = en + d[2 * n]
                e.append(en)
        else:
            f.append(c[2 * n - 2] * c[2 * n - 1])
        n += 1
    return CFrac("J", e=tuple(e), f=tuple(f))


def binomial_transform_seq(a: TruncSeries, xi) -> TruncSeries:
    """b_n = sum_k C(n,k) a_k xi^{n-k}, cross-checked against the ogf
    substitution law b(t) = (1-xi t)^{-1} a(t/(1-xi t))."""
    n = a.order
    out = []
    for i in range(n + 1):
        acc = None
        binom = 1
        for k in range(i, -1, -1):
            # binom = C(i, k)
            term = binom * a.coeffs[k]
            if i - k:
                term = term * xi ** (i - k)
            acc = term if acc is None else acc + term
            binom = binom * k // (i - k + 1)
        out.append(acc)
    direct = TruncSeries(n, out)
    geom = TruncSeries(n, [1] + [xi ** j for j in range(1, n + 1)])  # 1/(1-xi t)
    inner = geom.shift_up()  # t/(1-xi t)
    subst = a.compose(inner) * geom
    if direct != subst:
        raise AssertionError("binomial transform laws disagree")
    return direct


def transform_laws(kind: str, coeffs, xi, verify_order: Optional[int] = None) -> CFrac:
    """Coefficient bundle of the xi-binomial transform.

    kind: "S->T", "T->T", "J->J", "S->J", "T->J".  For T inputs the even-
    level d's must vanish.  With ``verify_order`` set, the output is checked
    against binomial_transform_seq applied to the evaluated input."""
    def oddpattern(m):
        return tuple(xi if i % 2 == 0 else 0 for i in range(m))

    if kind == "S->T":
        c = tuple(coeffs)
        out = CFrac("T", c=c, d=oddpattern(len(c)))
        src = CFrac("S", c=c)
    elif kind == "T->T":
        c, d = (tuple(coeffs[0]), tuple(coeffs[1]))
        _check_odd(d)
        out = CFrac("T", c=c, d=tuple(di + xi if i % 2 == 0 else di
                                      for i, di in enumerate(d)))
        src = CFrac("T", c=c, d=d)
    elif kind == "J->J":
        e, f = (tuple(coeffs[0]), tuple(coeffs[1]))
        out = CFrac("J", e=tuple(ei + xi for ei in e), f=f)
        src = CFrac("J", e=e, f=f)
    elif kind == "S->J":
        c = tuple(coeffs)
        e = [c[0] + xi]
        f = []
        n = 1
        while 2 * n < len(c):
            f.append(c[2 * n - 2] * c[2 * n - 1])
            e.append(c[2 * n - 1] + c[2 * n] + xi)
            n += 1
        if 2 * n - 1 < len(c):
            f.append(c[2 * n - 2] * c[2 * n - 1])
        out = CFrac("J", e=tuple(e), f=tuple(f))
        src = CFrac("S", c=c)
    elif kind == "T->J":
        c, d = (tuple(coeffs[0]), tuple(coeffs[1]))
        _check_odd(d)
        e = [c[0] + d[0] + xi]
        f = []
        n = 1
        while 2 * n < len(c):
            f.append(c[2 * n - 2] * c[2 * n - 1])
            en = c[2 * n - 1] + c[2 * n] + xi
            if 2 * n + 1 <= len(d):
                en = en + d[2 * n]
            e.append(en)
            n += 1
        if 2 * n - 1 < len(c):
            f.append(c[2 * n - 2] * c[2 * n - 1])
        out = CFrac("J", e=tuple(e), f=tuple(f))
        src = CFrac("T", c=c, d=d)
    else:
        raise ValueError("unknown transform kind %r" % kind)

    if verify_order is not None:
        want = binomial_transform_seq(eval_cfrac(src, verify_order), xi)
        got = eval_cfrac(out, verify_order)
        if want != got:
            raise AssertionError("transform law failed verification")
    return out


def _check_odd(d):
    for i in range(2, len(d) + 1, 2):
        if not felem_is_zero(as_field(d[i - 1])):
            raise NotContractible("law needs d_%d = 0" % i)
