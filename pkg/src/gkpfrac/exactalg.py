"""Exact scalar, multivariate-polynomial, rational-function and truncated
power-series arithmetic.

Everything downstream (triangles, continued fractions, the decision-tree
search, Hankel minors) runs on the three value types defined here:

* ``MPoly``     -- multivariate polynomial over Q in a declared, ordered
                   variable tuple, canonical under graded-lex term order.
* ``RatFunc``   -- reduced quotient of two MPoly values.
* ``TruncSeries`` -- truncated formal power series in an abstract variable t
                   whose coefficients are scalars, MPoly or RatFunc.

Scalars are plain ``int`` or ``fractions.Fraction``; no value is ever built
from a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class DivisionByZeroPolynomial(ZeroDivisionError):
    pass


class NonInvertibleSeries(ZeroDivisionError):
    pass


def _norm_scalar(c):
    """Collapse Fraction with denominator 1 to int; reject floats."""
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError("scalar must be int or Fraction, got %r" % type(c))


def rational(text) -> Fraction:
    """Parse an exact rational from 'num/den' or integer text."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted")
    text = str(text).strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError("decimal notation is not accepted: %r" % text)
    return Fraction(text)


def rat_str(c) -> str:
    f = Fraction(c)
    return "%d/%d" % (f.numerator, f.denominator) if f.denominator != 1 else str(f.numerator)


class MPoly:
    """Multivariate polynomial with exact rational coefficients.

    ``vars`` is the ordered variable tuple; ``terms`` maps exponent tuples
    (length == len(vars)) to nonzero int/Fraction coefficients.  Instances
    are immutable by convention: no method mutates ``terms`` after
    construction.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms=None):
        self.vars = tuple(vars)
        self.terms = {} if terms is None else terms

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c, vars=()) -> "MPoly":
        c = _norm_scalar(c)
        vars = tuple(vars)
        if c == 0:
            return MPoly(vars, {})
        return MPoly(vars, {(0,) * len(vars): c})

    @staticmethod
    def variable(name: str, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return MPoly(vars, {tuple(e): 1})

    @staticmethod
    def zero(vars=()) -> "MPoly":
        return MPoly(tuple(vars), {})

    @staticmethod
    def one(vars=()) -> "MPoly":
        return MPoly.constant(1, vars)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        [(e, c)] = list(self.terms.items()) if len(self.terms) == 1 else [(None, None)]
        if e is None or any(e):
            raise ValueError("not a constant polynomial")
        return c

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading_term(self):
        """(exponents, coeff) maximal in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def in_vars(self, vars: Sequence[str]) -> "MPoly":
        """Re-express over a variable tuple containing all current vars."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, ev in zip(pos, e):
                ne[p] = ev
            out[tuple(ne)] = c
        return MPoly(vars, out)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars == self.vars:
                return self, other
            merged = tuple(dict.fromkeys(self.vars + other.vars))
            return self.in_vars(merged), other.in_vars(merged)
        if isinstance(other, (int, Fraction)):
            return self, MPoly.constant(other, self.vars)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm_scalar(Fraction(s)) if isinstance(s, Fraction) else s
            elif e in out:
                del out[e]
        return MPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if not a.terms or not b.terms:
            return MPoly(a.vars, {})
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.terms.items():
            for ea, ca in a.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        for e, c in list(out.items()):
            if isinstance(c, Fraction) and c.denominator == 1:
                out[e] = int(c)
        return MPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            inv = Fraction(1, 1) / Fraction(other)
            return MPoly(self.vars, {e: _norm_scalar(c * inv) for e, c in self.terms.items()})
        return ratfunc(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, MPoly):
            a, b = self._coerce(other)
            return a.terms == b.terms
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        # canonical modulo variable embedding: hash only nonzero-support
        items = frozenset(
            (tuple((v, k) for v, k in zip(self.vars, e) if k), Fraction(c))
            for e, c in self.terms.items()
        )
        return hash(items)

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / views ----------------------------------------------

    def deriv(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                k = ne[i]
                ne[i] = k - 1
                key = tuple(ne)
                s = out.get(key, 0) + c * k
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return MPoly(self.vars, out)

    def coeffs_in(self, name: str) -> dict:
        """Map x-power -> MPoly coefficient (x-exponent stripped to 0)."""
        i = self.vars.index(name)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = list(e)
            ne[i] = 0
            buckets.setdefault(k, {})[tuple(ne)] = c
        return {k: MPoly(self.vars, t) for k, t in sorted(buckets.items())}

    def subs(self, mapping: dict):
        """Substitute values (scalar / MPoly / RatFunc) for variables.

        Variables absent from ``mapping`` stay themselves; the result lives
        in the arithmetic closure of the substituted values.
        """
        if not self.terms:
            return MPoly.zero(self.vars)
        vals = []
        for v in self.vars:
            if v in mapping:
                vals.append(mapping[v])
            else:
                vals.append(MPoly.variable(v, self.vars))
        powers = [dict() for _ in self.vars]

        def pw(i, k):
            if k == 0:
                return 1
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * vals[i]
            return cache[k]

        acc = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = term + acc
        return acc

    def eval_scalar(self, mapping: dict) -> Fraction:
        out = Fraction(0)
        pts = [Fraction(mapping[v]) for v in self.vars]
        for e, c in self.terms.items():
            t = Fraction(c)
            for x, k in zip(pts, e):
                if k:
                    t *= x ** k
            out += t
        return out

    # -- integer/monomial content --------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer, primitive."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = _int_gcd(num, f.numerator)
            den = den * f.denominator // _int_gcd(den, f.denominator)
        return Fraction(num, den)

    def monomial_content(self):
        if not self.terms:
            return (0,) * len(self.vars)
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, k in enumerate(e):
                if k < m[i]:
                    m[i] = k
        return tuple(m)

    def map_coeffs(self, fn) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            nc = _norm_scalar(Fraction(fn(c)))
            if nc:
                out[e] = nc
        return MPoly(self.vars, out)

    # -- display --------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                "%s^%d" % (v, k) if k > 1 else v
                for v, k in zip(self.vars, e)
                if k
            )
            if mon:
                if c == 1:
                    bits.append(mon)
                elif c == -1:
                    bits.append("-" + mon)
                else:
                    bits.append("%s*%s" % (rat_str(c), mon))
            else:
                bits.append(rat_str(c))
        s = " + ".join(bits).replace("+ -", "- ")
        return s


def variables(names, extra=()) -> tuple:
    """Generators over one shared registry: variables('a b c') -> (a, b, c)."""
    if isinstance(names, str):
        names = names.split()
    allnames = tuple(names) + tuple(extra)
    return tuple(MPoly.variable(n, allnames) for n in names)


def as_mpoly(x, vars=()) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.constant(x, vars)
    raise TypeError("cannot view %r as MPoly" % type(x))


# ---------------------------------------------------------------------------
# exact division and multivariate gcd
# ---------------------------------------------------------------------------

def divide_exact(a: MPoly, b: MPoly):
    """Return a/b if b divides a exactly over Q[vars], else None."""
    if b.is_zero():
        raise DivisionByZeroPolynomial("division by zero polynomial")
    a, b = a._coerce(b)
    if a.is_zero():
        return MPoly.zero(a.vars)
    if b.is_constant():
        return a / b.constant_value()
    eb, cb = b.leading_term()
    rem = dict(a.terms)
    quo = {}
    while rem:
        ea = max(rem, key=lambda t: (sum(t), t))
        diff = tuple(x - y for x, y in zip(ea, eb))
        if any(d < 0 for d in diff):
            return None
        q = _norm_scalar(Fraction(rem[ea]) / Fraction(cb))
        quo[diff] = q
        for e2, c2 in b.terms.items():
            key = tuple(x + y for x, y in zip(diff, e2))
            s = rem.get(key, 0) - q * c2
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return MPoly(a.vars, quo)


def _poly_in_main(p: MPoly, i: int):
    """View p as univariate in vars[i]: list of MPoly coefficients (low->high)."""
    d = max((e[i] for e in p.terms), default=0)
    coeffs = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        ne = list(e)
        k = ne[i]
        ne[i] = 0
        coeffs[k][tuple(ne)] = c
    return [MPoly(p.vars, t) for t in coeffs]


def _from_main(coeffs, i, vars):
    out = {}
    for k, p in enumerate(coeffs):
        for e, c in p.terms.items():
            ne = list(e)
            ne[i] = k
            out[tuple(ne)] = c
    return MPoly(vars, out)


def _gcd_many(polys):
    g = None
    for p in polys:
        g = p if g is None else mpoly_gcd(g, p)
        if g.is_constant() and not g.is_zero():
            return MPoly.one(g.vars)
    return g if g is not None else MPoly.zero(())


def _primitive(coeffs):
    """Divide a coefficient list by the gcd of its entries."""
    g = _gcd_many([c for c in coeffs if not c.is_zero()])
    if g.is_constant():
        return coeffs, g
    return [divide_exact(c, g) for c in coeffs], g


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """gcd over Q[vars], normalized primitive-integer with positive lead."""
    a, b = a._coerce(b)
    if a.is_zero():
        return _normalize_gcd(b)
    if b.is_zero():
        return _normalize_gcd(a)
    ma = a.monomial_content()
    mb = b.monomial_content()
    mg = tuple(min(x, y) for x, y in zip(ma, mb))
    if any(mg):
        strip = lambda p: MPoly(p.vars, {tuple(x - y for x, y in zip(e, mg)): c
                                         for e, c in p.terms.items()})
        return _attach_monomial(mpoly_gcd(strip(a), strip(b)), mg)
    if a.is_constant() or b.is_constant():
        return MPoly.one(a.vars)
    # after stripping the common monomial, a monomial is coprime to the rest
    if len(a.terms) == 1 or len(b.terms) == 1:
        return MPoly.one(a.vars)
    # cheap structural checks
    if a.terms == b.terms:
        return _normalize_gcd(a)
    q = divide_exact(a, b)
    if q is not None:
        return _normalize_gcd(b)
    q = divide_exact(b, a)
    if q is not None:
        return _normalize_gcd(a)
    # main variable: first var occurring in both
    main = None
    for i, v in enumerate(a.vars):
        if a.degree_in(v) > 0 and b.degree_in(v) > 0:
            main = i
            break
    if main is None:
        return MPoly.one(a.vars)
    fa = _poly_in_main(a, main)
    fb = _poly_in_main(b, main)
    fa, ca = _primitive(fa)
    fb, cb = _primitive(fb)
    cont = mpoly_gcd(ca, cb)
    prim = _prs_gcd(fa, fb, main, a.vars)
    return _normalize_gcd(cont * prim)


def _attach_monomial(g: MPoly, m) -> MPoly:
    return g * MPoly(g.vars, {tuple(m): 1})


def _normalize_gcd(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    c = p.content()
    _, lead = p.leading_term()
    if lead < 0:
        c = -c
    return p.map_coeffs(lambda x: Fraction(x) / c)


def _prs_gcd(F, G, main, vars):
    """Primitive PRS on univariate-in-main coefficient lists."""
    if len(F) - 1 < len(G) - 1:
        F, G = G, F
    while True:
        dG = len(G) - 1
        if dG == 0:
            return MPoly.one(vars)
        R = _pseudo_rem(F, G, vars)
        while R and R[-1].is_zero():
            R.pop()
        if not R:
            Gp, _ = _primitive(G)
            return _from_main(Gp, main, vars)
        R, _ = _primitive(R)
        F, G = G, R


def _pseudo_rem(F, G, vars):
    """Pseudo-remainder of coefficient lists (univariate over MPoly)."""
    F = list(F)
    dF, dG = len(F) - 1, len(G) - 1
    lg = G[-1]
    for k in range(dF - dG, -1, -1):
        top = F[dG + k]
        if top.is_zero():
            continue
        F = [c * lg for c in F]
        for j, gj in enumerate(G):
            F[j + k] = F[j + k] - top * gj
        # after multiplying by lg and cancelling, top slot is zero
        F[dG + k] = MPoly.zero(vars)
    return F[:dG]


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced quotient num/den of two MPoly over one variable tuple.

    Canonical form: gcd(num, den) constant, den integer-primitive with
    positive graded-lex leading coefficient.  Equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, reduce=True):
        if den.is_zero():
            raise DivisionByZeroPolynomial("zero denominator")
        num, den = num._coerce(den)
        if reduce:
            num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den

    # -- basics ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_constant()

    def as_mpoly(self) -> MPoly:
        if not self.is_poly():
            raise ValueError("not a polynomial: %r" % self)
        return self.num / self.den.constant_value()

    @property
    def vars(self):
        return self.num.vars

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other, MPoly.one(other.vars), reduce=False)
        if isinstance(other, (int, Fraction)):
            return RatFunc(MPoly.constant(other, self.vars), MPoly.one(self.vars), reduce=False)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZeroPolynomial("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZeroPolynomial("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if isinstance(other, RatFunc):
            return self.num * other.den == other.num * self.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def subs(self, mapping: dict):
        return as_field(self.num.subs(mapping)) / as_field(self.den.subs(mapping))

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return "(%r)/(%r)" % (self.num, self.den)


def _reduce_fraction(num: MPoly, den: MPoly):
    if num.is_zero():
        return num, MPoly.one(den.vars)
    if den.is_constant():
        pass
    elif num.is_constant():
        pass
    else:
        mn = num.monomial_content()
        md = den.monomial_content()
        mg = tuple(min(x, y) for x, y in zip(mn, md))
        if any(mg):
            strip = lambda p: MPoly(p.vars, {tuple(x - y for x, y in zip(e, mg)): c
                                             for e, c in p.terms.items()})
            num, den = strip(num), strip(den)
        q = divide_exact(num, den)
        if q is not None:
            num, den = q, MPoly.one(den.vars)
        else:
            q = divide_exact(den, num)
            if q is not None and q.is_constant():
                num, den = MPoly.constant(Fraction(1), num.vars), q
            else:
                g = mpoly_gcd(num, den)
                if not g.is_constant():
                    num = divide_exact(num, g)
                    den = divide_exact(den, g)
    # scale: den integer-primitive, positive leading coefficient
    c = den.content()
    _, lead = den.leading_term()
    if lead < 0:
        c = -c
    if c != 1:
        den = den.map_coeffs(lambda x: Fraction(x) / c)
        num = num.map_coeffs(lambda x: Fraction(x) / c)
    return num, den


def ratfunc(num, den) -> RatFunc:
    num = num if isinstance(num, MPoly) else MPoly.constant(num)
    den = den if isinstance(den, MPoly) else MPoly.constant(den, num.vars)
    return RatFunc(num, den)


def as_field(x):
    """Promote to a field element usable in series coefficients."""
    if isinstance(x, (int, Fraction, MPoly, RatFunc)):
        return x
    raise TypeError("not a field element: %r" % type(x))


def felem_is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, MPoly):
        return x.is_zero()
    if isinstance(x, RatFunc):
        return x.is_zero()
    raise TypeError(type(x))


def felem_inv(x):
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise NonInvertibleSeries("zero constant term")
        return Fraction(1, 1) / Fraction(x)
    if isinstance(x, MPoly):
        if x.is_zero():
            raise NonInvertibleSeries("zero constant term")
        if x.is_constant():
            return Fraction(1) / Fraction(x.constant_value())
        return RatFunc(MPoly.one(x.vars), x)
    if isinstance(x, RatFunc):
        if x.is_zero():
            raise NonInvertibleSeries("zero constant term")
        return x.inv()
    raise TypeError(type(x))


def felem_div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return as_field(a) * felem_inv(b)


def felem_eq(a, b) -> bool:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    return felem_is_zero(a - b)


# ---------------------------------------------------------------------------
# polynomial division in a designated variable
# ---------------------------------------------------------------------------

def remainder_in_x(Q, R, x: str = "x"):
    """Division Q = quot*R + rem in the variable ``x`` over the rational-
    function field of the remaining variables.

    Q, R may be MPoly or have RatFunc coefficients (given as RatFunc);
    returns (quotient, remainder) with deg_x(rem) < deg_x(R).
    """
    Qc = _x_coeff_map(Q, x)
    Rc = _x_coeff_map(R, x)
    if not Rc:
        raise DivisionByZeroPolynomial("R is identically zero")
    dR = max(Rc)
    lead = Rc[dR]
    quot: dict[int, object] = {}
    rem = dict(Qc)
    while rem:
        dQ = max(rem)
        if dQ < dR:
            break
        factor = felem_div(rem[dQ], lead)
        quot[dQ - dR] = factor
        for k, c in Rc.items():
            key = dQ - dR + k
            val = rem.get(key, 0) - factor * c
            if felem_is_zero(val):
                rem.pop(key, None)
            else:
                rem[key] = val
    return _x_coeff_unmap(quot, x, Q), _x_coeff_unmap(rem, x, Q)


def _x_coeff_map(p, x):
    if isinstance(p, RatFunc):
        num = p.num.coeffs_in(x) if x in p.num.vars else {0: p.num}
        if x in p.den.vars and p.den.degree_in(x) > 0:
            raise ValueError("denominator must be free of %s" % x)
        return {k: RatFunc(v, p.den) for k, v in num.items() if not v.is_zero()}
    p = as_mpoly(p)
    if x not in p.vars:
        return {0: p} if not p.is_zero() else {}
    return {k: v for k, v in p.coeffs_in(x).items() if not v.is_zero()}


def _x_coeff_unmap(cmap, x, template):
    vars = template.vars if isinstance(template, (MPoly, RatFunc)) else (x,)
    if x not in vars:
        vars = vars + (x,)
    xp = MPoly.variable(x, vars)
    out = None
    for k, c in sorted(cmap.items()):
        term = c * xp ** k
        out = term if out is None else out + term
    if out is None:
        return MPoly.zero(vars)
    return out


# ---------------------------------------------------------------------------
# truncated formal power series
# ---------------------------------------------------------------------------

class TruncSeries:
    """Power series in t truncated at a fixed order N (inclusive)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        coeffs = list(coeffs)
        if len(coeffs) < order + 1:
            coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs[: order + 1]

    @staticmethod
    def from_list(coeffs, order=None) -> "TruncSeries":
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        return TruncSeries(order, coeffs)

    @staticmethod
    def one(order: int) -> "TruncSeries":
        return TruncSeries(order, [1] + [0] * order)

    @staticmethod
    def t(order: int) -> "TruncSeries":
        return TruncSeries(order, [0, 1] + [0] * (order - 1))

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(order, self.coeffs[: order + 1])

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction, MPoly, RatFunc)):
            return TruncSeries(self.order, [other] + [0] * self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncSeries(n, [self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncSeries(n, [self.coeffs[i] - o.coeffs[i] for i in range(n + 1)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                a = self.coeffs[i]
                b = o.coeffs[k - i]
                if felem_is_zero(a) or felem_is_zero(b):
                    continue
                term = a * b
                acc = term if acc is None else acc + term
            out.append(0 if acc is None else acc)
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(self.order, [c * x for x in self.coeffs])

    def shift_up(self, k: int = 1) -> "TruncSeries":
        """Multiply by t^k."""
        return TruncSeries(self.order, [0] * k + self.coeffs[: self.order + 1 - k])

    def shift_down(self, k: int = 1) -> "TruncSeries":
        """Divide by t^k; the dropped coefficients must vanish."""
        for i in range(k):
            if not felem_is_zero(self.coeffs[i]):
                raise ValueError("series not divisible by t^%d" % k)
        return TruncSeries(self.order - k, self.coeffs[k:])

    def reciprocal(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if felem_is_zero(c0):
            raise NonInvertibleSeries("zero constant term")
        n = self.order
        if felem_eq(c0, 1):
            out = [1]
            for k in range(1, n + 1):
                acc = None
                for j in range(1, k + 1):
                    a = self.coeffs[j]
                    if felem_is_zero(a):
                        continue
                    term = a * out[k - j]
                    acc = term if acc is None else acc + term
                out.append(0 if acc is None else -acc)
            return TruncSeries(n, out)
        inv0 = felem_inv(c0)
        out = [inv0]
        for k in range(1, n + 1):
            acc = None
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if felem_is_zero(a):
                    continue
                term = a * out[k - j]
                acc = term if acc is None else acc + term
            out.append(0 if acc is None else -(inv0 * acc))
        return TruncSeries(n, out)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.reciprocal()

    def deriv_t(self) -> "TruncSeries":
        return TruncSeries(self.order - 1,
                           [(i + 1) * self.coeffs[i + 1] for i in range(self.order)])

    def deriv_coeff(self, name: str) -> "TruncSeries":
        out = []
        for c in self.coeffs:
            if isinstance(c, (int, Fraction)):
                out.append(0)
            elif isinstance(c, MPoly):
                out.append(c.deriv(name))
            else:
                num, den = c.num, c.den
                out.append(RatFunc(num.deriv(name) * den - num * den.deriv(name), den * den))
        return TruncSeries(self.order, out)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        if not felem_is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        acc = TruncSeries(n, [self.coeffs[0]] + [0] * n)
        power = TruncSeries.one(n)
        for k in range(1, n + 1):
            power = power * inner
            c = self.coeffs[k]
            if not felem_is_zero(c):
                acc = acc + power.scale(c)
        return acc

    def exp(self) -> "TruncSeries":
        if not felem_is_zero(self.coeffs[0]):
            raise ValueError("exp requires zero constant term")
        n = self.order
        # E' = f' E  =>  (k+1) e_{k+1} = sum_j (j+1) f_{j+1} e_{k-j}
        e = [1]
        for k in range(n):
            acc = None
            for j in range(k + 1):
                f = self.coeffs[j + 1]
                if felem_is_zero(f):
                    continue
                term = ((j + 1) * f) * e[k - j]
                acc = term if acc is None else acc + term
            e.append(0 if acc is None else felem_div(acc, k + 1))
        return TruncSeries(n, e)

    def log(self) -> "TruncSeries":
        if not felem_eq(self.coeffs[0], 1):
            raise ValueError("log requires constant term 1")
        n = self.order
        # L' = f'/f : l_k via  k f_0 l_k = k f_k - sum_{j=1}^{k-1} j l_j f_{k-j}
        l = [0]
        for k in range(1, n + 1):
            acc = k * self.coeffs[k] if not felem_is_zero(self.coeffs[k]) else None
            for j in range(1, k):
                f = self.coeffs[k - j]
                if felem_is_zero(f) or felem_is_zero(l[j]):
                    continue
                term = (j * l[j]) * f
                acc = -term if acc is None else acc - term
            l.append(0 if acc is None else felem_div(acc, k))
        return TruncSeries(n, l)

    def pow_int(self, m: int) -> "TruncSeries":
        out = TruncSeries.one(self.order)
        for _ in range(m):
            out = out * self
        return out

    def pow_field(self, exponent) -> "TruncSeries":
        """self**exponent via exp(exponent*log(self)); needs [t^0] = 1."""
        return self.log().scale(exponent).exp()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return all(felem_eq(self.coeffs[i], o.coeffs[i]) for i in range(n + 1))

    def is_zero(self) -> bool:
        return all(felem_is_zero(c) for c in self.coeffs)

    def __repr__(self):
        return "TruncSeries(order=%d, %s)" % (
            self.order, ", ".join("[t^%d] %r" % (i, c) for i, c in enumerate(self.coeffs)))


def series_reciprocal(s: TruncSeries) -> TruncSeries:
    """Multiplicative inverse through the truncation order."""
    return s.reciprocal()


def generalized_binomial_series(base: TruncSeries, exponent) -> TruncSeries:
    """(base)**exponent for a concrete rational exponent, [t^0]base = 1.

    Expanded as sum_k C(exponent, k) (base-1)^k, exact through the order.
    """
    if not felem_eq(base.coeffs[0], 1):
        raise ValueError("base must have constant term 1")
    e = Fraction(exponent)
    n = base.order
    w = base - 1
    acc = TruncSeries.one(n)
    power = TruncSeries.one(n)
    binom = Fraction(1)
    for k in range(1, n + 1):
        power = power * w
        binom = binom * (e - (k - 1)) / k
        if binom:
            acc = acc + power.scale(binom)
    return acc


def exp_series(a, order: int) -> TruncSeries:
    """e^{a t} truncated: coefficients a^n / n!."""
    coeffs = [1]
    fact = 1
    pw = 1
    for n in range(1, order + 1):
        pw = pw * a
        fact = fact * n
        coeffs.append(pw * Fraction(1, fact))
    return TruncSeries(order, coeffs)


# ---------------------------------------------------------------------------
# JSON encoding
# ---------------------------------------------------------------------------

def mpoly_to_json(p: MPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [[list(e), rat_str(c)] for e, c in p.sorted_terms()],
    }


def felem_to_json(c):
    if isinstance(c, (int, Fraction)):
        return rat_str(c)
    if isinstance(c, MPoly):
        return mpoly_to_json(c)
    if isinstance(c, RatFunc):
        if c.is_poly():
            return mpoly_to_json(c.as_mpoly())
        return {"num": mpoly_to_json(c.num), "den": mpoly_to_json(c.den)}
    raise TypeError(type(c))


def series_to_json(s: TruncSeries) -> dict:
    return {"order": s.order, "coeffs": [felem_to_json(c) for c in s.coeffs]}


def mpoly_from_json(d) -> MPoly:
    vars = tuple(d["vars"])
    terms = {}
    for e, c in d["terms"]:
        terms[tuple(e)] = _norm_scalar(rational(c))
    return MPoly(vars, terms)
