"""Triangular arrays from two-term and four-term linear recurrences, their
row-generating polynomials, truncated generating functions, and residual
checks for the differential recurrence / PDE satisfied by them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .exactalg import (
    Fraction, MPoly, RatFunc, TruncSeries, as_field, felem_eq, felem_is_zero,
    felem_to_json, variables,
)

PARAM_NAMES = ("alpha", "beta", "gamma", "alphap", "betap", "gammap")


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class GKPParams:
    """Coefficient tuple mu = (alpha, beta, gamma, alpha', beta', gamma')."""
    alpha: object
    beta: object
    gamma: object
    alphap: object
    betap: object
    gammap: object

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma,
                self.alphap, self.betap, self.gammap)

    def __iter__(self):
        return iter(self.as_tuple())

    @staticmethod
    def of(*vals) -> "GKPParams":
        if len(vals) == 1 and isinstance(vals[0], (tuple, list, GKPParams)):
            vals = tuple(vals[0])
        if len(vals) != 6:
            raise ValueError("need 6 parameters")
        return GKPParams(*vals)

    @staticmethod
    def symbolic(extra=("x",)) -> "GKPParams":
        return GKPParams(*variables(PARAM_NAMES, extra=extra))


@dataclass(frozen=True)
class GKPZParams:
    """GKP coefficients plus the two extra weights sigma, tau."""
    alpha: object
    beta: object
    gamma: object
    alphap: object
    betap: object
    gammap: object
    sigma: object
    tau: object

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma, self.alphap, self.betap,
                self.gammap, self.sigma, self.tau)

    def gkp_part(self) -> GKPParams:
        return GKPParams(*self.as_tuple()[:6])


class Triangle:
    """Lower-triangular array T(n,k), 0 <= k <= n <= order."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        self.order = len(self.rows) - 1
        for n, r in enumerate(self.rows):
            if len(r) != n + 1:
                raise ValueError("row %d must have %d entries" % (n, n + 1))

    def entry(self, n: int, k: int):
        if k < 0 or k > n or n > self.order:
            return 0
        return self.rows[n][k]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(
            felem_eq(a, b)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def map(self, fn) -> "Triangle":
        return Triangle([[fn(c) for c in row] for row in self.rows])

    def to_json(self):
        return {"order": self.order,
                "rows": [[felem_to_json(c) for c in row] for row in self.rows]}

    def __repr__(self):
        return "Triangle(order=%d)" % self.order


class RowPolys(list):
    """P_0..P_N with P_n(x) = sum_k T(n,k) x^k."""


def gkp_triangle(mu, N: int) -> Triangle:
    """Unroll T(n,k) = (an+bk+g)T(n-1,k) + (a'n+b'k+g')T(n-1,k-1)."""
    a, b, g, ap, bp, gp = GKPParams.of(mu)
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            acc = 0
            if k <= n - 1:
                acc = (a * n + b * k + g) * prev[k]
            if k >= 1:
                term = (ap * n + bp * k + gp) * prev[k - 1]
                acc = term if isinstance(acc, int) and acc == 0 else acc + term
            row.append(acc)
        rows.append(row)
    return Triangle(rows)


def gkpz_triangle(mu8, N: int) -> Triangle:
    """Four-term extension: extra sigma*(n-k+1)*T(n-1,k-2) and
    tau*(k+1)*T(n-1,k+1) terms; stays lower-triangular."""
    if isinstance(mu8, GKPZParams):
        a, b, g, ap, bp, gp, sg, tu = mu8.as_tuple()
    else:
        a, b, g, ap, bp, gp, sg, tu = tuple(mu8)
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            acc = 0
            if k <= n - 1:
                acc = acc + (a * n + b * k + g) * prev[k]
            if 1 <= k:
                acc = acc + (ap * n + bp * k + gp) * prev[k - 1]
            if 2 <= k:
                acc = acc + sg * (n - k + 1) * prev[k - 2]
            if k + 1 <= n - 1:
                acc = acc + tu * (k + 1) * prev[k + 1]
            row.append(acc)
        rows.append(row)
    return Triangle(rows)


def binomial_like_triangle(coeff_rule: Callable, N: int) -> Triangle:
    """T(n,k) = a_{n,k} T(n-1,k) + a'_{n,k} T(n-1,k-1), T(0,k) = delta_k0.

    ``coeff_rule(n, k)`` returns the pair (a_{n,k}, a'_{n,k})."""
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            a_nk, ap_nk = coeff_rule(n, k)
            acc = 0
            if k <= n - 1:
                acc = acc + a_nk * prev[k]
            if k >= 1:
                acc = acc + ap_nk * prev[k - 1]
            row.append(acc)
        rows.append(row)
    return Triangle(rows)


def gkp_rule(mu) -> Callable:
    """The GKP specialization of the binomial-like coefficient rule."""
    a, b, g, ap, bp, gp = GKPParams.of(mu)

    def rule(n, k):
        return a * n + b * k + g, ap * n + bp * k + gp

    return rule


def _xvar_for(entries):
    for c in entries:
        if isinstance(c, MPoly):
            return c.vars if "x" in c.vars else c.vars + ("x",)
        if isinstance(c, RatFunc):
            return c.vars if "x" in c.vars else c.vars + ("x",)
    return ("x",)


def row_polys(t: Triangle) -> RowPolys:
    vars = _xvar_for([c for row in t.rows for c in row])
    x = MPoly.variable("x", vars)
    out = RowPolys()
    for row in t.rows:
        p = 0
        for k, c in enumerate(row):
            if felem_is_zero(as_field(c)):
                continue
            p = p + c * x ** k
        out.append(p if not isinstance(p, int) else MPoly.constant(p, vars))
    return out


def ogf_trunc(t: Triangle) -> TruncSeries:
    ps = row_polys(t)
    return TruncSeries(t.order, list(ps))


def egf_trunc(t: Triangle) -> TruncSeries:
    ps = row_polys(t)
    return TruncSeries(
        t.order, [p * Fraction(1, factorial(n)) for n, p in enumerate(ps)])


def residual_checks(mu, N: int):
    """Residuals of the linear differential recurrence for P_n and of the
    first-order linear PDE for the egf; both vanish identically for every mu.
    """
    a, b, g, ap, bp, gp = GKPParams.of(mu)
    t = gkp_triangle(mu, N)
    ps = row_polys(t)
    vars = ps[1].vars if N >= 1 else ("x",)
    x = MPoly.variable("x", vars)

    ode_residuals = []
    for n in range(1, N + 1):
        pn, pm = ps[n], ps[n - 1]
        res = pn - (n * (a + ap * x) + g + (bp + gp) * x) * pm \
            - x * (b + bp * x) * pm.deriv("x")
        ode_residuals.append(res)

    F = egf_trunc(t)
    Ft = F.deriv_t()
    Fx = F.deriv_coeff("x").truncate(N - 1)
    lhs = TruncSeries(N - 1, [1, -(a + ap * x)]) * Ft
    rhs = F.truncate(N - 1).scale(a + g + (ap + bp + gp) * x) + Fx.scale(b * x + bp * x * x)
    pde_residual = lhs - rhs
    return ode_residuals, pde_residual


# ---------------------------------------------------------------------------
# closed-form entry checks
# ---------------------------------------------------------------------------

def _prod(factors, start=1):
    acc = start
    for f in factors:
        acc = acc * f
    return acc


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def closed_form_check(family_id: str, params, N: int) -> dict:
    """Compare gkp_triangle output against a catalogued closed form.

    Returns {"id", "ok", "first_mismatch"}: symbolic comparison whenever the
    template parameters are symbolic.
    """
    if family_id not in CLOSED_FORMS:
        raise UnknownFamily(family_id)
    mu, entry = CLOSED_FORMS[family_id](params)
    t = gkp_triangle(mu, N)
    for n in range(N + 1):
        for k in range(n + 1):
            want = entry(n, k)
            if not felem_eq(as_field(t.entry(n, k)), as_field(want)):
                return {"id": family_id, "ok": False,
                        "first_mismatch": {"n": n, "k": k}}
    return {"id": family_id, "ok": True, "first_mismatch": None}


def make_closed_forms():
    forms = {}

    def f2a(params):
        alpha, ap, bp, gp = params
        mu = GKPParams(alpha, -alpha, -alpha, ap, bp, gp)

        def entry(n, k):
            if k != n:
                return 0
            return _prod(gp + j * (ap + bp) for j in range(1, n + 1))

        return mu, entry

    def f2b(params):
        alpha, beta, gamma, bp = params
        mu = GKPParams(alpha, beta, gamma, 0, bp, -bp)

        def entry(n, k):
            if k != 0:
                return 0
            return _prod(gamma + j * alpha for j in range(1, n + 1))

        return mu, entry

    def f5(params):
        from .combinat import stirling_cycle
        a, g, ap, gp = params
        mu = GKPParams(a, 0, g, ap, 0, gp)

        def entry(n, k):
            acc = 0
            for t in range(n + 1):
                for s in range(t + 1):
                    c = stirling_cycle(n, t) * _binom(t, s) * _binom(n - t, k - s)
                    if c == 0:
                        continue
                    acc = acc + c * (a + g) ** (t - s) * (ap + gp) ** s \
                        * a ** (n - k + s - t) * ap ** (k - s)
            return acc

        return mu, entry

    def f6(params):
        ap, bp, gp, kappa = params
        mu = GKPParams(kappa * (ap + bp), kappa * bp, kappa * gp, ap, bp, gp)

        def entry(n, k):
            return kappa ** (n - k) * _binom(n, k) \
                * _prod(gp + j * (ap + bp) for j in range(1, n + 1))

        return mu, entry

    def f6_eulerian_s(params):
        (s,) = params
        mu = GKPParams(0, 1, s, 1, -1, -s)

        def entry(n, k):
            return (-1) ** k * s ** n * _binom(n, k)

        return mu, entry

    def multifactorial_c(params):
        nu, rho = params
        mu = GKPParams(nu, 0, -rho, 0, 0, 0)

        def entry(n, k):
            if k != 0:
                return 0
            return _prod(n * nu - rho - j * nu for j in range(n))

        return mu, entry

    def multifactorial_b(params):
        nu, rho = params
        mu = GKPParams(nu, -nu, -rho, 0, 0, 0)

        def entry(n, k):
            if k != 0:
                return 0
            return _prod(j * nu - rho for j in range(1, n + 1))

        return mu, entry

    def nearly_binom_a(params):
        g, bp, gp = params
        mu = GKPParams(0, 0, g, 0, bp, gp)

        def entry(n, k):
            return _binom(n, k) * g ** (n - k) * _prod(gp + j * bp for j in range(1, k + 1))

        return mu, entry

    def nearly_binom_b(params):
        a, g, gp = params
        mu = GKPParams(a, -a, g, 0, 0, gp)

        def entry(n, k):
            return _binom(n, k) * gp ** k * _prod(g + j * a for j in range(1, n - k + 1))

        return mu, entry

    def ordered_subset_shift(params):
        from .combinat import stirling_subset
        mu = GKPParams(0, 1, 1, 0, 1, 0)

        def entry(n, k):
            return factorial(k) * stirling_subset(n + 1, k + 1)

        return mu, entry

    def stirling_cycle_numbers(params):
        from .combinat import stirling_cycle
        mu = GKPParams(1, 0, -1, 0, 0, 1)

        def entry(n, k):
            return stirling_cycle(n, k)

        return mu, entry

    forms["2a"] = f2a
    forms["2b"] = f2b
    forms["5"] = f5
    forms["6"] = f6
    forms["6-eulerian-s"] = f6_eulerian_s
    forms["multifactorial-c"] = multifactorial_c
    forms["multifactorial-b"] = multifactorial_b
    forms["nearly-binomial-a"] = nearly_binom_a
    forms["nearly-binomial-b"] = nearly_binom_b
    forms["ordered-subset-shift"] = ordered_subset_shift
    forms["stirling-cycle"] = stirling_cycle_numbers
    return forms


CLOSED_FORMS = make_closed_forms()


def tilde_params(tilde) -> GKPParams:
    """Translate the shifted parametrization
    T(n,k) = [ta(n-1)+tb k+tg] T(n-1,k) + [ta'(n-1)+tb'(k-1)+tg'] T(n-1,k-1)
    into standard coefficients."""
    ta, tb, tg, tap, tbp, tgp = tuple(tilde)
    return GKPParams(ta, tb, tg - ta, tap, tbp, tgp - tap - tbp)


def rescaled_rule(base_rule: Callable, c_seq, d_seq, e_seq) -> Callable:
    """Weight rule (n,k) -> (c_{n-k} e_n a_{n,k}, d_k e_n a'_{n,k})."""

    def rule(n, k):
        a_nk, ap_nk = base_rule(n, k)
        lvl = c_seq(n - k) * e_seq(n) * a_nk if k <= n - 1 else 0
        rise = d_seq(k) * e_seq(n) * ap_nk if k >= 1 else 0
        return lvl, rise

    return rule


def rescale_weight(c_seq, d_seq, e_seq, n, k):
    """Accumulated product c_1..c_{n-k} d_1..d_k e_1..e_n."""
    acc = 1
    for j in range(1, n - k + 1):
        acc = acc * c_seq(j)
    for j in range(1, k + 1):
        acc = acc * d_seq(j)
    for j in range(1, n + 1):
        acc = acc * e_seq(j)
    return acc
