"""Brute-force permutation-statistic oracles and classical number triangles.

These provide the independent side of the dual-route checks: the master
permutation polynomial summed over the full symmetric group, Stirling and
Eulerian numbers from their own recurrences, and the explicit summation
formulas they satisfy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .exactalg import (
    MPoly, TruncSeries, as_field, exp_series, felem_eq, generalized_binomial_series,
    variables,
)
from .cfrac import eval_sr


class InvalidPermutation(ValueError):
    pass


class SizeLimit(ValueError):
    pass


BRUTE_FORCE_CAP = 9


@dataclass(frozen=True)
class PermStats:
    cyc: int
    exc: int
    rec: int
    arec: int
    erec: int
    earec: int


def perm_stats(sigma) -> PermStats:
    """Cycle, excedance and record statistics of a permutation of [n],
    given as the value sequence (sigma(1), ..., sigma(n))."""
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidPermutation(sigma)
    rec = arec = erec = earec = exc = 0
    is_rec = [False] * n
    is_arec = [False] * n
    best = 0
    for i, v in enumerate(sigma):
        if v > best:
            best = v
            is_rec[i] = True
    best = n + 1
    for i in range(n - 1, -1, -1):
        if sigma[i] < best:
            best = sigma[i]
            is_arec[i] = True
    for i in range(n):
        if is_rec[i]:
            rec += 1
            if not is_arec[i]:
                erec += 1
        if is_arec[i]:
            arec += 1
            if not is_rec[i]:
                earec += 1
        if sigma[i] > i + 1:
            exc += 1
    cyc = 0
    seen = [False] * n
    for i in range(n):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = sigma[j] - 1
    return PermStats(cyc=cyc, exc=exc, rec=rec, arec=arec, erec=erec, earec=earec)


MASTER_VARS = ("w", "y", "u", "v")


def master_poly_bruteforce(n: int) -> MPoly:
    """Sum over all permutations of [n] of
    w^cyc y^erec u^(n-exc-cyc) v^(exc-erec)."""
    if n > BRUTE_FORCE_CAP:
        raise SizeLimit("n=%d exceeds the brute-force cap %d" % (n, BRUTE_FORCE_CAP))
    acc = {}
    for sigma in permutations(range(1, n + 1)):
        st = perm_stats(sigma)
        key = (st.cyc, st.erec, n - st.exc - st.cyc, st.exc - st.erec)
        acc[key] = acc.get(key, 0) + 1
    return MPoly(MASTER_VARS, acc)


def master_sfrac_coeffs(m: int):
    """The S-fraction coefficients c_{2k-1} = w+(k-1)u, c_{2k} = y+(k-1)v."""
    w, y, u, v = variables(MASTER_VARS)
    cs = []
    for i in range(1, m + 1):
        k = (i + 1) // 2
        cs.append(w + (k - 1) * u if i % 2 else y + (k - 1) * v)
    return cs


def verify_master_sfrac(n_max: int) -> dict:
    """eval of the master S-fraction == brute-force sum over permutations,
    symbolically in all four weights."""
    if n_max > 8:
        raise SizeLimit("brute force capped at 8 here")
    series = eval_sr(master_sfrac_coeffs(n_max), n_max)
    for n in range(n_max + 1):
        if not felem_eq(as_field(series.coeffs[n]), master_poly_bruteforce(n)):
            return {"ok": False, "first_mismatch": n}
    return {"ok": True, "verified_to": n_max, "first_mismatch": None}


# ---------------------------------------------------------------------------
# classical triangles
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def stirling_subset(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return k * stirling_subset(n - 1, k) + stirling_subset(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling_cycle(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return (n - 1) * stirling_cycle(n - 1, k) + stirling_cycle(n - 1, k - 1)


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Number of permutations of [n] with k excedances (book indexing)."""
    if k < 0 or k > max(n - 1, 0):
        return 0 if n else (1 if k == 0 else 0)
    if n == 0:
        return 1 if k == 0 else 0
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


def eulerian_traditional(n: int, k: int) -> int:
    """Classical table indexing: row n >= 1 starts at k = 1."""
    if n == 0:
        return 1 if k == 0 else 0
    return eulerian(n, k - 1)


def binom(n, k) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# explicit formulas
# ---------------------------------------------------------------------------

def _prod(it, start=1):
    acc = start
    for f in it:
        acc = acc * f
    return acc


def master_poly_vy_formula(n: int) -> MPoly:
    """Stirling-subset expansion of the v=y specialization:
    sum_r {n r} (y-u)^(n-r) prod_{k=0}^{r-1}(w+ku)."""
    w, y, u, v = variables(MASTER_VARS)
    acc = MPoly.zero(MASTER_VARS)
    for r in range(n + 1):
        c = stirling_subset(n, r)
        if c == 0:
            continue
        acc = acc + c * (y - u) ** (n - r) * _prod(w + k * u for k in range(r))
    return acc


def cyc_exc_count_bruteforce(n: int) -> dict:
    """(cyc, exc) -> count over all permutations of [n]."""
    if n > BRUTE_FORCE_CAP:
        raise SizeLimit(n)
    out = {}
    for sigma in permutations(range(1, n + 1)):
        st = perm_stats(sigma)
        key = (st.cyc, st.exc)
        out[key] = out.get(key, 0) + 1
    return out


def cyc_exc_count_formula(n: int, i: int, l: int) -> int:
    """Alternating Stirling double sum for #{cyc = i, exc = l}."""
    acc = 0
    for r in range(i, n - l + 1):
        acc += (-1) ** (n - r - l) * stirling_subset(n, r) \
            * stirling_cycle(r, i) * binom(n - r, l)
    return acc


def explicit_formula_checks(n_max: int) -> dict:
    """The four summation identities at once; see the per-item keys."""
    if n_max > 8:
        raise SizeLimit(n_max)
    w, y, u, v = variables(MASTER_VARS)
    report = {}

    ok = True
    for n in range(n_max + 1):
        brute = master_poly_bruteforce(n).subs({"v": y})
        if not felem_eq(as_field(brute), master_poly_vy_formula(n)):
            ok = False
            break
    report["stirling_expansion_v=y"] = ok

    ok = True
    for n in range(n_max + 1):
        counts = cyc_exc_count_bruteforce(n)
        for i in range(n + 1):
            for l in range(n + 1):
                if counts.get((i, l), 0) != cyc_exc_count_formula(n, i, l):
                    ok = False
    report["cyc_exc_counts"] = ok

    ok = True
    for n in range(n_max + 1):
        lhs = MPoly.zero(MASTER_VARS)
        for k in range(n + 1):
            c = eulerian(n, k)
            if c:
                lhs = lhs + c * y ** k * w ** (n - k)
        rhs = MPoly.zero(MASTER_VARS)
        for r in range(n + 1):
            c = factorial(r) * stirling_subset(n, r)
            if c:
                rhs = rhs + c * (y - w) ** (n - r) * w ** r
        if not felem_eq(lhs, rhs):
            ok = False
    report["eulerian_ordered_bell"] = ok

    ok = True
    for n in range(n_max + 1):
        lhs = master_poly_vy_formula(n).subs({"u": 1})
        rhs = MPoly.zero(MASTER_VARS)
        for r in range(n + 1):
            c = stirling_subset(n, r)
            if c:
                rhs = rhs + c * (y - 1) ** (n - r) * _prod(w + k for k in range(r))
        if not felem_eq(as_field(lhs), rhs):
            ok = False
    report["u1_specialization"] = ok

    report["ok"] = all(report.values())
    return report


# ---------------------------------------------------------------------------
# Stirling subset transform
# ---------------------------------------------------------------------------

def x_stirling_transform(a, x) -> list:
    """b_n = sum_k {n k} a_k x^(n-k)."""
    out = []
    for n in range(len(a)):
        acc = 0
        for k in range(n + 1):
            c = stirling_subset(n, k)
            if c == 0:
                continue
            term = c * a[k]
            if n - k:
                term = term * x ** (n - k)
            acc = acc + term
        out.append(acc)
    return out


def x_stirling_egf_check(order: int) -> bool:
    """egf law B(t) = A((e^{xt}-1)/x) with symbolic a_0..a_order and x."""
    names = ["a%d" % i for i in range(order + 1)]
    syms = variables(names, extra=("x",))
    x = MPoly.variable("x", syms[0].vars)
    b = x_stirling_transform(list(syms), x)
    B = TruncSeries(order, [bi * Fraction(1, factorial(n)) for n, bi in enumerate(b)])
    A = TruncSeries(order, [ai * Fraction(1, factorial(n)) for n, ai in enumerate(syms)])
    # (e^{xt}-1)/x = sum_{m>=1} x^(m-1) t^m / m!
    inner = TruncSeries(order, [0] + [x ** (m - 1) * Fraction(1, factorial(m))
                                      for m in range(1, order + 1)])
    return A.compose(inner) == B


def master_egf(w, u, y, order: int) -> TruncSeries:
    """((y-u)/(y-u e^{(y-u)t}))^(w/u) at numeric weights (w/u rational)."""
    w, u, y = Fraction(w), Fraction(u), Fraction(y)
    if u == 0 or y == u:
        raise ValueError("need u != 0 and y != u at numeric weights")
    c = y - u
    num = TruncSeries(order, [y] + [0] * order) - exp_series(c, order).scale(u)
    base = num.scale(1 / c)  # (y - u e^{ct})/(y - u), constant term 1
    return generalized_binomial_series(base, -w / u)


def stirling_cycle_egf(w, y, order: int) -> TruncSeries:
    """(1 - y t)^(-w/y) = exp(sum_{n>=1} w y^(n-1) t^n / n), polynomial in
    both weights."""
    coeffs = [0]
    for n in range(1, order + 1):
        coeffs.append(w * y ** (n - 1) * Fraction(1, n) if n > 1
                      else w * Fraction(1, n))
    return TruncSeries(order, coeffs).exp()
