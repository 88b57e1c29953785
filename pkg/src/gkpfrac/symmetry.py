"""The 48-element symmetry group of the two-term triangular recurrence.

Elements are stored in the normal form S^s Z^z X^m (s, z in {0,1}, m mod 12)
derived from the defining relations

    X^12 = S^2 = Z^2 = 1,   SZ = ZS,   SXS = X^7,   ZXZ = X^-1,

and act on parameter tuples mu = (alpha, beta, gamma, alpha', beta', gamma')
through the generator actions: sign flip of the unprimed triple (S), the
shift involution (Z) and X = D*Z built from the row-reversal duality D.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from .exactalg import (
    MPoly, RatFunc, as_field, felem_eq, felem_inv, felem_is_zero, variables,
)
from .gkpcore import GKPParams, gkp_triangle, row_polys


class SingularMap(ZeroDivisionError):
    """A generator needed to invert a parameter that is identically zero."""

    def __init__(self, generator, detail=""):
        super().__init__("map %s is singular here %s" % (generator, detail))
        self.generator = generator


class CaseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GroupWord:
    """Normal form S^s Z^z X^m with s, z in {0,1} and 0 <= m < 12."""
    s: int = 0
    z: int = 0
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "s", self.s & 1)
        object.__setattr__(self, "z", self.z & 1)
        object.__setattr__(self, "m", self.m % 12)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        # X^m * S^a Z^b = S^a Z^b X^(sigma m) with sigma = 7^a * (-1)^b
        sigma = (7 ** other.s) * (-1) ** other.z
        return GroupWord(self.s ^ other.s, self.z ^ other.z,
                         sigma * self.m + other.m)

    def inv(self) -> "GroupWord":
        # solve g * h = 1
        sigma = (7 ** self.s) * (-1) ** self.z
        return GroupWord(self.s, self.z, -sigma * self.m)

    def order(self) -> int:
        e = self
        n = 1
        while e != IDENT:
            e = e * self
            n += 1
        return n

    def __pow__(self, n: int) -> "GroupWord":
        if n < 0:
            return self.inv() ** (-n)
        out = IDENT
        for _ in range(n):
            out = out * self
        return out

    def letters(self):
        """Generator letters, leftmost acting last on parameters.

        Elements of the polynomial subgroup decompose over the total maps
        {S, D}; the coset that only inverts beta goes through R; high powers
        of X are rewritten through Z X^(12-m) Z = X^m so that a word never
        composes more than six X actions."""
        key = (self.s, self.z, self.m)
        if key in _G0_WORDS:
            return list(_G0_WORDS[key])
        g = self * GroupWord(0, 0, 7)          # self * X^-5
        gkey = (g.s, g.z, g.m)
        if gkey in _G0_WORDS:
            return list(_G0_WORDS[gkey]) + ["S", "D", "S", "R"]
        pre = ["S"] * self.s
        m = self.m
        if m <= 6:
            return pre + ["Z"] * self.z + ["X"] * m
        if self.z:
            return pre + ["X"] * (12 - m) + ["Z"]
        return pre + ["Z"] + ["X"] * (12 - m) + ["Z"]

    def name(self) -> str:
        bits = []
        if self.s:
            bits.append("S")
        if self.z:
            bits.append("Z")
        if self.m:
            bits.append("X^%d" % self.m if self.m > 1 else "X")
        return "*".join(bits) if bits else "1"

    def __repr__(self):
        return self.name()


# normal forms of the polynomial subgroup, with words over the total maps
_G0_WORDS = {
    (0, 0, 0): [], (1, 0, 0): ["S"], (0, 1, 11): ["D"],
    (1, 1, 11): ["S", "D"], (1, 0, 6): ["D", "S", "D"],
    (0, 0, 6): ["S", "D", "S", "D"], (1, 1, 5): ["D", "S"],
    (0, 1, 5): ["S", "D", "S"],
}

IDENT = GroupWord(0, 0, 0)
S = GroupWord(1, 0, 0)
Z = GroupWord(0, 1, 0)
X = GroupWord(0, 0, 1)
D = X * Z                     # row reversal; equals Z X^11 in normal form
SPRIME = S * X ** 6           # the (1,-1) scaling, also D*S*D
R = D * Z * D                 # inverse-pair involution

NAMED = {"1": IDENT, "S": S, "Z": Z, "X": X, "D": D, "R": R, "S'": SPRIME}


def parse_word(text: str) -> GroupWord:
    """Parse products like "S*Z*X^3" (left factor acts last)."""
    out = IDENT
    for tok in text.replace(" ", "").split("*"):
        if not tok:
            continue
        if "^" in tok:
            base, _, exp = tok.partition("^")
            out = out * (NAMED[base] ** int(exp))
        else:
            out = out * NAMED[tok]
    return out


@dataclass(frozen=True)
class ScalingMap:
    kappa: object
    lam: object


def all_elements():
    return [GroupWord(s, z, m) for s in (0, 1) for z in (0, 1) for m in range(12)]


# ---------------------------------------------------------------------------
# parameter actions
# ---------------------------------------------------------------------------

def _act_S(mu):
    a, b, g, ap, bp, gp = mu
    return (-a, -b, -g, ap, bp, gp)


def _act_D(mu):
    a, b, g, ap, bp, gp = mu
    return (ap + bp, -bp, gp, a + b, -b, g)


def _act_Z(mu):
    a, b, g, ap, bp, gp = mu
    if felem_is_zero(as_field(bp)):
        raise SingularMap("Z", "(beta' = 0)")
    r = b * felem_inv(bp)
    return (a - r * ap, -b, -b + g - r * gp, ap, bp, gp)


def _act_X(mu):
    return _act_D(_act_Z(mu))


def _act_R(mu):
    a, b, g, ap, bp, gp = mu
    if felem_is_zero(as_field(b)):
        raise SingularMap("R", "(beta = 0)")
    r = bp * felem_inv(b)
    return (a, b, g, ap + bp - r * a, -bp, gp + bp - r * g)


_GEN_ACTS = {"S": _act_S, "Z": _act_Z, "X": _act_X, "D": _act_D, "R": _act_R}


def apply_map(g, mu) -> GKPParams:
    """Transformed parameter tuple (entries possibly rational functions)."""
    if isinstance(g, ScalingMap):
        a, b, gam, ap, bp, gp = GKPParams.of(mu)
        k, l = g.kappa, g.lam
        return GKPParams(k * a, k * b, k * gam, l * ap, l * bp, l * gp)
    if isinstance(g, str):
        g = parse_word(g)
    out = tuple(GKPParams.of(mu))
    for letter in reversed(g.letters()):
        out = _GEN_ACTS[letter](out)
    return GKPParams(*out)


def map_equal(mu1, mu2) -> bool:
    return all(felem_eq(as_field(u), as_field(v))
               for u, v in zip(GKPParams.of(mu1), GKPParams.of(mu2)))


# ---------------------------------------------------------------------------
# group table, classes, relations
# ---------------------------------------------------------------------------

def group_table():
    """Elements, multiplication map, conjugacy classes and center."""
    elems = all_elements()
    mult = {(a, b): a * b for a in elems for b in elems}
    remaining = set(elems)
    classes = []
    while remaining:
        rep = min(remaining, key=lambda e: (e.s, e.z, e.m))
        cls = {h * rep * h.inv() for h in elems}
        remaining -= cls
        classes.append({
            "order": rep.order(),
            "size": len(cls),
            "elements": sorted(cls, key=lambda e: (e.s, e.z, e.m)),
        })
    classes.sort(key=lambda c: (c["order"], c["size"],
                                (c["elements"][0].s, c["elements"][0].z, c["elements"][0].m)))
    center = [e for e in elems if all(e * h == h * e for h in elems)]
    center.sort(key=lambda e: e.m)
    return elems, mult, classes, center


EXPECTED_CLASS_PROFILE = sorted([
    (1, 1), (2, 1), (2, 2), (2, 2), (2, 3), (2, 3), (2, 6), (2, 6),
    (3, 2), (4, 2), (4, 6), (6, 2), (6, 4), (6, 4), (12, 4),
])


def expected_classes():
    """The full membership table of the fifteen conjugacy classes."""
    def c(*words):
        return frozenset(words)

    SZ = S * Z
    return [
        c(IDENT),
        c(X ** 6),
        c(S, S * X ** 6),
        c(S * X ** 3, S * X ** 9),
        c(SZ, SZ * X ** 4, SZ * X ** 8),
        c(SZ * X ** 2, SZ * X ** 6, SZ * X ** 10),
        c(*(Z * X ** m for m in range(0, 12, 2))),
        c(*(Z * X ** m for m in range(1, 12, 2))),
        c(X ** 4, X ** 8),
        c(X ** 3, X ** 9),
        c(*(SZ * X ** m for m in range(1, 12, 2))),
        c(X ** 2, X ** 10),
        c(S * X, S * X ** 5, S * X ** 7, S * X ** 11),
        c(S * X ** 2, S * X ** 4, S * X ** 8, S * X ** 10),
        c(X, X ** 5, X ** 7, X ** 11),
    ]


def symbolic_mu() -> GKPParams:
    return GKPParams.symbolic(extra=("x",))


def verify_relations() -> dict:
    """All stated relations, both abstractly and as parameter maps over the
    rational-function field in mu."""
    mu = symbolic_mu()
    report = {"abstract": {}, "maps": {}, "presentation": {}}

    abstract = {
        "S^2": S * S == IDENT,
        "Z^2": Z * Z == IDENT,
        "D^2": D * D == IDENT,
        "X^12": X ** 12 == IDENT,
        "SZ=ZS": S * Z == Z * S,
        "S'Z=ZS'": SPRIME * Z == Z * SPRIME,
        "SS'=S'S": S * SPRIME == SPRIME * S,
        "(DS)^2=SS'": (D * S) ** 2 == S * SPRIME,
        "(SD)^2=SS'": (S * D) ** 2 == S * SPRIME,
        "(DZ)^6=SS'": (D * Z) ** 6 == S * SPRIME,
        "(ZD)^6=SS'": (Z * D) ** 6 == S * SPRIME,
        "SXS=X^7": S * X * S == X ** 7,
        "ZXZ=X^11": Z * X * Z == X ** 11,
        "X=DZ": X == D * Z,
        "S'=DSD": SPRIME == D * S * D,
        "R=DZD": R == D * Z * D,
    }
    report["abstract"] = abstract

    def same(w1: GroupWord, w2: GroupWord) -> bool:
        return map_equal(apply_map(w1, mu), apply_map(w2, mu))

    maps = {
        "S^2": same(S * S, IDENT),
        "Z^2": same(Z * Z, IDENT),
        "D^2": same(D * D, IDENT),
        "SZ=ZS": same(S * Z, Z * S),
        "S'Z=ZS'": same(SPRIME * Z, Z * SPRIME),
        "SS'=S'S": same(S * SPRIME, SPRIME * S),
        "(DS)^2=SS'": same((D * S) ** 2, S * SPRIME),
        "(SD)^2=SS'": same((S * D) ** 2, S * SPRIME),
        "(DZ)^6=SS'": same((D * Z) ** 6, S * SPRIME),
        "(ZD)^6=SS'": same((Z * D) ** 6, S * SPRIME),
        "SXS=X^7": same(S * X * S, X ** 7),
        "ZXZ=X^11": same(Z * X * Z, X ** 11),
        "X^12=1": same(X ** 12, IDENT),
        "R^2=1": same(R * R, IDENT),
        "S'=S_{1,-1}": map_equal(apply_map(SPRIME, mu),
                                 apply_map(ScalingMap(1, -1), mu)),
        "X action (2.20)": _check_x_formula(mu),
    }
    report["maps"] = maps

    # direct-product presentation: a = X^4, b = SZ, c = X^3, d = S
    a, b, c, d = X ** 4, S * Z, X ** 3, S
    pres_pairs = {
        "a^3": (a ** 3, IDENT),
        "b^2": (b * b, IDENT),
        "c^4": (c ** 4, IDENT),
        "d^2": (d * d, IDENT),
        "bab=a^-1": (b * a * b, a.inv()),
        "dcd=c^-1": (d * c * d, c.inv()),
        "ac=ca": (a * c, c * a),
        "ad=da": (a * d, d * a),
        "bc=cb": (b * c, c * b),
        "bd=db": (b * d, d * b),
    }
    pres = {k: (u == w) for k, (u, w) in pres_pairs.items()}
    pres["<a,b,c,d> = G"] = _generates_all([a, b, c, d])
    report["presentation"] = pres
    report["presentation_maps"] = {k: same(u, w)
                                   for k, (u, w) in pres_pairs.items()}
    report["ok"] = all(abstract.values()) and all(maps.values()) \
        and all(pres.values()) and all(report["presentation_maps"].values())
    return report


def _check_x_formula(mu) -> bool:
    a, b, g, ap, bp, gp = tuple(mu)
    r = b * felem_inv(bp)
    want = (ap + bp, -bp, gp, a - b - r * ap, b, g - b - r * gp)
    return map_equal(apply_map(X, mu), want)


def _generates_all(gens) -> bool:
    seen = {IDENT}
    frontier = [IDENT]
    gens = list(gens) + [g.inv() for g in gens]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = e * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen) == 48


# ---------------------------------------------------------------------------
# action on triangles and row polynomials
# ---------------------------------------------------------------------------

def _xfree_den(p: RatFunc) -> MPoly:
    if "x" in p.den.vars and p.den.degree_in("x"):
        raise ValueError("denominator must be x-free")
    return p.den


def _poly_mobius(p, n, u, v, w):
    """(1/w^n) * sum_k C_k u^k v^(n-k) for p = sum_k C_k x^k.

    This is the Moebius action P -> (cx+d)^n P((ax+b)/(cx+d)) with the
    x-free denominator w cleared out of (a, b, c, d); all the heavy work is
    polynomial, with a single rational division at the end."""
    if isinstance(p, RatFunc):
        den = _xfree_den(p)
        pnum = p.num
    else:
        den = None
        pnum = p
    coeffs = {0: pnum} if isinstance(pnum, (int, Fraction)) else pnum.coeffs_in("x")
    upow = [1]
    vpow = [1]

    def power(cache, base, k):
        while len(cache) <= k:
            cache.append(cache[-1] * base)
        return cache[k]

    acc = 0
    for k, C in coeffs.items():
        acc = C * power(upow, u, k) * power(vpow, v, n - k) + acc
    if den is not None:
        acc = acc * RatFunc(MPoly.one(den.vars), den)
    if n and not (isinstance(w, int) and w == 1):
        acc = acc * RatFunc(MPoly.one(w.vars), w ** n)
    return acc


def _transform_letter(letter, mu, polys):
    """Row polynomials of (letter . mu) from those of mu, per the cited
    identities; mu is the parameter tuple the letter acts on."""
    a, b, g, ap, bp, gp = (as_field(v) for v in tuple(mu))
    vars = None
    for p in polys:
        if isinstance(p, (MPoly, RatFunc)):
            vars = p.vars
            break
    vars = vars if vars and "x" in vars else (vars or ()) + ("x",)
    x = MPoly.variable("x", vars)
    one = MPoly.one(vars)

    def cleared(val):
        """field element -> (numerator MPoly, x-free denominator MPoly)"""
        val = as_field(val)
        if isinstance(val, RatFunc):
            return val.num.in_vars(vars), _xfree_den(val).in_vars(vars)
        if isinstance(val, (int, Fraction)):
            return MPoly.constant(val, vars), one
        return val.in_vars(vars), one

    if letter == "S":
        u, v, w = x, -one, one
    elif letter == "D":
        u, v, w = one, x, one
    elif letter in ("Z", "X"):
        if felem_is_zero(bp):
            raise SingularMap(letter)
        bn, bd = cleared(b)
        pn, pd = cleared(bp)
        if letter == "Z":
            # x - b/b' : u = (b' x - b)~, v = w
            u = pn * bd * x - bn * pd
            v = w = pn * bd
        else:
            # 1/x - b/b' : u = (b' - b x)~, v = b' x, w = b'
            u = pn * bd - bn * pd * x
            v = pn * bd * x
            w = pn * bd
    elif letter == "R":
        if felem_is_zero(b):
            raise SingularMap(letter)
        bn, bd = cleared(b)
        pn, pd = cleared(bp)
        # b x / (b - b' x), prefactor ((b - b' x)/b)^n
        u = bn * pd * x
        v = bn * pd - pn * bd * x
        w = bn * pd
    else:
        raise ValueError(letter)
    return [_poly_mobius(p, n, u, v, w) for n, p in enumerate(polys)]


def transformed_polys(word, mu, polys):
    """Fold a word's letters over row polynomials of mu."""
    letters = word.letters() if isinstance(word, GroupWord) else list(word)
    if not letters:
        return list(polys)
    head, rest = letters[0], letters[1:]
    inner_mu = apply_map_letters(rest, mu)
    inner = transformed_polys(rest, mu, polys)
    return _transform_letter(head, tuple(inner_mu), inner)


def apply_map_letters(letters, mu):
    out = tuple(GKPParams.of(mu))
    for letter in reversed(list(letters)):
        out = _GEN_ACTS[letter](out)
    return GKPParams(*out)


def verify_action(g, mu, N: int) -> dict:
    """Check the identity linking the triangle of g.mu with the transformed
    triangle of mu, symbolically for all n <= N."""
    if isinstance(g, ScalingMap):
        t = gkp_triangle(mu, N)
        t2 = gkp_triangle(apply_map(g, mu), N)
        k, l = g.kappa, g.lam
        for n in range(N + 1):
            for kk in range(n + 1):
                want = k ** (n - kk) * l ** kk * t.entry(n, kk)
                if not felem_eq(as_field(t2.entry(n, kk)), as_field(want)):
                    return {"map": "S_{kappa,lambda}", "ok": False,
                            "first_mismatch": {"n": n, "k": kk}}
        return {"map": "S_{kappa,lambda}", "ok": True, "first_mismatch": None}

    word = parse_word(g) if isinstance(g, str) else g
    if isinstance(word, GroupWord):
        letters = word.letters()
        name = word.name()
    else:
        letters = list(word)
        name = "*".join(letters)
    lhs = row_polys(gkp_triangle(apply_map_letters(letters, mu), N))
    rhs = transformed_polys(letters, mu, row_polys(gkp_triangle(mu, N)))
    for n, (p, q) in enumerate(zip(lhs, rhs)):
        if not felem_eq(as_field(p), as_field(q)):
            return {"map": name, "ok": False, "first_mismatch": {"n": n}}
    return {"map": name, "ok": True, "first_mismatch": None}


def verify_action_letter(letter: str, mu, N: int) -> dict:
    """Single-generator version, used for the cited identities directly."""
    return verify_action([letter], mu, N) if letter != "R" else _verify_R(mu, N)


def _verify_R(mu, N):
    lhs = row_polys(gkp_triangle(apply_map(R, mu), N))
    rhs = transformed_polys(["R"], mu, row_polys(gkp_triangle(mu, N)))
    for n, (p, q) in enumerate(zip(lhs, rhs)):
        if not felem_eq(as_field(p), as_field(q)):
            return {"map": "R", "ok": False, "first_mismatch": {"n": n}}
    return {"map": "R", "ok": True, "first_mismatch": None}


# ---------------------------------------------------------------------------
# rescaling (three GKP-compatible cases of the product lemma)
# ---------------------------------------------------------------------------

def rescale_gkp(case: str, mu, kappa, lam, N: int) -> dict:
    """Verify the three rescaling identities.

    case "a" (alpha = beta = 0):
        T(n,k; kg, -kg, lg, a', b', g') = prod_{j=1}^{n-k}(j kappa + lam) T(n,k; mu)
    case "b" (alpha' = beta' = 0):
        T(n,k; a, b, g, 0, kg', lg') = prod_{j=1}^{k}(j kappa + lam) T(n,k; mu)
    case "c" (all four vanish):
        T(n,k; kg, 0, lg, kg', 0, lg') = prod_{j=1}^{n}(j kappa + lam) T(n,k; mu)
    """
    a, b, g, ap, bp, gp = GKPParams.of(mu)
    z = lambda v: felem_is_zero(as_field(v))
    if case == "a":
        if not (z(a) and z(b)):
            raise CaseMismatch("case a needs alpha = beta = 0")
        mu2 = GKPParams(kappa * g, -kappa * g, lam * g, ap, bp, gp)
        weight = lambda n, k: _prod_lin(kappa, lam, n - k)
    elif case == "b":
        if not (z(ap) and z(bp)):
            raise CaseMismatch("case b needs alpha' = beta' = 0")
        mu2 = GKPParams(a, b, g, 0, kappa * gp, lam * gp)
        weight = lambda n, k: _prod_lin(kappa, lam, k)
    elif case == "c":
        if not (z(a) and z(b) and z(ap) and z(bp)):
            raise CaseMismatch("case c needs alpha = beta = alpha' = beta' = 0")
        mu2 = GKPParams(kappa * g, 0, lam * g, kappa * gp, 0, lam * gp)
        weight = lambda n, k: _prod_lin(kappa, lam, n)
    else:
        raise CaseMismatch("unknown case %r" % case)

    t = gkp_triangle(mu, N)
    t2 = gkp_triangle(mu2, N)
    for n in range(N + 1):
        for k in range(n + 1):
            want = weight(n, k) * t.entry(n, k)
            if not felem_eq(as_field(t2.entry(n, k)), as_field(want)):
                return {"case": case, "ok": False, "first_mismatch": {"n": n, "k": k}}
    return {"case": case, "ok": True, "first_mismatch": None}


def _prod_lin(kappa, lam, m):
    acc = 1
    for j in range(1, m + 1):
        acc = acc * (j * kappa + lam)
    return acc


# ---------------------------------------------------------------------------
# subgroup facts
# ---------------------------------------------------------------------------

def polynomial_subgroup():
    """G0 = {1, S, S', SS', D, SD, S'D, SS'D}."""
    return [IDENT, S, SPRIME, S * SPRIME, D, S * D, SPRIME * D, S * SPRIME * D]


def is_polynomial_action(word: GroupWord) -> bool:
    """True iff the word's action on a symbolic mu has denominator 1."""
    mu = symbolic_mu()
    out = apply_map(word, mu)
    for v in out:
        if isinstance(v, RatFunc) and not v.is_poly():
            return False
    return True
