"""Independent scalar oracles cross-validating the symbolic pipeline.

Everything here avoids the polynomial engine on purpose: triangles are
rebuilt as weighted lattice-path sums, and continued-fraction coefficients
are extracted with plain Fraction arithmetic after substituting random
rational values for every indeterminate (including x).
"""
import random
from fractions import Fraction

from gkpfrac.exactalg import MPoly, RatFunc, as_field
from gkpfrac.gkpcore import GKPParams, gkp_triangle
from gkpfrac.families import SFRAC_FAMILY_IDS, family_params, get_family
from gkpfrac.search import BASE, HINT_BOOK, get_node, node_cs


def scalar_sfrac(seq, m):
    """Textbook extraction over plain rationals: c_k = [t^1](1 - 1/f),
    f <- (1 - 1/f)/(c_k t)."""
    f = [Fraction(v) for v in seq]
    assert f[0] == 1
    cs = []
    for _ in range(m):
        # g = 1 - 1/f
        inv = [Fraction(1)]
        for n in range(1, len(f)):
            inv.append(-sum(f[j] * inv[n - j] for j in range(1, n + 1)))
        g = [-v for v in inv]
        g[0] += 1
        if g[1] == 0:
            return cs, True
        cs.append(g[1])
        f = [v / g[1] for v in g[1:]]
    return cs, False


def path_triangle_entry(mu, n, k):
    """T(n,k) as a sum over lattice paths from (0,0) to (n,k): a step
    (i-1,j) -> (i,j) carries weight alpha*i + beta*j + gamma, a step
    (i-1,j-1) -> (i,j) carries alpha'*i + beta'*j + gamma'."""
    a, b, g, ap, bp, gp = (Fraction(v) for v in mu)
    total = Fraction(0)
    for bits in range(1 << n):
        path = [(bits >> i) & 1 for i in range(n)]
        if sum(path) != k:
            continue
        w = Fraction(1)
        h = 0
        for i, step in enumerate(path, start=1):
            h += step
            w *= (ap * i + bp * h + gp) if step else (a * i + b * h + g)
        total += w
    return total


def test_triangle_against_path_sums():
    rng = random.Random(17)
    for _ in range(5):
        mu = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                   for _ in range(6))
        t = gkp_triangle(mu, 6)
        for n in range(7):
            for k in range(n + 1):
                assert t.entry(n, k) == path_triangle_entry(mu, n, k), (mu, n, k)


def _eval_felem(value, point):
    value = as_field(value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    def ev(p):
        # variables absent from the point never occur with a nonzero
        # exponent in a node's substitution values
        full = {v: point.get(v, Fraction(0)) for v in p.vars}
        return p.eval_scalar(full)

    if isinstance(value, RatFunc):
        return ev(value.num) / ev(value.den)
    return ev(value)


def _scalar_rowpoly_seq(mu_vals, x0, N):
    t = gkp_triangle(mu_vals, N)
    out = []
    for n in range(N + 1):
        out.append(sum(Fraction(t.entry(n, k)) * x0 ** k
                       for k in range(n + 1)))
    return out


def test_family_coefficients_against_scalar_extraction():
    rng = random.Random(23)
    for fid in SFRAC_FAMILY_IDS:
        spec = get_family(fid)
        for _ in range(2):
            params = {p: Fraction(rng.randint(1, 5), rng.randint(1, 3))
                      for p in spec.params}
            x0 = Fraction(rng.randint(1, 4), rng.randint(1, 3))
            mu = tuple(Fraction(v) for v in family_params(fid, params))
            seq = _scalar_rowpoly_seq(mu, x0, 8)
            cs, terminated = scalar_sfrac(seq, 8)
            if terminated:
                continue
            from gkpfrac.families import predicted_cfrac
            want = predicted_cfrac(fid, params, 8)
            point = dict(params)
            point["x"] = x0
            for got, pred in zip(cs, want.c):
                assert got == _eval_felem(pred, point), (fid, params)


def test_search_nodes_against_scalar_extraction():
    """Every documented node: the symbolic coefficients, evaluated at a
    random rational point of the node's manifold, agree with the scalar
    extraction from the numerically generated sequence."""
    rng = random.Random(31)
    for label in sorted(HINT_BOOK):
        node = get_node(",".join(label))
        depth = min(node.depth + 1, 6)
        cs, terminated = node_cs(node, depth)
        for attempt in range(40):
            point = {p: Fraction(rng.randint(-5, 5), rng.randint(1, 2))
                     for p in node.free}
            point["x"] = Fraction(rng.randint(1, 5), rng.randint(1, 2))
            if any(_eval_felem(a, point) == 0 for a in node.atoms):
                continue
            mu_vals = tuple(_eval_felem(node.subs[p], point) for p in BASE)
            seq = _scalar_rowpoly_seq(mu_vals, point["x"], depth)
            got, term2 = scalar_sfrac(seq, depth)
            if term2 or len(got) < len(cs):
                continue
            for sym, val in zip(cs, got):
                assert _eval_felem(sym, point) == val, (label, point)
            break
        else:
            raise AssertionError("no usable sample for %s" % (label,))
