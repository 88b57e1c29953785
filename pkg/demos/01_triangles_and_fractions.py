"""From a triangular recurrence to its continued fraction, exactly.

Walks the classical examples: Stirling subset numbers and their Bell
polynomials, the factorials, and a fully symbolic parameter tuple.
"""
from gkpfrac import (
    GKPParams, extract_jfrac, extract_sfrac, gkp_triangle, ogf_trunc,
    residual_checks, row_polys,
)

print("=" * 72)
print("Stirling subset numbers: mu = (0, 1, 0, 0, 0, 1)")
print("=" * 72)
t = gkp_triangle((0, 1, 0, 0, 0, 1), 6)
for n, row in enumerate(t.rows):
    print("  row %d: %s" % (n, row))

ps = row_polys(t)
print("\nBell polynomials (row-generating polynomials):")
for n in (2, 3, 4):
    print("  P_%d = %s" % (n, ps[n]))

cf = extract_sfrac(ogf_trunc(t), 6)
print("\nS-fraction of the ogf (alternating x and counters):")
print("  c =", list(cf.c))

print("\n" + "=" * 72)
print("Factorials: mu = (1, 0, 0, 0, 0, 0)")
print("=" * 72)
t = gkp_triangle((1, 0, 0, 0, 0, 0), 6)
print("  column:", [t.entry(n, 0) for n in range(7)])
cf = extract_sfrac(ogf_trunc(t), 6)
print("  S-fraction c =", list(cf.c), " (pairs 1,1,2,2,3,3 ...)")
cf = extract_jfrac(ogf_trunc(t), 3)
print("  J-fraction e =", list(cf.e), " f =", list(cf.f))

print("\n" + "=" * 72)
print("Fully symbolic parameters")
print("=" * 72)
mu = GKPParams.symbolic()
t = gkp_triangle(mu, 3)
print("  T(1,0) =", t.entry(1, 0))
print("  T(1,1) =", t.entry(1, 1))
print("  T(2,1) =", t.entry(2, 1))

odes, pde = residual_checks(mu, 5)
print("\nResiduals of the differential recurrence and the PDE (order 5):")
print("  all zero:", all(not r for r in odes) and pde.is_zero())
