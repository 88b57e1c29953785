"""The 48-element symmetry group of the recurrence, and what it does.

Shows the generator actions on a concrete parameter tuple, the class
structure of the group, and an exact verification that duality really
reverses the rows of the Stirling triangle.
"""
from gkpfrac import (
    GKPParams, apply_map, gkp_triangle, group_table, parse_word,
    verify_action, verify_relations,
)
from gkpfrac.symmetry import D, IDENT, S, X, Z

print("=" * 72)
print("Generators acting on the Eulerian parameters (0,1,1,1,-1,0)")
print("=" * 72)
mu = (0, 1, 1, 1, -1, 0)
for name in ("S", "D", "Z", "X"):
    moved = apply_map(parse_word(name), mu)
    print("  %s . mu = %s" % (name, tuple(moved)))

print("\nDuality reverses rows (Stirling subset numbers):")
mu = (0, 1, 0, 0, 0, 1)
t = gkp_triangle(mu, 5)
td = gkp_triangle(apply_map(D, mu), 5)
print("  original row 4:", t.rows[4])
print("  dual     row 4:", td.rows[4])

print("\n" + "=" * 72)
print("Group structure")
print("=" * 72)
elems, mult, classes, center = group_table()
print("  order:", len(elems))
print("  center:", [e.name() for e in center])
print("  conjugacy classes (element order, size):")
for c in classes:
    print("    order %2d  size %d  e.g. %s"
          % (c["order"], c["size"], c["elements"][0].name()))

rep = verify_relations()
print("\n  all defining relations hold (abstractly and as maps):", rep["ok"])

print("\n" + "=" * 72)
print("Exact action checks on fully symbolic parameters, n <= 5")
print("=" * 72)
sym = GKPParams.symbolic()
for name in ("D", "Z", "X"):
    r = verify_action(name, sym, 5)
    print("  %s: %s" % (name, "ok" if r["ok"] else r))
