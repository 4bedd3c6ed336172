"""Macaulay's growth bound by hand: binomial expansions, pseudopowers, and
what they say about h-vectors of spheres.

Run:  python3 demos/macaulay_bounds.py
"""

from lefschetz import (
    boundary_simplex,
    check_g_conditions,
    cross_polytope_boundary,
    h_vector,
    is_m_sequence,
    macaulay_expansion,
    pseudopower,
)

for a, i in [(5, 2), (10, 3), (4, 2), (3, 1)]:
    terms = macaulay_expansion(a, i)
    pretty = " + ".join("C(%d,%d)" % t for t in terms)
    print("%2d = %s   ->  %d^<%d> = %d" % (a, pretty, a, i, pseudopower(a, i)))

print()
for k in [(1, 2, 3, 4), (1, 0, 1), (1, 4, 10, -1), (1, 3, 6, 10)]:
    r = is_m_sequence(k)
    where = "" if r.ok else " (fails at index %d)" % r.first_failure
    print("%s  M-sequence: %s%s" % (k, r.ok, where))

print()
for c in (boundary_simplex(4), cross_polytope_boundary(3)):
    h = h_vector(c)
    rep = check_g_conditions(h)
    print("h =", tuple(h), "-> symmetric", rep.symmetric,
          "| unimodal", rep.unimodal, "| g is M", rep.g_is_m)
