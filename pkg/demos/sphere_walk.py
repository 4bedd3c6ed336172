"""A seeded bistellar walk on 3-spheres, with the g-vector ledger checked at
every step and a weak Lefschetz certificate carried along.

Run:  python3 demos/sphere_walk.py
"""

from lefschetz import (
    LinearSystem,
    apply_bistellar,
    boundary_simplex,
    check_wle,
    default_prime_field,
    f_vector,
    find_wle,
    g_vector,
    h_vector,
    pachner_g_delta,
    random_pachner_walk,
    wle_transfer,
)

FP = default_prime_field()

walk = random_pachner_walk(boundary_simplex(4), 12, 7,
                           policy="index-uniform", vertex_cap=10)
print("start:", tuple(f_vector(walk[0][0])))

prev = walk[0][0]
for idx, (cur, move) in enumerate(walk[1:], start=1):
    rep = pachner_g_delta(prev, cur, move)
    print("step %2d: %d-move   f=%s  g=%s" % (
        idx, move.index, tuple(f_vector(cur)), tuple(rep.g_after)))
    prev = cur

# a certificate found once transfers across a move instead of restarting
c = walk[0][0]
cert = find_wle(c, FP, 99)
print("\nWLE on the start sphere after", cert.tries, "tries")
move = walk[1][1]
after = apply_bistellar(c, move)
cert2 = wle_transfer(c, cert, move)
print("transferred via", cert2.method)
system = LinearSystem.from_rows(cert2.field(), cert2.theta, after.vertices)
print("independent re-check:", check_wle(after, system, cert2.omega).ok)
print("final h:", tuple(h_vector(walk[-1][0])),
      "g:", tuple(g_vector(h_vector(walk[-1][0]))))
