"""Even cohomology of smooth toric surfaces read off their fans, and how
stellar refinement (a blow-up) changes the middle dimension.

Run:  python3 demos/toric_fans.py
"""

from lefschetz import (
    format_fan,
    product_of_lines_fan,
    projective_plane_fan,
    stellar_refine,
    toric_betti,
    toric_m_check,
    toric_wle,
)

for name, fan in [("projective plane", projective_plane_fan()),
                  ("product of two lines", product_of_lines_fan())]:
    b = toric_betti(fan)
    rep = toric_m_check(fan)
    print("%s: dims %s, differences %s, M-sequence %s"
          % (name, tuple(b), tuple(rep.differences), rep.ok))

# each blow-up adds one to the middle cohomology
fan = projective_plane_fan()
for k in range(3):
    fan = stellar_refine(fan, fan.cones[0])
    print("after %d blow-up(s): dims %s" % (k + 1, tuple(toric_betti(fan))))

print("\nrefined fan in the text format:")
print(format_fan(fan))

cert = toric_wle(projective_plane_fan(), 0)
print("WLE for the pinned ray system on the plane: omega =",
      tuple(str(x) for x in cert.omega))
