# For class-2 rings the ideal count only needs subspaces of the derived ring.
# Compare the shortcut with plain enumeration and look at f_{2,4}, where
# brute force is already expensive.
import time

from fpzeta import catalog, class2_ideal_zeta, closed_form, count_zeta

for name, params in (("f", {"c": 2, "d": 3}), ("grenham", {"n": 3}), ("g64", {})):
    ring = catalog(name, **params)
    for p in (2, 3):
        fast = class2_ideal_zeta(ring, p)
        slow = count_zeta(ring, p, "ideal", method="brute")
        print(f"{name}{params} p={p}: {list(fast)}  agrees with brute force: {fast == slow}")

f24 = catalog("f", c=2, d=4)
for p in (2, 3, 5):
    t0 = time.perf_counter()
    z = class2_ideal_zeta(f24, p)
    dt = time.perf_counter() - t0
    print(f"\nf_(2,4) p={p} in {dt:.2f}s")
    print("  enumeration   ", list(z))
    print("  staircase rule", list(closed_form("f2d_ideal", p, d=4)))
# the two disagree from t^3 to t^6: a hyperplane of the derived ring can be
# the kernel of a nondegenerate alternating form, which the staircase misses
