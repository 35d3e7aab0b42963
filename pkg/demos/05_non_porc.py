# L_np8's t^3 coefficient depends on whether x^3 = 2 has roots mod p.  Per
# residue class mod 3, class 1 stays non-polynomial while class 2 fits.
from fpzeta import catalog, class2_ideal_zeta, cubic_root_count, fit_coefficient, primes_in_range

L = catalog("L_np8")
samples = []
for p in primes_in_range(5, 97):
    z = class2_ideal_zeta(L, p)
    samples.append((p, z[3]))
    print(f"p={p:2d}  p mod 3 = {p % 3}  roots of x^3-2: {cubic_root_count(p)}  t^3 coefficient {z[3]}")

for degree in (5, 6):
    fit = fit_coefficient(samples, degree, modulus=3)
    print(f"\ndegree bound {degree}: {fit.verdict}")
    for r, poly in sorted(fit.fits.items()):
        print(f"  p = {r} mod 3:", "no polynomial fit" if poly is None else [str(c) for c in poly])
