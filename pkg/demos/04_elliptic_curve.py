# L_E's ideal counts involve |E(F_p)| for y^2 = x^3 - x, so the t^5 and t^6
# coefficients are not polynomial in p.
from fpzeta import catalog, class2_ideal_zeta, elliptic_point_count, fit_coefficient, primes_in_range

L = catalog("L_E")
primes = primes_in_range(3, 61)
rows = []
for p in primes:
    z = class2_ideal_zeta(L, p)
    e = elliptic_point_count(p)
    rows.append((p, z[5]))
    print(f"p={p:2d}  |E|={e:3d}  a_p={p + 1 - e:4d}  t^5 coefficient {z[5]}")

fit = fit_coefficient(rows, 6)
print("\nverdict with degree bound 6:", fit.verdict)
