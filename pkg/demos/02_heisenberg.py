# Ideals and subalgebras of the Heisenberg ring [x1,x2]=x3, counted by brute
# force over echelon matrices, for a handful of primes.
from fpzeta import catalog, count

H = catalog("heisenberg")
print("dim", H.dim, "grading", H.grading)

for p in (2, 3, 5, 7, 11, 13):
    ideal = count(H, p, "ideal")
    sub = count(H, p, "sub")
    print(f"p={p:2d}  ideals {ideal.poly.text():30s} subalgebras {sub.poly.text()}")

# the t coefficient is 1+p in both cases, t^2 separates them
