# Every subspace of F_p^n has exactly one echelon matrix.  Grouping matrices by
# their pivot pattern reproduces the Gaussian binomials.
from collections import Counter

from fpzeta import count_all_subspaces, gaussian_binomial, iter_echelon, iterate_patterns

n, p = 4, 3

by_codim = Counter()
for pattern in iterate_patterns(n):
    size = sum(1 for _ in iter_echelon(pattern, p))
    by_codim[pattern.codim] += size
    print(f"pattern {pattern}  codim {pattern.codim}  free entries {pattern.num_free}  matrices {size}")

print()
for k in range(n + 1):
    print(f"codim {k}: {by_codim[k]} subspaces, binomial({n},{k})_{p} = {gaussian_binomial(n, k, p)}")
print("total", sum(by_codim.values()), "=", count_all_subspaces(n, p))
