"""Reference implementations that share no code with the package's enumeration.

Subspaces are grown as explicit vector sets by repeatedly adjoining vectors,
so nothing here depends on echelon forms or pivot patterns.
"""

import itertools


def _span_add(space, v, p):
    out = set(space)
    for w in space:
        for a in range(1, p):
            out.add(tuple((x + a * y) % p for x, y in zip(w, v)))
    return frozenset(out)


def all_subspaces(n, p):
    zero = (0,) * n
    vectors = list(itertools.product(range(p), repeat=n))
    seen = {frozenset([zero])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for v in vectors:
                if v not in s:
                    t = _span_add(s, v, p)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return seen


def _log(size, p):
    k = 0
    while size > 1:
        size //= p
        k += 1
    return k


def bracket(structure, u, v, p):
    """``structure[(i, j)]`` maps to a dict ``k -> coefficient`` for i < j."""
    n = len(u)
    out = [0] * n
    for (i, j), terms in structure.items():
        c = u[i] * v[j] - u[j] * v[i]
        if c:
            for k, a in terms.items():
                out[k] += c * a
    return tuple(x % p for x in out)


def naive_zeta(structure, n, p, flavor, blocks=None):
    """Coefficients by codimension, testing closure on every pair of vectors."""
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    counts = [0] * (n + 1)
    for s in all_subspaces(n, p):
        if flavor == "sub":
            others = s
        else:
            others = basis
        ok = all(bracket(structure, u, v, p) in s for u in s for v in others)
        if ok and blocks is not None:
            # homogeneous: s is the sum of its intersections with the blocks
            parts = 1
            for b in set(blocks):
                parts *= sum(1 for v in s if all(x == 0 for k, x in enumerate(v) if blocks[k] != b))
            ok = parts == len(s)
        if ok:
            counts[n - _log(len(s), p)] += 1
    return counts


def structure_of(ring):
    return {key: {k: c for c, k in terms} for key, terms in ring.brackets.items()}


def gaussian_binomial_by_count(n, k, p):
    return sum(1 for s in all_subspaces(n, p) if len(s) == p**k)
