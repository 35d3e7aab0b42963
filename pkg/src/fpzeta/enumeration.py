"""Enumeration of F_p-subspaces through canonical echelon matrices.

Every subspace V of F_p^n has a unique generator matrix M with

* ``M[i][i]`` in {0, 1}; the rows with ``M[i][i] = 1`` (pivot rows) span V,
* ``M[i][j] = 0`` whenever column ``j`` is a pivot column,
* the entries ``M[i][j]``, ``i`` pivot, ``j > i`` non-pivot, free in F_p.

The set of pivot columns (the diagonal type) splits the subspaces into ``2^n``
classes; a class with ``f`` free entries holds ``p^f`` subspaces of
codimension ``n - rank``.

Three counting strategies share this parametrisation:

``prune=False``
    visit every echelon matrix and test closure directly (the oracle);
column-staged (rings whose brackets never lower the basis index)
    assign the free entries column by column; the closure residues at column
    ``q`` are affine in the column-``q`` unknowns once earlier columns are
    fixed, so each stage is a linear solve over F_p;
row-staged (any ring)
    assign whole pivot rows top to bottom and reject a partial matrix as soon
    as a residue that no longer depends on open entries is nonzero.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .ffield import check_prime, solve_affine_mod
from .liealg import LieRing, bracket_raises_index, lower_central_series, structure_tensor
from .zeta import FLAVORS, ZetaPoly, gaussian_binomial

__all__ = [
    "MAX_DIM",
    "PivotPattern",
    "EchelonMatrix",
    "CountTally",
    "CountResult",
    "BudgetExhausted",
    "iterate_patterns",
    "iter_echelon",
    "reduce_vector",
    "is_closed",
    "count_zeta",
    "count",
    "count_all_subspaces",
]

MAX_DIM = 12


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the enumeration finished; no count is returned."""

    def __init__(self, budget: int, nodes: int):
        self.budget = budget
        self.nodes = nodes
        super().__init__(f"enumeration incomplete: node budget {budget} exhausted after {nodes} nodes")


@dataclass(frozen=True)
class PivotPattern:
    """Diagonal type of an echelon matrix; bit ``i`` of ``mask`` marks a pivot at column ``i``."""

    n: int
    mask: int

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    @property
    def nonpivots(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if not self.mask >> i & 1)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.mask >> i & 1 for i in range(self.n))

    @property
    def rank(self) -> int:
        return bin(self.mask).count("1")

    @property
    def codim(self) -> int:
        return self.n - self.rank

    def free_positions(self) -> tuple[tuple[int, int], ...]:
        """Free entries ``(i, j)`` in row-major order: pivot row ``i``, non-pivot column ``j > i``."""
        nonp = self.nonpivots
        return tuple((i, j) for i in self.pivots for j in nonp if j > i)

    @property
    def num_free(self) -> int:
        return len(self.free_positions())

    def runs(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The run lengths ``(a, b)``: alternating blocks of non-pivots then pivots.

        ``a[0]`` and ``b[-1]`` may be zero; all other entries are positive.
        """
        a, b = [], []
        diag = self.diagonal
        k = 0
        while k < self.n or not a:
            za = 0
            while k < self.n and diag[k] == 0:
                za += 1
                k += 1
            ob = 0
            while k < self.n and diag[k] == 1:
                ob += 1
                k += 1
            a.append(za)
            b.append(ob)
        return tuple(a), tuple(b)

    def __str__(self):
        return "".join(map(str, self.diagonal))


def iterate_patterns(n: int) -> Iterator[PivotPattern]:
    """All ``2^n`` pivot patterns, by ascending bitmask."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    for mask in range(1 << n):
        yield PivotPattern(n, mask)


@dataclass(frozen=True)
class EchelonMatrix:
    pattern: PivotPattern
    p: int
    free: Mapping[tuple[int, int], int]

    @property
    def n(self) -> int:
        return self.pattern.n

    @property
    def rank(self) -> int:
        return self.pattern.rank

    @property
    def codim(self) -> int:
        return self.pattern.codim

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` of the n x n matrix (zero for non-pivot ``i``)."""
        n = self.n
        if not self.pattern.mask >> i & 1:
            return (0,) * n
        r = [0] * n
        r[i] = 1
        for j in self.pattern.nonpivots:
            if j > i:
                r[j] = self.free.get((i, j), 0) % self.p
        return tuple(r)

    def pivot_rows(self) -> dict[int, tuple[int, ...]]:
        return {i: self.row(i) for i in self.pattern.pivots}

    def as_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(self.n))

    def rowspan(self) -> frozenset[tuple[int, ...]]:
        rows = list(self.pivot_rows().values())
        n, p = self.n, self.p
        out = set()
        for coeffs in itertools.product(range(p), repeat=len(rows)):
            v = [0] * n
            for a, r in zip(coeffs, rows):
                if a:
                    for k in range(n):
                        v[k] += a * r[k]
            out.add(tuple(x % p for x in v))
        return frozenset(out)


def iter_echelon(pattern: PivotPattern, p: int) -> Iterator[EchelonMatrix]:
    """All ``p^{num_free}`` echelon matrices with the given pattern."""
    pos = pattern.free_positions()
    for vals in itertools.product(range(p), repeat=len(pos)):
        yield EchelonMatrix(pattern, p, dict(zip(pos, vals)))


def count_all_subspaces(n: int, p: int) -> int:
    """Total number of subspaces of F_p^n."""
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds cap {MAX_DIM}")
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


# --------------------------------------------------------------------------
# membership and closure


def _residue(v, rows: Mapping[int, tuple[int, ...]], p: int) -> list[int]:
    r = list(v)
    for c, row in rows.items():
        a = r[c]
        if a:
            for k in range(c, len(r)):
                if row[k]:
                    r[k] -= a * row[k]
    return [x % p for x in r]


def reduce_vector(v, M: EchelonMatrix) -> tuple[tuple[int, ...], bool]:
    """Subtract ``v[c] * row_c`` for every pivot column ``c``.

    The residue vanishes on pivot columns; ``v`` lies in the row space of
    ``M`` exactly when the residue is zero.
    """
    if len(v) != M.n:
        raise ValueError("vector length does not match matrix dimension")
    res = _residue([x % M.p for x in v], M.pivot_rows(), M.p)
    return tuple(res), not any(res)


def _bracket(T, u, v, p):
    n = len(u)
    out = [0] * n
    for i, a in enumerate(u):
        if a:
            Ti = T[i]
            for j, b in enumerate(v):
                if b:
                    ab = a * b
                    for k, c in enumerate(Ti[j]):
                        if c:
                            out[k] += ab * c
    return [x % p for x in out]


def _check_flavor(ring: LieRing, flavor: str):
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    if flavor == "graded-ideal" and ring.grading is None:
        raise ValueError(f"graded-ideal flavor needs a grading; ring {ring.name!r} has none")


def _homogeneous(pattern: PivotPattern, blocks, free) -> bool:
    for (i, j), val in free.items():
        if val and blocks[i] != blocks[j]:
            return False
    return True


def is_closed(M: EchelonMatrix, ring: LieRing, p: int, flavor: str) -> bool:
    """Whether the row space of ``M`` is a subalgebra / ideal / graded ideal."""
    _check_flavor(ring, flavor)
    if M.n != ring.dim or M.p != p:
        raise ValueError("matrix does not match ring dimension or prime")
    T = structure_tensor(ring, p)
    rows = M.pivot_rows()
    n = ring.dim
    if flavor == "graded-ideal" and not _homogeneous(M.pattern, ring.block_of(), M.free):
        return False
    if flavor == "sub":
        items = list(rows.values())
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                if any(_residue(_bracket(T, items[a], items[b], p), rows, p)):
                    return False
        return True
    for r in rows.values():
        for j in range(n):
            w = [0] * n
            for k, a in enumerate(r):
                if a:
                    for t, c in enumerate(T[k][j]):
                        if c:
                            w[t] += a * c
            if any(_residue([x % p for x in w], rows, p), ):
                return False
    return True


# --------------------------------------------------------------------------
# counting


@dataclass
class CountTally:
    """Per-codimension counters for one enumeration task."""

    n: int
    counts: list[int]
    nodes: int = 0

    @classmethod
    def empty(cls, n: int) -> "CountTally":
        return cls(n, [0] * (n + 1))

    def merge(self, other: "CountTally") -> "CountTally":
        return CountTally(self.n, [a + b for a, b in zip(self.counts, other.counts)], self.nodes + other.nodes)


@dataclass(frozen=True)
class CountResult:
    poly: ZetaPoly
    method: str
    nodes: int


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self, k=1):
        self.nodes += k
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(self.limit, self.nodes)


_BATCH = 1 << 14


def _closed_batch(rows: np.ndarray, T: np.ndarray, pivots, p: int, flavor: str) -> np.ndarray:
    """Closure test for a stack of pivot-row blocks, shape ``(N, rank, n)``."""
    if flavor == "sub":
        w = np.einsum("Nak,Nbl,kln->Nabn", rows, rows, T, optimize=True)
        w = w.reshape(rows.shape[0], -1, rows.shape[2])
    else:
        w = np.einsum("Nik,kjn->Nijn", rows, T, optimize=True).reshape(rows.shape[0], -1, rows.shape[2])
    w %= p
    res = w - np.einsum("Nmc,Ncn->Nmn", w[:, :, list(pivots)], rows)
    return ~(res % p).any(axis=(1, 2))


def _count_pattern_plain(ring, p, flavor, pattern, budget) -> int:
    """Test every echelon matrix of the pattern directly (vectorised over matrices)."""
    n, pivots = ring.dim, pattern.pivots
    pos = pattern.free_positions()
    total = p ** len(pos)
    budget.tick(total)
    if not pivots:
        return 1
    T = np.array(structure_tensor(ring, p), dtype=np.int64)
    blocks = ring.block_of() if flavor == "graded-ideal" else None
    slot = {c: t for t, c in enumerate(pivots)}
    found = 0
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(total, start + _BATCH), dtype=np.int64)
        rows = np.zeros((idx.size, len(pivots), n), dtype=np.int64)
        for t, c in enumerate(pivots):
            rows[:, t, c] = 1
        keep = np.ones(idx.size, dtype=bool)
        # mixed-radix digits of idx give the free entries, last position fastest
        rem = idx.copy()
        for i, j in reversed(pos):
            digit = rem % p
            rem //= p
            rows[:, slot[i], j] = digit
            if blocks is not None and blocks[i] != blocks[j]:
                keep &= digit == 0
        if blocks is not None:
            rows = rows[keep]
            if not rows.shape[0]:
                continue
        found += int(_closed_batch(rows, T, pivots, p, flavor).sum())
    return found


def _count_pattern_columns(ring, p, flavor, pattern, budget) -> int:
    """Column-staged search; requires ``bracket_raises_index(ring)``."""
    T = structure_tensor(ring, p)
    n = ring.dim
    pivots = pattern.pivots
    nonpivots = pattern.nonpivots
    blocks = ring.block_of() if flavor == "graded-ideal" else None
    rows = {i: [0] * n for i in pivots}
    for i in pivots:
        rows[i][i] = 1
    sub = flavor == "sub"

    def stage(si: int) -> int:
        budget.tick()
        if si == len(nonpivots):
            return 1
        q = nonpivots[si]
        live = [c for c in pivots if c < q]
        if blocks is not None:
            unknowns = [c for c in live if blocks[c] == blocks[q]]
        else:
            unknowns = live
        var_index = {c: t for t, c in enumerate(unknowns)}
        nv = len(unknowns)
        eqs = []
        if sub:
            for ai in range(len(live)):
                a = live[ai]
                ra = rows[a]
                for b in live[ai + 1:]:
                    rb = rows[b]
                    w = _bracket(T, ra, rb, p)  # column q and beyond of rows are still 0
                    coefs = [0] * nv
                    for c in unknowns:
                        coefs[var_index[c]] = -w[c]
                    if a in var_index:
                        # d/dm_{aq}: [e_q, row_b] at column q
                        s = 0
                        for l, x in enumerate(rb):
                            if x:
                                s += x * T[q][l][q]
                        coefs[var_index[a]] += s
                    if b in var_index:
                        s = 0
                        for k, x in enumerate(ra):
                            if x:
                                s += x * T[k][q][q]
                        coefs[var_index[b]] += s
                    coefs = [x % p for x in coefs]
                    const = w[q]
                    if const or any(coefs):
                        eqs.append((coefs, const))
        else:
            for i in live:
                ri = rows[i]
                support = [k for k in range(q) if ri[k]]
                for j in range(n):
                    w = [0] * (q + 1)
                    for k in support:
                        a = ri[k]
                        Tkj = T[k][j]
                        for t in range(k, q + 1):
                            c = Tkj[t]
                            if c:
                                w[t] += a * c
                    coefs = [0] * nv
                    for c in unknowns:
                        coefs[var_index[c]] = -w[c]
                    if i in var_index:
                        coefs[var_index[i]] += T[q][j][q]
                    coefs = [x % p for x in coefs]
                    const = w[q] % p
                    if const or any(coefs):
                        eqs.append((coefs, const))
        sol = solve_affine_mod(eqs, nv, p)
        if sol is None:
            return 0
        particular, kernel = sol
        total = 0
        for combo in itertools.product(range(p), repeat=len(kernel)):
            x = list(particular)
            for a, kv in zip(combo, kernel):
                if a:
                    for t in range(nv):
                        x[t] += a * kv[t]
            for c, t in var_index.items():
                rows[c][q] = x[t] % p
            total += stage(si + 1)
        for c in unknowns:
            rows[c][q] = 0
        return total

    return stage(0)


def _count_pattern_rows(ring, p, flavor, pattern, budget) -> int:
    """Row-staged backtracking with early rejection of determined residues."""
    T = structure_tensor(ring, p)
    n = ring.dim
    pivots = pattern.pivots
    nonpivots = pattern.nonpivots
    blocks = ring.block_of() if flavor == "graded-ideal" else None
    rows: dict[int, list[int]] = {}
    sub = flavor == "sub"

    def determined_residue_ok(assigned, vectors) -> bool:
        # residue at non-pivot q is fixed once every pivot c < q has its row
        last = assigned[-1]
        nxt = next((c for c in pivots if c > last), n)
        cols = [q for q in nonpivots if q < nxt]
        if not cols:
            return True
        for w in vectors:
            for q in cols:
                s = w[q]
                for c in assigned:
                    if c < q and w[c]:
                        s -= w[c] * rows[c][q]
                if s % p:
                    return False
        return True

    def vectors_for(assigned):
        out = []
        if sub:
            for a, b in itertools.combinations(assigned, 2):
                out.append(_bracket(T, rows[a], rows[b], p))
        else:
            for i in assigned:
                ri = rows[i]
                for j in range(n):
                    w = [0] * n
                    for k, a in enumerate(ri):
                        if a:
                            for t, c in enumerate(T[k][j]):
                                if c:
                                    w[t] += a * c
                    out.append([x % p for x in w])
        return out

    def go(idx: int) -> int:
        budget.tick()
        if idx == len(pivots):
            return 1
        i = pivots[idx]
        cols = [j for j in nonpivots if j > i and (blocks is None or blocks[j] == blocks[i])]
        total = 0
        assigned = pivots[: idx + 1]
        for vals in itertools.product(range(p), repeat=len(cols)):
            r = [0] * n
            r[i] = 1
            for j, v in zip(cols, vals):
                r[j] = v
            rows[i] = r
            if determined_residue_ok(assigned, vectors_for(assigned)):
                total += go(idx + 1)
        rows.pop(i, None)
        return total

    if not pivots:
        budget.tick()
        return 1
    return go(0)


def _tally_patterns(ring, p, flavor, masks, strategy, budget_limit) -> CountTally:
    budget = _Budget(budget_limit)
    tally = CountTally.empty(ring.dim)
    fn = {"plain": _count_pattern_plain, "columns": _count_pattern_columns, "rows": _count_pattern_rows}[strategy]
    for mask in masks:
        pattern = PivotPattern(ring.dim, mask)
        tally.counts[pattern.codim] += fn(ring, p, flavor, pattern, budget)
    tally.nodes = budget.nodes
    return tally


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("ZETA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _brute(ring: LieRing, p: int, flavor: str, prune: bool, budget: int | None,
           workers: int | None) -> CountTally:
    if not prune:
        strategy = "plain"
    elif bracket_raises_index(ring):
        strategy = "columns"
    else:
        strategy = "rows"
    masks = list(range(1 << ring.dim))
    nw = _workers(workers)
    if nw == 1 or len(masks) < 2:
        return _tally_patterns(ring, p, flavor, masks, strategy, budget)
    chunks = [masks[k::nw] for k in range(nw)]
    with ProcessPoolExecutor(max_workers=nw) as ex:
        parts = list(ex.map(_tally_patterns, *zip(*[(ring, p, flavor, ch, strategy, budget) for ch in chunks])))
    total = parts[0]
    for t in parts[1:]:
        total = total.merge(t)
    if budget is not None and total.nodes > budget:
        raise BudgetExhausted(budget, total.nodes)
    return total


def count(ring: LieRing, p: int, flavor: str = "ideal", method: str = "auto", budget: int | None = None,
          prune: bool = True, workers: int | None = None) -> CountResult:
    """Count flavor-closed subspaces by codimension, reporting the method used.

    ``method="auto"`` sends ideal counts of class-2 rings to the class-2
    decomposition and everything else to the echelon enumeration.
    """
    check_prime(p)
    _check_flavor(ring, flavor)
    if ring.dim > MAX_DIM:
        raise ValueError(f"dimension {ring.dim} exceeds cap {MAX_DIM}")
    if method not in ("auto", "brute", "class2"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        if flavor == "ideal" and lower_central_series(ring, p).nilpotency_class == 2:
            method = "class2"
        else:
            method = "brute"
    if method == "class2":
        if flavor != "ideal":
            raise ValueError("class2 method counts ideals only")
        from .class2 import class2_ideal_count

        coeffs, nodes = class2_ideal_count(ring, p)
        return CountResult(ZetaPoly(p, flavor, coeffs), "class2", nodes)
    tally = _brute(ring, p, flavor, prune, budget, workers)
    return CountResult(ZetaPoly(p, flavor, tally.counts), "brute", tally.nodes)


def count_zeta(ring: LieRing, p: int, flavor: str = "ideal", method: str = "auto", budget: int | None = None,
               prune: bool = True, workers: int | None = None) -> ZetaPoly:
    return count(ring, p, flavor, method, budget, prune, workers).poly
