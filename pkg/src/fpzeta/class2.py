"""Ideal counting for Lie rings of nilpotency class 2.

An ideal ``I`` of a class-2 algebra ``L`` is determined by ``Lambda_2 = I cap L'``
and by its image ``Lambda_1`` in ``L/L'``. Every subspace ``Lambda_2`` of
``L'`` is an ideal, and a subspace ``Lambda_1`` lifts to ideals exactly when it
lies in

    X(Lambda_2) = { x + L' : [x, L] subset Lambda_2 },

the preimage of the centre of ``L/Lambda_2``. Each admissible ``Lambda_1`` of
dimension ``j`` has ``|L' : Lambda_2|^j`` lifts. Summing over all ``Lambda_2``
gives

    sum over Lambda_2 of codim i, rk = dim X(Lambda_2):
        sum_j binom(rk, j)_p * p^(i*j) * t^(i + d1 - j)

which is the whole ideal zeta polynomial. Only ``Lambda_2`` is enumerated, in
dimension ``d2 = dim L'``, which is tiny even when ``L`` is not.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .enumeration import PivotPattern, iterate_patterns
from .ffield import check_prime, rank_mod, rref_mod
from .liealg import LieRing, lower_central_series, structure_tensor
from .zeta import ZetaPoly, gaussian_binomial

__all__ = [
    "Class2Error",
    "Class2Split",
    "Lambda2Datum",
    "class2_split",
    "compute_X",
    "lambda2_data",
    "class2_ideal_count",
    "class2_ideal_zeta",
]


class Class2Error(ValueError):
    pass


@dataclass(frozen=True)
class Class2Split:
    """``L = C + L'`` with ``C`` spanned by standard basis vectors.

    ``derived`` is the reduced echelon basis of ``L'``; a vector ``w`` in
    ``L'`` has coordinates ``w[c]`` for ``c`` in ``derived_pivots``.
    ``B[k][j]`` holds the ``L'``-coordinates of ``[complement[k], e_j]``.
    """

    p: int
    n: int
    complement: tuple[int, ...]
    derived: tuple[tuple[int, ...], ...]
    derived_pivots: tuple[int, ...]
    B: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def d1(self) -> int:
        return len(self.complement)

    @property
    def d2(self) -> int:
        return len(self.derived)


@dataclass(frozen=True)
class Lambda2Datum:
    """One subspace of ``L'`` in ``L'``-coordinates with the data of its ``X``."""

    pattern: PivotPattern
    free: tuple[tuple[tuple[int, int], int], ...]
    codim: int
    index_exponent: int
    rank: int


def class2_split(ring: LieRing, p: int) -> Class2Split:
    check_prime(p)
    lcs = lower_central_series(ring, p)
    if lcs.nilpotency_class != 2:
        cls = "not nilpotent" if lcs.nilpotency_class is None else f"class {lcs.nilpotency_class}"
        raise Class2Error(f"ring {ring.name!r} is {cls} over F_{p}, need class exactly 2")
    T = structure_tensor(ring, p)
    n = ring.dim
    gens = [T[i][j] for i in range(n) for j in range(i + 1, n) if any(T[i][j])]
    derived, pivots = rref_mod(gens, p, ncols=n)
    piv = set(pivots)
    complement = tuple(k for k in range(n) if k not in piv)
    # RREF rows are unit on their own pivot, so coordinates are read off pivots
    B = tuple(tuple(tuple(T[k][j][c] for c in pivots) for j in range(n)) for k in complement)
    return Class2Split(p, n, complement, tuple(tuple(r) for r in derived), tuple(pivots), B)


def _quotient_columns(split: Class2Split, pattern: PivotPattern, free: dict) -> list[list[int]]:
    """Rows k of the linear map ``C -> (L'/Lambda_2)^n`` whose kernel is ``X``."""
    p = split.p
    pivots = pattern.pivots
    mat = []
    for Bk in split.B:
        row = []
        for w in Bk:
            for q in pattern.nonpivots:
                s = w[q]
                for c in pivots:
                    if c < q:
                        m = free.get((c, q), 0)
                        if m and w[c]:
                            s -= w[c] * m
                row.append(s % p)
        mat.append(row)
    return mat


def compute_X(ring: LieRing, p: int, pattern: PivotPattern, free: dict | None = None,
              split: Class2Split | None = None) -> tuple[int, int]:
    """``(index exponent, rank)`` of ``X(Lambda_2)`` inside ``L/L'``.

    ``Lambda_2`` is given as an echelon pattern and free entries in the
    coordinates of ``L'``. The two numbers always sum to ``d1``.
    """
    if split is None:
        split = class2_split(ring, p)
    if pattern.n != split.d2:
        raise ValueError(f"pattern dimension {pattern.n} does not match dim L' = {split.d2}")
    mat = _quotient_columns(split, pattern, free or {})
    r = rank_mod(mat, p) if mat and mat[0] else 0
    return r, split.d1 - r


def _iter_lambda2(d2: int, p: int) -> Iterator[tuple[PivotPattern, dict]]:
    if d2 == 0:
        return
    for pattern in iterate_patterns(d2):
        pos = pattern.free_positions()
        for vals in itertools.product(range(p), repeat=len(pos)):
            yield pattern, dict(zip(pos, vals))


def lambda2_data(ring: LieRing, p: int) -> list[Lambda2Datum]:
    """Every subspace of ``L'`` with its codimension, index exponent and rank."""
    split = class2_split(ring, p)
    out = []
    for pattern, free in _iter_lambda2(split.d2, p):
        idx, rk = compute_X(ring, p, pattern, free, split)
        out.append(Lambda2Datum(pattern, tuple(sorted(free.items())), pattern.codim, idx, rk))
    return out


def _count_by_lambda1(split: Class2Split) -> tuple[list[int], int]:
    # Dual order: for Lambda_1 of dim j the admissible Lambda_2 are exactly
    # those containing W = [Lambda_1, L], so there are binom(d2 - dim W, i)_p
    # of codim i, each with p^(i*j) lifts.
    p, d1, d2, n = split.p, split.d1, split.d2, split.n
    coeffs = [0] * (n + 1)
    hist: dict[tuple[int, int], int] = {}
    visited = 0
    for pattern in iterate_patterns(d1):
        rows_idx = pattern.pivots
        pos = pattern.free_positions()
        for vals in itertools.product(range(p), repeat=len(pos)):
            visited += 1
            free = dict(zip(pos, vals))
            gens = []
            for r in rows_idx:
                lam = [0] * d1
                lam[r] = 1
                for q in pattern.nonpivots:
                    if q > r:
                        lam[q] = free[(r, q)]
                for j in range(n):
                    w = [0] * d2
                    for k, a in enumerate(lam):
                        if a:
                            Bkj = split.B[k][j]
                            for c in range(d2):
                                w[c] += a * Bkj[c]
                    if any(x % p for x in w):
                        gens.append(w)
            wdim = rank_mod(gens, p) if gens else 0
            key = (len(rows_idx), wdim)
            hist[key] = hist.get(key, 0) + 1
    for (j, wdim), mult in hist.items():
        for i in range(d2 - wdim + 1):
            coeffs[i + d1 - j] += mult * gaussian_binomial(d2 - wdim, i, p) * p ** (i * j)
    return coeffs, visited


def class2_ideal_count(ring: LieRing, p: int, order: str = "auto") -> tuple[list[int], int]:
    """Ideal counts by codimension and the number of subspaces visited.

    ``order="lambda2"`` enumerates subspaces of ``L'``, ``order="lambda1"``
    subspaces of ``L/L'``; ``"auto"`` picks the smaller of the two spaces.
    """
    split = class2_split(ring, p)
    if order not in ("auto", "lambda1", "lambda2"):
        raise ValueError(f"unknown order {order!r}")
    if order == "lambda1" or (order == "auto" and split.d1 < split.d2):
        return _count_by_lambda1(split)
    d1, n = split.d1, split.n
    coeffs = [0] * (n + 1)
    # (codim, rank) -> number of Lambda_2; the contribution depends on nothing else
    hist: dict[tuple[int, int], int] = {}
    visited = 0
    for pattern, free in _iter_lambda2(split.d2, p):
        visited += 1
        mat = _quotient_columns(split, pattern, free)
        r = rank_mod(mat, p) if mat and mat[0] else 0
        key = (pattern.codim, d1 - r)
        hist[key] = hist.get(key, 0) + 1
    for (i, rk), mult in hist.items():
        for j in range(rk + 1):
            coeffs[i + d1 - j] += mult * gaussian_binomial(rk, j, p) * p ** (i * j)
    return coeffs, visited


def class2_ideal_zeta(ring: LieRing, p: int, order: str = "auto") -> ZetaPoly:
    coeffs, _ = class2_ideal_count(ring, p, order)
    return ZetaPoly(p, "ideal", coeffs)
