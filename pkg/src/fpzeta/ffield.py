"""Exact arithmetic in the prime field F_p and small dense linear algebra mod p.

Field elements used in hot loops are plain ``int`` residues; :class:`FieldElem`
is the checked, immutable wrapper used at API boundaries. Exact rationals come
from :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "MAX_PRIME",
    "Rational",
    "FieldElem",
    "PrimeField",
    "NotPrimeError",
    "is_prime",
    "check_prime",
    "reduce",
    "inverse",
    "inv_mod",
    "inverse_table",
    "rref_mod",
    "rank_mod",
    "solve_affine_mod",
    "primes_in_range",
]

MAX_PRIME = 2**31

Rational = Fraction


class NotPrimeError(ValueError):
    """Raised when a modulus is not a prime in [2, 2^31]."""


@lru_cache(maxsize=4096)
def is_prime(p: int) -> bool:
    """Trial division primality test for 0 <= p <= 2^31."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0 or p % 3 == 0:
        return False
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrimeError(f"{p!r} is not an integer")
    if p > MAX_PRIME:
        raise NotPrimeError(f"{p} exceeds the supported bound 2^31")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


def primes_in_range(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    # r0 == gcd == 1 for prime p
    return s0 % p


@lru_cache(maxsize=64)
def inverse_table(p: int) -> tuple[int, ...]:
    """Table ``t`` with ``t[a] = a^{-1} mod p`` (``t[0] = 0``); only for small p."""
    if p > 1 << 16:
        raise ValueError("inverse table only built for p <= 65536")
    return (0,) + tuple(inv_mod(a, p) for a in range(1, p))


@dataclass(frozen=True, slots=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise ValueError(f"residue {self.value} out of range for p={self.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value % self.p, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * inverse(FieldElem(o, self.p))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """The field F_p; construction fails unless ``p`` is prime."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        self.p = check_prime(p)

    def __call__(self, z: int) -> FieldElem:
        return FieldElem(z % self.p, self.p)

    def __iter__(self):
        return (FieldElem(a, self.p) for a in range(self.p))

    def __len__(self):
        return self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def reduce(z: int, p: int) -> FieldElem:
    return PrimeField(p)(z)


def inverse(x: FieldElem) -> FieldElem:
    if x.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{x.p}")
    return FieldElem(inv_mod(x.value, x.p), x.p)


def rref_mod(rows, p: int, ncols: int | None = None):
    """Reduced row echelon form of an integer matrix over F_p.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[k]`` is the pivot column of ``R[k]``.
    """
    m = [[x % p for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        if row[c] != 1:
            iv = inv_mod(row[c], p)
            row = [x * iv % p for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod(rows, p: int) -> int:
    """Rank over F_p; forward elimination only."""
    m = [[x % p for x in r] for r in rows if any(x % p for x in r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        iv = inv_mod(prow[c], p)
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            if f:
                f = f * iv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_affine_mod(equations, nvars: int, p: int):
    """Solve ``const + sum_k coef_k x_k = 0`` over F_p.

    ``equations`` is an iterable of ``(coefs, const)`` with ``len(coefs) ==
    nvars``. Returns ``None`` if inconsistent, otherwise ``(particular,
    kernel)``: one solution and a basis of the solution space of the
    homogeneous system.
    """
    aug = [list(coefs) + [(-const) % p] for coefs, const in equations]
    if not aug:
        kernel = [[1 if i == k else 0 for i in range(nvars)] for k in range(nvars)]
        return [0] * nvars, kernel
    R, pivots = rref_mod(aug, p, ncols=nvars + 1)
    if pivots and pivots[-1] == nvars:
        return None
    particular = [0] * nvars
    for row, c in zip(R, pivots):
        particular[c] = row[nvars]
    pivset = set(pivots)
    kernel = []
    for f in range(nvars):
        if f in pivset:
            continue
        v = [0] * nvars
        v[f] = 1
        for row, c in zip(R, pivots):
            v[c] = -row[f] % p
        kernel.append(v)
    return particular, kernel
