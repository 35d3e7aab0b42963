"""Lie rings given by integer structure constants.

Basis indices are 0-based inside Python objects and 1-based in ring files and
in human-facing presentations, matching the usual ``e_1, ..., e_n`` notation.
Structure constants are kept over the integers and reduced mod ``p`` on use,
so one ring object serves every prime of a scan.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

from .ffield import check_prime, rref_mod

__all__ = [
    "LieRing",
    "AdjointMatrix",
    "ParseError",
    "CatalogError",
    "JacobiReport",
    "LowerCentralSeries",
    "parse_presentation",
    "load_ring",
    "dump_presentation",
    "validate",
    "adjoint_matrices",
    "structure_tensor",
    "lower_central_series",
    "bracket_raises_index",
    "is_graded",
    "catalog",
    "catalog_entries",
    "free_nilpotent",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class CatalogError(ValueError):
    pass


Term = tuple[int, int]  # (coefficient, 0-based basis index)


@dataclass(frozen=True)
class LieRing:
    """A Lie ring additively isomorphic to Z^n.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to the terms of ``[e_i, e_j]``;
    missing pairs bracket to zero and antisymmetry is implicit.
    """

    name: str
    dim: int
    brackets: Mapping[tuple[int, int], tuple[Term, ...]] = field(default_factory=dict)
    grading: tuple[int, ...] | None = None
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        clean = {}
        for (i, j), terms in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bracket index pair ({i + 1},{j + 1}) out of range or unordered")
            acc: dict[int, int] = {}
            for c, k in terms:
                if not 0 <= k < self.dim:
                    raise ValueError(f"basis index {k + 1} out of range 1..{self.dim}")
                acc[k] = acc.get(k, 0) + c
            t = tuple((c, k) for k, c in sorted(acc.items()) if c)
            if t:
                clean[(i, j)] = t
        object.__setattr__(self, "brackets", clean)
        object.__setattr__(self, "params", dict(self.params))
        if self.grading is not None:
            g = tuple(int(d) for d in self.grading)
            if any(d <= 0 for d in g) or sum(g) != self.dim:
                raise ValueError(f"grading {g} does not partition dimension {self.dim}")
            object.__setattr__(self, "grading", g)

    def __hash__(self):
        return hash((self.name, self.dim, tuple(sorted(self.brackets.items())), self.grading,
                     tuple(sorted(self.params.items()))))

    def __eq__(self, other):
        if not isinstance(other, LieRing):
            return NotImplemented
        return (self.name, self.dim, self.brackets, self.grading, dict(self.params)) == (
            other.name, other.dim, other.brackets, other.grading, dict(other.params))

    def bracket(self, i: int, j: int) -> dict[int, int]:
        """Integer coordinates of ``[e_i, e_j]`` as ``{k: coefficient}``."""
        if i == j:
            return {}
        if i < j:
            return {k: c for c, k in self.brackets.get((i, j), ())}
        return {k: -c for c, k in self.brackets.get((j, i), ())}

    def block_of(self) -> list[int] | None:
        """Grading block index of every basis vector, or ``None`` if ungraded."""
        if self.grading is None:
            return None
        out = []
        for b, d in enumerate(self.grading):
            out.extend([b] * d)
        return out


@dataclass(frozen=True)
class AdjointMatrix:
    """``matrix[i][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]`` mod p."""

    index: int
    p: int
    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    triple: tuple[int, int, int] | None = None
    residual: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class LowerCentralSeries:
    dims: tuple[int, ...]
    nilpotency_class: int | None  # None: not nilpotent

    @property
    def nilpotent(self) -> bool:
        return self.nilpotency_class is not None


# --------------------------------------------------------------------------
# ring files

_TERM = re.compile(r"\s*([+-])?\s*(-?\d+)\s*\*\s*(\d+)\s*")


def _parse_terms(rhs: str, lineno: int) -> list[tuple[int, int]]:
    rhs = rhs.strip()
    if not rhs:
        raise ParseError("empty right-hand side", lineno)
    terms = []
    pos = 0
    while pos < len(rhs):
        m = _TERM.match(rhs, pos)
        if not m or (terms and not m.group(1)) or m.end() == pos:
            raise ParseError(f"cannot parse term at {rhs[pos:]!r}", lineno)
        sign = -1 if m.group(1) == "-" else 1
        terms.append((sign * int(m.group(2)), int(m.group(3))))
        pos = m.end()
    return terms


def parse_presentation(text: str, default_name: str = "ring") -> LieRing:
    """Parse the line-oriented ring-file format.

    ::

        name heisenberg
        dim 3
        grading 2 1
        bracket 1 2 = 1*3
    """
    name = default_name
    dim = None
    grading = None
    raw: dict[tuple[int, int], tuple[list[tuple[int, int]], int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            if not rest or len(rest.split()) != 1:
                raise ParseError("expected 'name <identifier>'", lineno)
            name = rest
        elif key == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim'", lineno)
            if not re.fullmatch(r"\d+", rest):
                raise ParseError("expected 'dim <n>'", lineno)
            dim = int(rest)
            if dim < 1:
                raise ParseError("dimension must be at least 1", lineno)
        elif key == "grading":
            parts = rest.split()
            if not parts or not all(re.fullmatch(r"\d+", x) for x in parts):
                raise ParseError("expected 'grading <d_1> ... <d_r>'", lineno)
            grading = (tuple(int(x) for x in parts), lineno)
        elif key == "bracket":
            lhs, eq, rhs = rest.partition("=")
            ij = lhs.split()
            if not eq or len(ij) != 2 or not all(re.fullmatch(r"\d+", x) for x in ij):
                raise ParseError("expected 'bracket <i> <j> = <c>*<k> [+ ...]'", lineno)
            i, j = int(ij[0]), int(ij[1])
            if i >= j:
                raise ParseError(f"bracket requires i < j, got {i} {j}", lineno)
            if (i, j) in raw:
                raise ParseError(f"duplicate bracket definition for ({i},{j})", lineno)
            raw[(i, j)] = (_parse_terms(rhs, lineno), lineno)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if dim is None:
        raise ParseError("missing 'dim' line")
    brackets = {}
    for (i, j), (terms, lineno) in raw.items():
        for idx in (i, j, *(k for _, k in terms)):
            if not 1 <= idx <= dim:
                raise ParseError(f"index {idx} out of range 1..{dim}", lineno)
        brackets[(i - 1, j - 1)] = tuple((c, k - 1) for c, k in terms)
    g = None
    if grading is not None:
        g, lineno = grading
        if any(d == 0 for d in g) or sum(g) != dim:
            raise ParseError(f"grading {' '.join(map(str, g))} does not sum to dim {dim}", lineno)
    return LieRing(name=name, dim=dim, brackets=brackets, grading=g)


def load_ring(path: str | Path) -> LieRing:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), default_name=path.stem)


def dump_presentation(ring: LieRing) -> str:
    lines = [f"name {ring.name}", f"dim {ring.dim}"]
    if ring.grading:
        lines.append("grading " + " ".join(map(str, ring.grading)))
    for (i, j), terms in sorted(ring.brackets.items()):
        rhs = " + ".join(f"{c}*{k + 1}" for c, k in terms)
        lines.append(f"bracket {i + 1} {j + 1} = {rhs}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# linear structure mod p


@lru_cache(maxsize=256)
def structure_tensor(ring: LieRing, p: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``T[i][j]`` = coordinates of ``[e_i, e_j]`` reduced mod p (dense, antisymmetric)."""
    n = ring.dim
    zero = (0,) * n
    T = [[zero] * n for _ in range(n)]
    for (i, j), terms in ring.brackets.items():
        v = [0] * n
        for c, k in terms:
            v[k] = (v[k] + c) % p
        T[i][j] = tuple(v)
        T[j][i] = tuple(-x % p for x in v)
    return tuple(tuple(r) for r in T)


def _bracket_vec(T, u, v, p):
    n = len(u)
    out = [0] * n
    for i, a in enumerate(u):
        if not a:
            continue
        Ti = T[i]
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(Ti[j]):
                if c:
                    out[k] += ab * c
    return [x % p for x in out]


def adjoint_matrices(ring: LieRing, p: int) -> list[AdjointMatrix]:
    check_prime(p)
    T = structure_tensor(ring, p)
    n = ring.dim
    return [AdjointMatrix(j, p, tuple(T[i][j] for i in range(n))) for j in range(n)]


def validate(ring: LieRing, p: int) -> JacobiReport:
    """Check the Jacobi identity on all basis triples mod p."""
    check_prime(p)
    T = structure_tensor(ring, p)
    n = ring.dim
    e = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    for x, y, z in itertools.combinations(range(n), 3):
        acc = [0] * n
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            inner = T[a][b]
            outer = _bracket_vec(T, inner, e[c], p)
            acc = [s + t for s, t in zip(acc, outer)]
        acc = [s % p for s in acc]
        if any(acc):
            return JacobiReport(False, (x, y, z), tuple(acc))
    return JacobiReport(True)


def lower_central_series(ring: LieRing, p: int) -> LowerCentralSeries:
    """Dimensions of gamma_1 = L, gamma_{i+1} = [gamma_i, L] over F_p.

    For a nilpotent ring the list ends with a single 0; otherwise it ends with
    the stable nonzero dimension repeated once.
    """
    check_prime(p)
    T = structure_tensor(ring, p)
    n = ring.dim
    basis = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    dims = [n]
    while True:
        gens = []
        for v in basis:
            for j in range(n):
                w = [0] * n
                for i, a in enumerate(v):
                    if a:
                        for k, c in enumerate(T[i][j]):
                            if c:
                                w[k] += a * c
                if any(x % p for x in w):
                    gens.append(w)
        basis, _ = rref_mod(gens, p, ncols=n) if gens else ([], [])
        d = len(basis)
        dims.append(d)
        if d == 0:
            return LowerCentralSeries(tuple(dims), len(dims) - 1)
        if d == dims[-2]:
            return LowerCentralSeries(tuple(dims), None)


def bracket_raises_index(ring: LieRing) -> bool:
    """True when every ``[e_i, e_j]`` is supported on indices >= max(i, j).

    This is what the column-staged search relies on; bases refining the lower
    central series of a nilpotent ring always satisfy it.
    """
    for (i, j), terms in ring.brackets.items():
        if any(k < j for _, k in terms):
            return False
    return True


def is_graded(ring: LieRing) -> bool:
    """Whether ``ring.grading`` is a Lie grading: [L_a, L_b] lands in L_{a+b}."""
    blocks = ring.block_of()
    if blocks is None:
        return False
    nb = len(ring.grading)
    for (i, j), terms in ring.brackets.items():
        target = blocks[i] + blocks[j] + 1
        for _, k in terms:
            if target >= nb or blocks[k] != target:
                return False
    return True


# --------------------------------------------------------------------------
# free nilpotent Lie rings


def _word_bracket(a: dict, b: dict) -> dict:
    out: dict[tuple, int] = {}
    for u, x in a.items():
        for v, y in b.items():
            out[u + v] = out.get(u + v, 0) + x * y
            out[v + u] = out.get(v + u, 0) - x * y
    return {w: c for w, c in out.items() if c}


def _left_normed(seq) -> dict:
    poly = {(seq[0],): 1}
    for g in seq[1:]:
        poly = _word_bracket(poly, {(g,): 1})
    return poly


def _free_lie_dim(d: int, k: int) -> int:
    def mobius(n):
        res, m, f = 1, n, 2
        while f * f <= m:
            if m % f == 0:
                m //= f
                if m % f == 0:
                    return 0
                res = -res
            f += 1
        return -res if m > 1 else res

    return sum(mobius(k // q) * d**q for q in range(1, k + 1) if k % q == 0) // k


def _solve_rational(columns: list[dict], target: dict) -> list[int]:
    """Express ``target`` as an integer combination of ``columns`` (word polynomials)."""
    words = sorted({w for c in columns for w in c} | set(target))
    m = len(columns)
    rows = [[Fraction(c.get(w, 0)) for c in columns] + [Fraction(target.get(w, 0))] for w in words]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[m] for row in rows[r:]):
        raise ArithmeticError("element not in the span of the basis")
    sol = [Fraction(0)] * m
    for row, col in zip(rows, pivots):
        sol[col] = row[m]
    if any(x.denominator != 1 for x in sol):
        raise ArithmeticError("basis is not a Z-basis: non-integral structure constant")
    return [int(x) for x in sol]


@lru_cache(maxsize=None)
def _free_nilpotent_data(c: int, d: int):
    """Greedy lexicographic basis of left-normed commutators, degree by degree."""
    basis: list[tuple[int, ...]] = []
    polys: list[dict] = []
    degree_of: list[int] = []
    grading = []
    for k in range(1, c + 1):
        want = _free_lie_dim(d, k)
        chosen: list[dict] = []
        words_seen: list[tuple] = []
        for seq in itertools.product(range(d), repeat=k):
            if len(chosen) == want:
                break
            if k >= 2 and seq[0] >= seq[1]:
                continue
            poly = _left_normed(seq)
            if not poly:
                continue
            cand = chosen + [poly]
            words = sorted({w for q in cand for w in q})
            mat = [[q.get(w, 0) for w in words] for q in cand]
            if _rank_q(mat) == len(cand):
                chosen.append(poly)
                words_seen.append(seq)
        if len(chosen) != want:
            raise ArithmeticError(f"could not build degree-{k} basis")
        basis.extend(words_seen)
        polys.extend(chosen)
        degree_of.extend([k] * want)
        grading.append(want)
    offsets = {}
    start = 0
    for k, g in enumerate(grading, start=1):
        offsets[k] = start
        start += g
    brackets = {}
    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            deg = degree_of[i] + degree_of[j]
            if deg > c:
                continue
            prod = _word_bracket(polys[i], polys[j])
            if not prod:
                continue
            lo = offsets[deg]
            cols = polys[lo:lo + grading[deg - 1]]
            coeffs = _solve_rational(cols, prod)
            terms = tuple((x, lo + t) for t, x in enumerate(coeffs) if x)
            if terms:
                brackets[(i, j)] = terms
    return tuple(basis), brackets, tuple(grading)


def _rank_q(mat) -> int:
    m = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def free_nilpotent(c: int, d: int) -> LieRing:
    """Free nilpotent Lie ring of class ``c`` on ``d`` generators.

    Basis: left-normed commutators ``[x_{i1}, x_{i2}, ..., x_{ik}]`` chosen
    greedily in lexicographic order within each degree.
    """
    basis, brackets, grading = _free_nilpotent_data(c, d)
    return LieRing(name=f"f_{c}_{d}", dim=len(basis), brackets=brackets,
                   grading=grading, params={"c": c, "d": d})


def free_nilpotent_basis_words(c: int, d: int) -> tuple[tuple[int, ...], ...]:
    return _free_nilpotent_data(c, d)[0]


# --------------------------------------------------------------------------
# catalog


def _ring(name, dim, rels: Iterable[tuple[int, int, Iterable[tuple[int, int]]]], grading=None, **params):
    """Build from 1-based relations ``(i, j, [(coef, k), ...])`` meaning [e_i,e_j] = sum coef*e_k."""
    brackets: dict[tuple[int, int], list] = {}
    for i, j, terms in rels:
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        brackets.setdefault((i - 1, j - 1), []).extend((sign * c, k - 1) for c, k in terms)
    return LieRing(name=name, dim=dim, brackets={k: tuple(v) for k, v in brackets.items()},
                   grading=grading, params=params)


def _heisenberg():
    return _ring("heisenberg", 3, [(1, 2, [(1, 3)])], grading=(2, 1))


def _maximal_class(c):
    if c < 2:
        raise CatalogError("M_c requires c >= 2")
    # x_0, ..., x_c -> e_1, ..., e_{c+1};  [x_0, x_i] = x_{i+1}
    rels = [(1, i + 1, [(1, i + 2)]) for i in range(1, c)]
    return _ring("M", c + 1, rels, grading=(2,) + (1,) * (c - 1), c=c)


def _fil4():
    rels = [(1, 2, [(1, 3)]), (1, 3, [(1, 4)]), (1, 4, [(1, 5)]), (2, 3, [(1, 5)])]
    return _ring("fil4", 5, rels)


_FREE_SUPPORTED = "(2, d>=2), (3, 2), (4, 2), (3, 3)"


def _free(c, d):
    if not ((c == 2 and d >= 2) or (c, d) in {(3, 2), (4, 2), (3, 3)}):
        raise CatalogError(f"f_(c,d) supported for (c,d) in {_FREE_SUPPORTED}; got ({c},{d})")
    r = free_nilpotent(c, d)
    return LieRing(name="f", dim=r.dim, brackets=r.brackets, grading=r.grading, params={"c": c, "d": d})


def _grenham(n):
    if n < 2:
        raise CatalogError("G_n requires n >= 2")
    # w, x_1..x_{n-1}, y_1..y_{n-1};  [w, x_i] = y_i
    rels = [(1, 1 + i, [(1, n + i)]) for i in range(1, n)]
    return _ring("grenham", 2 * n - 1, rels, grading=(n, n - 1), n=n)


def _elliptic():
    # x_1..x_6 -> 1..6, y_1..y_3 -> 7..9
    rels = [
        (1, 5, [(1, 7)]), (2, 4, [(1, 7)]), (3, 6, [(1, 7)]),
        (1, 6, [(1, 8)]), (3, 4, [(1, 8)]),
        (1, 4, [(1, 9)]), (2, 5, [(1, 9)]),
    ]
    return _ring("L_E", 9, rels, grading=(6, 3))


def _np8():
    # x_1..x_5 -> 1..5, y_1..y_3 -> 6..8
    rels = [
        (1, 4, [(1, 6)]), (2, 5, [(1, 6)]),
        (1, 5, [(1, 7)]), (3, 4, [(2, 7)]),
        (2, 4, [(1, 8)]), (3, 5, [(1, 8)]),
    ]
    return _ring("L_np8", 8, rels, grading=(5, 3))


def _vaughan_lee(a, b):
    # x_1..x_3 -> 1..3, y_1..y_3 -> 4..6, z -> 7
    rels = [
        (1, 2, [(1, 4)]), (1, 3, [(1, 5)]), (2, 3, [(1, 6)]),
        (4, 1, [(1, 7)]),          # [[x1,x2],x1] = z
        (5, 3, [(1, 7)]),          # [[x1,x3],x3] = z
        (6, 2, [(b, 7)]),          # [[x2,x3],x2] = b z
        (6, 3, [(a, 7)]),          # [[x2,x3],x3] = a z
    ]
    return _ring("vl", 7, rels, grading=(3, 3, 1), a=a, b=b)


def _sl2():
    # e, f, h -> 1, 2, 3
    rels = [(3, 1, [(2, 1)]), (3, 2, [(-2, 2)]), (1, 2, [(1, 3)])]
    return _ring("sl2", 3, rels)


def tr_basis(n: int) -> list[tuple[int, int]]:
    """Elementary matrices E_ij (i <= j), diagonal first, then each superdiagonal."""
    return [(i, i + s) for s in range(n) for i in range(n - s)]


def _upper_triangular(n):
    if not 1 <= n <= 4:
        raise CatalogError("tr_n supported for 1 <= n <= 4")
    basis = tr_basis(n)
    pos = {e: k + 1 for k, e in enumerate(basis)}
    rels = []
    for (a, (i, j)), (b, (k, l)) in itertools.combinations(enumerate(basis, start=1), 2):
        terms = []
        if j == k:
            terms.append((1, pos[(i, l)]))
        if l == i:
            terms.append((-1, pos[(k, j)]))
        if terms:
            rels.append((a, b, terms))
    return _ring("tr", len(basis), rels, n=n)


def _central_heisenberg(m):
    if m < 1:
        raise CatalogError("H_m requires m >= 1")
    # x_1..x_m, y_1..y_m, w -> 1..2m+1;  [x_i, y_i] = w
    rels = [(i, m + i, [(1, 2 * m + 1)]) for i in range(1, m + 1)]
    return _ring("H_m", 2 * m + 1, rels, grading=(2 * m, 1), m=m)


def _g53():
    rels = [(1, 2, [(1, 4)]), (1, 4, [(1, 5)]), (2, 3, [(1, 5)])]
    return _ring("g53", 5, rels)


def _g64():
    # x_1..x_4, y_1, y_2
    rels = [(1, 2, [(1, 5)]), (1, 3, [(1, 6)]), (2, 4, [(1, 6)])]
    return _ring("g64", 6, rels, grading=(4, 2))


def _abelian(n):
    if n < 1:
        raise CatalogError("abelian ring requires n >= 1")
    return _ring("abelian", n, [], n=n)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    aliases: tuple[str, ...]
    params: tuple[str, ...]
    ranges: str
    builder: object
    defaults: Mapping[str, int]
    description: str


_CATALOG = [
    CatalogEntry("heisenberg", ("H", "h", "f22"), (), "", _heisenberg, {}, "[x1,x2]=x3"),
    CatalogEntry("M", ("M_c", "Mc", "maximal_class"), ("c",), "c>=2", _maximal_class, {"c": 3},
                 "maximal class: [x0,xi]=x(i+1)"),
    CatalogEntry("fil4", ("Fil4",), (), "", _fil4, {}, "filiform: [x1,x2]=x3,[x1,x3]=x4,[x1,x4]=[x2,x3]=x5"),
    CatalogEntry("f", ("f_c_d", "free"), ("c", "d"), _FREE_SUPPORTED, _free, {"c": 3, "d": 2},
                 "free nilpotent of class c on d generators"),
    CatalogEntry("grenham", ("G", "G_n", "Grenham"), ("n",), "n>=2", _grenham, {"n": 3}, "[w,xi]=yi"),
    CatalogEntry("L_E", ("LE", "elliptic"), (), "", _elliptic, {}, "class 2, counts track y^2=x^3-x"),
    CatalogEntry("L_np8", ("Lnp8", "np8"), (), "", _np8, {}, "class 2, counts track x^3=2, non-PORC"),
    CatalogEntry("vl", ("L_pab", "vaughan_lee"), ("a", "b"), "a,b integers", _vaughan_lee, {"a": 1, "b": 1},
                 "class-3 ring L_(p,a,b), p>3"),
    CatalogEntry("sl2", ("sl_2",), (), "", _sl2, {}, "[h,e]=2e,[h,f]=-2f,[e,f]=h"),
    CatalogEntry("tr", ("tr_n",), ("n",), "1<=n<=4", _upper_triangular, {"n": 2}, "upper triangular n x n"),
    CatalogEntry("H_m", ("Hm", "central_heisenberg"), ("m",), "m>=1", _central_heisenberg, {"m": 2},
                 "central product of m Heisenberg rings"),
    CatalogEntry("g53", ("g_5_3",), (), "", _g53, {}, "[x1,x2]=x4,[x1,x4]=[x2,x3]=x5"),
    CatalogEntry("g64", ("g_6_4",), (), "", _g64, {}, "[x1,x2]=y1,[x1,x3]=[x2,x4]=y2"),
    CatalogEntry("abelian", ("Fn",), ("n",), "n>=1", _abelian, {"n": 2}, "abelian F^n"),
]

_BY_NAME = {}
for _e in _CATALOG:
    for _nm in (_e.name,) + _e.aliases:
        _BY_NAME[_nm.lower()] = _e


def catalog_entries() -> list[CatalogEntry]:
    return list(_CATALOG)


def catalog(name: str, **params: int) -> LieRing:
    """Construct a named ring from the catalog, e.g. ``catalog("f", c=3, d=2)``."""
    entry = _BY_NAME.get(name.lower())
    if entry is None:
        raise CatalogError(f"unknown ring {name!r}")
    unknown = set(params) - set(entry.params)
    if unknown:
        raise CatalogError(f"{entry.name}: unexpected parameter(s) {sorted(unknown)}")
    missing = [k for k in entry.params if k not in params]
    if missing:
        raise CatalogError(f"{entry.name}: missing parameter(s) {missing}")
    args = []
    for k in entry.params:
        v = params[k]
        if not isinstance(v, int) or isinstance(v, bool):
            raise CatalogError(f"{entry.name}: parameter {k} must be an integer")
        args.append(v)
    return entry.builder(*args)
