"""Zeta polynomials over F_p, closed-form evaluators, point counts and PORC fits.

A zeta polynomial of an n-dimensional F_p-algebra is stored as its coefficient
vector in ``t = p^{-s}``: entry ``k`` counts the qualifying subspaces of
codimension ``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .ffield import check_prime, is_prime

__all__ = [
    "FLAVORS",
    "ZetaPoly",
    "DomainError",
    "InsufficientSamples",
    "gaussian_binomial",
    "abelian_zeta",
    "closed_form",
    "CLOSED_FORMS",
    "elliptic_point_count",
    "cubic_root_count",
    "cubic_case_table",
    "lagrange_coefficients",
    "CoefficientFit",
    "UniformityReport",
    "fit_coefficient",
    "uniformity_report",
]

FLAVORS = ("sub", "ideal", "graded-ideal")


class DomainError(ValueError):
    """A closed form was evaluated outside the primes it is stated for."""


class InsufficientSamples(ValueError):
    pass


@dataclass(frozen=True)
class ZetaPoly:
    p: int
    flavor: str
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def total(self) -> int:
        return sum(self.coefficients)

    def text(self) -> str:
        """Render as ``1 + (4)t + (1)t^2 + (1)t^3``."""
        parts = [str(self.coefficients[0])]
        for k, c in enumerate(self.coefficients[1:], start=1):
            parts.append(f"({c})t" if k == 1 else f"({c})t^{k}")
        return " + ".join(parts)

    def __str__(self):
        return self.text()


# --------------------------------------------------------------------------
# polynomial helpers on coefficient lists


def _add(*polys: Sequence[int]) -> list[int]:
    n = max(len(q) for q in polys)
    out = [0] * n
    for q in polys:
        for k, c in enumerate(q):
            out[k] += c
    return out


def _shift(q: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(q)


def _scale(q: Sequence[int], a: int) -> list[int]:
    return [a * c for c in q]


def _mono(c: int, k: int) -> list[int]:
    return _shift([c], k)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n (0 when k > n)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= 1 - p ** (n - i)
        den *= 1 - p ** (i + 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def _abelian(n: int, p: int) -> list[int]:
    return [gaussian_binomial(n, k, p) for k in range(n + 1)]


def abelian_zeta(n: int, p: int, flavor: str = "ideal") -> ZetaPoly:
    check_prime(p)
    return ZetaPoly(p, flavor, _abelian(n, p))


# --------------------------------------------------------------------------
# auxiliary point counts


def elliptic_point_count(p: int) -> int:
    """|E(F_p)| for E: y^2 z = x^3 - x z^2, by scanning P^2(F_p)."""
    check_prime(p)
    count = 0
    # z = 1: affine points
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    for x in range(p):
        count += squares[(x * x * x - x) % p]
    # z = 0: y^2*0 = x^3 -> x = 0, point (0:1:0)
    count += 1
    return count


def cubic_root_count(p: int) -> int:
    """Number of x in F_p with x^3 = 2."""
    check_prime(p)
    return sum(1 for x in range(p) if (x * x * x - 2) % p == 0)


def cubic_case_table(p: int) -> int:
    """Predicted root count of x^3 - 2 from the residue-class description (p != 3)."""
    if p % 3 == 2:
        return 1
    if p % 3 == 1:
        b = 1
        while 27 * b * b < p:
            a2 = p - 27 * b * b
            if math.isqrt(a2) ** 2 == a2:
                return 3
            b += 1
        return 0
    raise DomainError("case table does not cover p = 3")


# --------------------------------------------------------------------------
# closed forms


def _heis_ideal(p):
    return [1, 1 + p, 1, 1]


def _heis_sub(p):
    return [1, 1 + p, 1 + p + p * p, 1]


def _mc_ideal(p, c):
    if c < 2:
        raise DomainError("M_c needs c >= 2")
    return [1, 1 + p] + [1] * c


def _mc_sub(p, c):
    if c < 2:
        raise DomainError("M_c needs c >= 2")
    if c == 2:
        return _heis_sub(p)
    if c == 3:
        return [1, 1 + p, 1 + p + 2 * p * p, 1 + p + p**2 + p**3, 1]
    terms = [_mc_sub(p, c - 1)]
    for a in range(c):
        terms.append(_mono(gaussian_binomial(c - 1, a, p) * p ** (c - 1 - a), a + 2))
    terms.append(_mono(p**c, c))
    out = _add(*terms)
    return out + [0] * (c + 2 - len(out))


def _fc2_ideal(p, c):
    base = _heis_ideal(p)
    if c == 2:
        return base
    f32 = _add(base, _mono(1 + p, 4), _mono(1, 5))
    if c == 3:
        return f32
    if c == 4:
        q = 1 + p + p * p
        return _add(f32, _mono(p + p * p, 5), _mono(q, 6), _mono(q, 7), _mono(1, 8))
    raise DomainError("f_(c,2) closed form known for c in {2,3,4}")


def _grenham_ideal(p, n):
    if n < 2:
        raise DomainError("G_n needs n >= 2")
    terms = [_abelian(n, p), _mono(1, 2 * n - 1)]
    for i in range(1, n - 1):
        outer = gaussian_binomial(n - 1, i, p)
        r = n - (i + 1)
        for k in range(r + 1):
            terms.append(_mono(outer * gaussian_binomial(r, k, p) * p ** (i * k), 2 * i + 1 + r - k))
    return _add(*terms)


def staircase(i: int) -> int:
    """pi(i) = k for C(k-1, 2) < i <= C(k, 2)."""
    k = 2
    while k * (k - 1) // 2 < i:
        k += 1
    return k


def _f2d_ideal(p, d):
    if d < 2:
        raise DomainError("f_(2,d) needs d >= 2")
    dd = d * (d - 1) // 2
    terms = [_abelian(d, p), _mono(1, d + dd)]
    for i in range(1, dd):
        pi = staircase(i)
        outer = gaussian_binomial(dd, i, p)
        r = d - pi
        for k in range(r + 1):
            terms.append(_mono(outer * gaussian_binomial(r, k, p) * p ** (i * k), i + pi + r - k))
    return _add(*terms)


def _le_ideal(p):
    E = elliptic_point_count(p)
    return _add(_abelian(6, p), _mono(p * p * E, 5), _mono(E * (p + p * p), 6),
                _mono(gaussian_binomial(3, 1, p), 7), _mono(gaussian_binomial(3, 2, p), 8), _mono(1, 9))


def _np8_ideal(p):
    if p < 3:
        raise DomainError("L_np8 closed form requires p >= 3")
    N = cubic_root_count(p)
    b31 = gaussian_binomial(3, 1, p)
    return _add(_abelian(5, p), _mono(p**3 * N, 3), _mono(p * p * b31 * N, 4),
                _mono(p * (1 + 2 * p + p * p * (1 + N)), 5), _mono(1 + p + p * p * (1 + N), 6),
                _mono(b31, 7), _mono(1, 8))


def _vl_ideal(p, a, b):
    if p <= 3:
        raise DomainError("L_(p,a,b) closed form requires p > 3")
    q = 1 + p + p * p
    head = [1, q, q, q + p**3, q, q]
    if b % p:
        return head + [1, 1]
    return head + [1 + p, 1]


def _sl2_sub(p, allow_small_primes=False):
    if p < 5 and not allow_small_primes:
        raise DomainError("sl2 closed form is stated for p >= 5 (pass allow_small_primes=True to override)")
    return [1, 1 + p, 1 + p + p * p, 1]


def _hm_ideal(p, m):
    if m < 1:
        raise DomainError("H_m needs m >= 1")
    return _add(_abelian(2 * m, p), _mono(1, 2 * m + 1))


def _g53_ideal(p):
    return _add(_abelian(3, p), _mono(p, 3), _mono(1, 4), _mono(1, 5))


def _g64_ideal(p):
    return [1, 1 + p + p**2 + p**3, 1 + p + 2 * p**2 + p**3 + p**4, 1 + p + 2 * p**2 + p**3,
            1 + p + p**2, 1 + p, 1]


def _trn_ideal(p, n):
    if n == 1:
        return [1, 1]
    if n == 2:
        return [1, 1 + p, 2, 1]
    if n == 3:
        return [1, 1 + p + p**2, 3 + p + p**2, 3 + 2 * p, 3, 2, 1]
    if n == 4:
        return [1, 1 + p + p**2 + p**3, 4 + p + 2 * p**2 + p**3 + p**4, 4 + 4 * p + 4 * p**2 + p**3,
                7 + 3 * p + 3 * p**2, 8 + 3 * p, 6 + 2 * p, 5, 3, 2, 1]
    raise DomainError("tr_n closed form known for 1 <= n <= 4")


def _graded_mc(p, c):
    if not 2 <= c <= 5:
        raise DomainError("graded M_c rows available for 2 <= c <= 5")
    return _add(_abelian(2, p), *(_mono(1, k) for k in range(3, c + 2)))


@dataclass(frozen=True)
class ClosedForm:
    name: str
    flavor: str
    params: tuple[str, ...]
    fn: object
    ring: str
    description: str


CLOSED_FORMS = {
    cf.name: cf
    for cf in [
        ClosedForm("H_ideal", "ideal", (), _heis_ideal, "heisenberg", "1+(1+p)t+t^2+t^3"),
        ClosedForm("H_sub", "sub", (), _heis_sub, "heisenberg", "1+(1+p)t+(1+p+p^2)t^2+t^3"),
        ClosedForm("Mc_ideal", "ideal", ("c",), _mc_ideal, "M", "1+(1+p)t+sum_{k=2}^{c+1} t^k"),
        ClosedForm("Mc_sub", "sub", ("c",), _mc_sub, "M", "recursive in c"),
        ClosedForm("fil4_ideal", "ideal", (), lambda p: _mc_ideal(p, 4), "fil4", "equal to M_4"),
        ClosedForm("fc2_ideal", "ideal", ("c",), _fc2_ideal, "f", "f_(c,2), c in {2,3,4}"),
        ClosedForm("grenham_ideal", "ideal", ("n",), _grenham_ideal, "grenham", "class-2 formula"),
        ClosedForm("f2d_ideal", "ideal", ("d",), _f2d_ideal, "f", "staircase formula"),
        ClosedForm("LE_ideal", "ideal", (), _le_ideal, "L_E", "with |E(F_p)|"),
        ClosedForm("Lnp8_ideal", "ideal", (), _np8_ideal, "L_np8", "with |N(F_p)|, p >= 3"),
        ClosedForm("vl_ideal", "ideal", ("a", "b"), _vl_ideal, "vl", "cases b != 0 and b = 0, p > 3"),
        ClosedForm("sl2_sub", "sub", (), _sl2_sub, "sl2", "1+(1+p)t+(1+p+p^2)t^2+t^3, p >= 5"),
        ClosedForm("Hm_ideal", "ideal", ("m",), _hm_ideal, "H_m", "zeta_{F^2m} + t^(2m+1)"),
        ClosedForm("g53_ideal", "ideal", (), _g53_ideal, "g53", "zeta_{F^3}+pt^3+t^4+t^5"),
        ClosedForm("g64_ideal", "ideal", (), _g64_ideal, "g64", "explicit"),
        ClosedForm("trn_ideal", "ideal", ("n",), _trn_ideal, "tr", "n <= 4"),
        ClosedForm("graded_Mc", "graded-ideal", ("c",), _graded_mc, "M",
                   "zeta_{F^2}+t^3+...+t^(c+1), 2 <= c <= 5"),
    ]
}


def closed_form(name: str, p: int, **params) -> ZetaPoly:
    """Evaluate a closed-form zeta polynomial at the prime ``p``."""
    check_prime(p)
    cf = CLOSED_FORMS.get(name)
    if cf is None:
        raise KeyError(f"unknown closed form {name!r}")
    extra = {k: v for k, v in params.items() if k not in cf.params}
    if name == "sl2_sub" and "allow_small_primes" in extra:
        coeffs = _sl2_sub(p, extra.pop("allow_small_primes"))
    else:
        coeffs = None
    if extra:
        raise TypeError(f"{name}: unexpected parameters {sorted(extra)}")
    if coeffs is None:
        coeffs = cf.fn(p, *(params[k] for k in cf.params))
    return ZetaPoly(p, cf.flavor, coeffs)


# --------------------------------------------------------------------------
# exact interpolation and uniformity verdicts


def lagrange_coefficients(xs: Sequence[int], ys: Sequence[int]) -> tuple[Fraction, ...]:
    """Monomial coefficients (low to high) of the interpolating polynomial, exactly."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _eval(coeffs: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _format_poly(coeffs: Sequence[Fraction], var: str = "p") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c == 1:
            parts.append(mono)
        elif mono:
            parts.append(f"{c}*{mono}")
        else:
            parts.append(str(c))
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CoefficientFit:
    """Outcome of fitting one coefficient sequence over sampled primes.

    ``fits`` maps each residue class (all primes share class 0 when no
    modulus is given) to the fitted coefficients, or ``None`` when the fit
    through the first ``degree_bound + 1`` samples fails on a held-out prime.
    """

    index: int | None
    degree_bound: int
    modulus: int | None
    fits: dict[int, tuple[Fraction, ...] | None]
    samples: tuple[tuple[int, int], ...] = field(repr=False, default=())

    @property
    def polynomial(self) -> bool:
        return all(f is not None for f in self.fits.values())

    @property
    def verdict(self) -> str:
        if self.modulus is None:
            return "polynomial" if self.polynomial else "non-polynomial"
        return "PORC" if self.polynomial else "non-PORC"

    @property
    def degree(self) -> int | None:
        if not self.polynomial:
            return None
        return max(len(f) - 1 for f in self.fits.values())

    def describe(self) -> str:
        if self.modulus is None:
            f = self.fits[0]
            if f is None:
                return f"non-polynomial up to degree {self.degree_bound} on the sampled primes"
            return _format_poly(f)
        pieces = []
        for r, f in sorted(self.fits.items()):
            desc = _format_poly(f) if f is not None else f"non-polynomial up to degree {self.degree_bound}"
            pieces.append(f"p = {r} mod {self.modulus}: {desc}")
        return "; ".join(pieces)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "verdict": self.verdict,
            "degree_bound": self.degree_bound,
            "modulus": self.modulus,
            "degree": self.degree,
            "classes": {
                str(r): (None if f is None else [str(c) for c in f]) for r, f in sorted(self.fits.items())
            },
            "description": self.describe(),
        }


def fit_coefficient(samples: Iterable[tuple[int, int]], degree: int, modulus: int | None = None,
                    index: int | None = None) -> CoefficientFit:
    """Fit ``value = f(p)`` exactly, optionally separately on each class ``p mod modulus``.

    Each class needs at least ``degree + 2`` samples: ``degree + 1`` to
    interpolate and at least one held out to confirm.
    """
    samples = sorted((int(p), int(v)) for p, v in samples)
    ps = [p for p, _ in samples]
    if len(set(ps)) != len(ps):
        raise ValueError("sampled primes must be distinct")
    if degree < 0:
        raise ValueError("degree bound must be nonnegative")
    if modulus is not None and modulus < 1:
        raise ValueError("modulus must be positive")
    classes: dict[int, list[tuple[int, int]]] = {}
    for p, v in samples:
        r = p % modulus if modulus else 0
        classes.setdefault(r, []).append((p, v))
    if not classes:
        raise InsufficientSamples("no samples")
    fits = {}
    for r, pts in sorted(classes.items()):
        if len(pts) < degree + 2:
            where = f" in class {r} mod {modulus}" if modulus else ""
            raise InsufficientSamples(f"need at least {degree + 2} samples{where}, got {len(pts)}")
        head = pts[: degree + 1]
        coeffs = lagrange_coefficients([p for p, _ in head], [v for _, v in head])
        ok = all(_eval(coeffs, p) == v for p, v in pts)
        fits[r] = coeffs if ok else None
    return CoefficientFit(index, degree, modulus, fits, tuple(samples))


@dataclass(frozen=True)
class UniformityReport:
    ring: str
    params: dict
    flavor: str
    primes: tuple[int, ...]
    degree_bound: int
    modulus: int | None
    coefficients: tuple[CoefficientFit, ...]
    values: dict = field(default_factory=dict)

    @property
    def uniform(self) -> bool:
        return all(c.polynomial for c in self.coefficients)

    def flagged(self) -> list[int]:
        return [c.index for c in self.coefficients if not c.polynomial]

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "params": dict(sorted(self.params.items())),
            "flavor": self.flavor,
            "primes": list(self.primes),
            "degree_bound": self.degree_bound,
            "modulus": self.modulus,
            "verdict": ("polynomial" if self.modulus is None else "PORC") if self.uniform
            else ("non-polynomial" if self.modulus is None else "non-PORC"),
            "flagged": self.flagged(),
            "coefficients": [c.to_dict() for c in self.coefficients],
            "values": {str(p): list(v) for p, v in sorted(self.values.items())},
        }


def uniformity_report(ring: str, params: dict, flavor: str, polys: Sequence[ZetaPoly], degree: int,
                      modulus: int | None = None) -> UniformityReport:
    """Fit every coefficient of a family of zeta polynomials across primes."""
    polys = sorted(polys, key=lambda z: z.p)
    if not polys:
        raise InsufficientSamples("no primes")
    lengths = {len(z) for z in polys}
    if len(lengths) != 1:
        raise ValueError("zeta polynomials have different degrees")
    for z in polys:
        if not is_prime(z.p):
            raise ValueError(f"{z.p} is not prime")
    fits = []
    for k in range(lengths.pop()):
        fits.append(fit_coefficient([(z.p, z.coefficients[k]) for z in polys], degree, modulus, index=k))
    return UniformityReport(ring, dict(params), flavor, tuple(z.p for z in polys), degree, modulus,
                            tuple(fits), {z.p: z.coefficients for z in polys})
