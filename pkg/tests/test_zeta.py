from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fpzeta.enumeration import count_all_subspaces
from fpzeta.ffield import primes_in_range
from fpzeta.zeta import (
    CLOSED_FORMS, DomainError, InsufficientSamples, ZetaPoly, abelian_zeta, closed_form, cubic_case_table,
    cubic_root_count, elliptic_point_count, fit_coefficient, gaussian_binomial, lagrange_coefficients,
    staircase, uniformity_report,
)

from oracles import gaussian_binomial_by_count


@pytest.mark.parametrize("n,k,p,want", [(5, 0, 7, 1), (2, 1, 3, 4), (4, 2, 2, 35), (3, 4, 2, 0)])
def test_gaussian_binomial_examples(n, k, p, want):
    assert gaussian_binomial(n, k, p) == want


@pytest.mark.parametrize("n,k,p", [(4, 2, 2), (3, 1, 3), (4, 1, 3), (5, 2, 2)])
def test_gaussian_binomial_counts_subspaces(n, k, p):
    assert gaussian_binomial(n, k, p) == gaussian_binomial_by_count(n, k, p)


def test_gaussian_binomial_symmetry():
    for p in (2, 3, 5):
        for n in range(9):
            for k in range(n + 1):
                assert gaussian_binomial(n, k, p) == gaussian_binomial(n, n - k, p)


def test_abelian_zeta():
    assert list(abelian_zeta(1, 11)) == [1, 1]
    assert list(abelian_zeta(2, 2)) == [1, 3, 1]
    assert list(abelian_zeta(3, 2)) == [1, 7, 7, 1]
    for n in range(1, 7):
        for p in (2, 3, 5):
            assert abelian_zeta(n, p).total() == count_all_subspaces(n, p)


def test_zeta_poly_text_and_eval():
    z = ZetaPoly(3, "ideal", [1, 4, 1, 1])
    assert z.text() == "1 + (4)t + (1)t^2 + (1)t^3"
    assert z.evaluate(1) == 7 and z.evaluate(Fraction(1, 3)) == Fraction(1) + Fraction(4, 3) + Fraction(1, 9) + Fraction(1, 27)
    with pytest.raises(ValueError):
        ZetaPoly(3, "nope", [1])


@pytest.mark.parametrize("name,params,p,want", [
    ("Mc_ideal", {"c": 4}, 5, [1, 6, 1, 1, 1, 1]),
    ("sl2_sub", {}, 5, [1, 6, 31, 1]),
    ("trn_ideal", {"n": 2}, 3, [1, 4, 2, 1]),
    ("Mc_sub", {"c": 3}, 2, [1, 3, 11, 15, 1]),
    ("H_ideal", {}, 3, [1, 4, 1, 1]),
    ("H_sub", {}, 3, [1, 4, 13, 1]),
    ("fc2_ideal", {"c": 3}, 2, [1, 3, 1, 1, 3, 1]),
    ("f2d_ideal", {"d": 3}, 2, [1, 7, 7, 15, 7, 7, 1]),
    ("trn_ideal", {"n": 1}, 7, [1, 1]),
    ("g53_ideal", {}, 2, [1, 7, 7, 3, 1, 1]),
    ("graded_Mc", {"c": 4}, 3, [1, 4, 1, 1, 1, 1]),
])
def test_closed_form_examples(name, params, p, want):
    assert list(closed_form(name, p, **params)) == want


def test_mc_sub_recursion_consistent_with_c3_form():
    for p in (2, 3, 5, 7):
        # one step of the recursion, starting from c = 2
        c = 3
        terms = [0] * (c + 2)
        for k, v in enumerate([1, 1 + p, 1 + p + p * p, 1]):
            terms[k] += v
        for a in range(c):
            terms[a + 2] += gaussian_binomial(c - 1, a, p) * p ** (c - 1 - a)
        terms[c] += p ** c
        assert terms == list(closed_form("Mc_sub", p, c=3))


@pytest.mark.parametrize("name,p,params", [
    ("Lnp8_ideal", 2, {}), ("vl_ideal", 3, {"a": 1, "b": 1}), ("sl2_sub", 3, {}), ("trn_ideal", 5, {"n": 5}),
    ("graded_Mc", 5, {"c": 6}), ("fc2_ideal", 5, {"c": 5}),
])
def test_closed_form_domain_errors(name, p, params):
    with pytest.raises(DomainError):
        closed_form(name, p, **params)


def test_sl2_override_and_unknown_names():
    assert list(closed_form("sl2_sub", 2, allow_small_primes=True)) == [1, 3, 7, 1]
    with pytest.raises(KeyError):
        closed_form("nope", 5)
    with pytest.raises(TypeError):
        closed_form("H_ideal", 5, c=3)
    with pytest.raises(ValueError):
        closed_form("H_ideal", 4)


def test_every_closed_form_has_unit_boundary():
    sample = {"c": 3, "n": 3, "d": 3, "m": 2, "a": 1, "b": 1}
    for name, cf in CLOSED_FORMS.items():
        z = closed_form(name, 5, **{k: sample[k] for k in cf.params})
        assert z[0] == 1 and z[-1] == 1


def test_staircase():
    assert [staircase(i) for i in range(1, 11)] == [2, 3, 3, 4, 4, 4, 5, 5, 5, 5]


def _projective_count(p):
    pts = set()
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if (x, y, z) == (0, 0, 0):
                    continue
                if (y * y * z - x ** 3 + x * z * z) % p == 0:
                    # normalise: first nonzero coordinate = 1
                    lead = next(c for c in (x, y, z) if c)
                    inv = pow(lead, -1, p)
                    pts.add((x * inv % p, y * inv % p, z * inv % p))
    return len(pts)


def test_elliptic_point_count():
    assert elliptic_point_count(3) == 4
    assert elliptic_point_count(5) == 8
    for p in primes_in_range(2, 40):
        assert elliptic_point_count(p) == _projective_count(p)
    for p in primes_in_range(2, 100):
        n = elliptic_point_count(p)
        assert n >= 1 and (n - (p + 1)) ** 2 <= 4 * p


def test_cubic_roots():
    assert cubic_root_count(5) == 1 and cubic_root_count(7) == 0 and cubic_root_count(31) == 3
    assert cubic_root_count(3) == 1
    for p in primes_in_range(2, 200):
        if p != 3:
            assert cubic_root_count(p) == cubic_case_table(p), p
    with pytest.raises(DomainError):
        cubic_case_table(3)


def test_lagrange_exact():
    assert lagrange_coefficients([2, 3, 5], [3, 4, 6]) == (1, 1)
    assert lagrange_coefficients([2, 3], [7, 7]) == (7,)


def test_fit_heisenberg_coefficient():
    samples = [(p, closed_form("H_ideal", p)[1]) for p in (2, 3, 5, 7, 11)]
    fit = fit_coefficient(samples, 2)
    assert fit.verdict == "polynomial" and fit.fits[0] == (1, 1) and fit.describe() == "1 + p"


def test_fit_constant():
    fit = fit_coefficient([(p, 5) for p in (2, 3, 5)], 0)
    assert fit.polynomial and fit.degree == 0


def test_fit_insufficient_samples():
    with pytest.raises(InsufficientSamples):
        fit_coefficient([(2, 1), (3, 1)], 1)
    with pytest.raises(InsufficientSamples):
        fit_coefficient([(p, 1) for p in (5, 7, 11, 13)], 1, modulus=3)
    with pytest.raises(ValueError):
        fit_coefficient([(2, 1), (2, 1), (3, 1)], 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=7))
def test_fit_recovers_generating_polynomial(coeffs):
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    primes = primes_in_range(2, 60)[:10]
    samples = [(p, sum(c * p ** k for k, c in enumerate(coeffs))) for p in primes]
    fit = fit_coefficient(samples, 6)
    assert fit.polynomial
    got = list(fit.fits[0])
    if coeffs == [0]:
        assert all(c == 0 for c in got)
    else:
        assert got == [Fraction(c) for c in coeffs]


def test_le_t5_not_polynomial():
    primes = primes_in_range(5, 97)
    assert len(primes) >= 15
    samples = [(p, closed_form("LE_ideal", p)[5]) for p in primes]
    assert fit_coefficient(samples, 6).verdict == "non-polynomial"


def test_np8_t3_not_porc():
    primes = primes_in_range(5, 97)
    samples = [(p, closed_form("Lnp8_ideal", p)[3]) for p in primes]
    fit = fit_coefficient(samples, 6, modulus=3)
    assert fit.verdict == "non-PORC"
    assert fit.fits[2] is not None and fit.fits[1] is None


def test_uniformity_report_shape():
    polys = [closed_form("H_ideal", p) for p in (2, 3, 5, 7, 11)]
    rep = uniformity_report("heisenberg", {}, "ideal", polys, 2)
    d = rep.to_dict()
    assert rep.uniform and d["verdict"] == "polynomial" and d["flagged"] == []
    assert [c["degree"] for c in d["coefficients"]] == [0, 1, 0, 0]
