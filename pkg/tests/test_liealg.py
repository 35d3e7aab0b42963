import pytest

from fpzeta.liealg import (
    CatalogError, LieRing, ParseError, adjoint_matrices, bracket_raises_index, catalog, catalog_entries,
    dump_presentation, free_nilpotent_basis_words, is_graded, load_ring, lower_central_series,
    parse_presentation, validate,
)

PRIMES = [2, 3, 5, 7, 11]

CATALOG_RINGS = [
    ("heisenberg", {}), ("M", {"c": 2}), ("M", {"c": 3}), ("M", {"c": 4}), ("M", {"c": 5}), ("fil4", {}),
    ("f", {"c": 2, "d": 2}), ("f", {"c": 2, "d": 3}), ("f", {"c": 2, "d": 4}), ("f", {"c": 3, "d": 2}),
    ("f", {"c": 4, "d": 2}), ("f", {"c": 3, "d": 3}), ("grenham", {"n": 2}), ("grenham", {"n": 4}),
    ("L_E", {}), ("L_np8", {}), ("vl", {"a": 1, "b": 1}), ("vl", {"a": 0, "b": 0}), ("sl2", {}),
    ("tr", {"n": 1}), ("tr", {"n": 2}), ("tr", {"n": 3}), ("tr", {"n": 4}), ("H_m", {"m": 1}),
    ("H_m", {"m": 3}), ("g53", {}), ("g64", {}), ("abelian", {"n": 3}),
]


def test_parse_heisenberg():
    r = parse_presentation("dim 3\nbracket 1 2 = 1*3\n")
    assert r.dim == 3 and r.bracket(0, 1) == {2: 1} and r.bracket(1, 0) == {2: -1}
    assert r.bracket(0, 2) == {}


def test_parse_abelian_and_comments():
    r = parse_presentation("# nothing\ndim 2   # two\n")
    assert r.dim == 2 and r.brackets == {}


def test_parse_full_grammar_roundtrip():
    text = "name demo\ndim 4\ngrading 2 1 1\nbracket 1 2 = 1*3\nbracket 1 3 = 2*4 - 1*4 + 3*4\n"
    r = parse_presentation(text)
    assert r.name == "demo" and r.grading == (2, 1, 1)
    assert r.bracket(0, 2) == {3: 4}
    assert parse_presentation(dump_presentation(r)) == r


@pytest.mark.parametrize("text,line", [
    ("dim 3\nbracket 1 2 =\n", 2),
    ("dim 3\nbracket 1 2 = 1*3\nbracket 1 2 = 1*3\n", 3),
    ("dim 3\nbracket 2 1 = 1*3\n", 2),
    ("dim 3\nbracket 1 2 = 1*4\n", 2),
    ("dim 3\nbracket 1 5 = 1*3\n", 2),
    ("dim 3\nfrobnicate\n", 2),
    ("dim 0\n", 1),
    ("dim 3\ngrading 1 1\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_presentation(text)
    assert exc.value.line == line


def test_missing_dim():
    with pytest.raises(ParseError):
        parse_presentation("bracket 1 2 = 1*3\n")


def test_load_ring(tmp_path):
    f = tmp_path / "h.ring"
    f.write_text("name myH\ndim 3\nbracket 1 2 = 1*3\n")
    assert load_ring(f) == catalog("heisenberg").__class__("myH", 3, {(0, 1): ((1, 2),)})


@pytest.mark.parametrize("name,params", CATALOG_RINGS)
@pytest.mark.parametrize("p", PRIMES)
def test_catalog_rings_satisfy_jacobi(name, params, p):
    assert validate(catalog(name, **params), p).ok


def test_validate_reports_violation():
    # [e1,e3] = e3 instead of a multiple of e2 breaks Jacobi on (e1, e2, e3)
    bad = LieRing("bad", 3, {(0, 1): ((1, 2),), (0, 2): ((1, 2),), (1, 2): ((1, 0),)})
    rep = validate(bad, 5)
    assert not rep.ok and rep.triple == (0, 1, 2) and any(rep.residual)


def test_adjoint_examples():
    C = adjoint_matrices(catalog("heisenberg"), 5)
    assert C[1].matrix[0] == (0, 0, 1)
    assert all(not any(r) for r in C[2].matrix)
    for j in range(3):
        assert C[j].matrix[j] == (0, 0, 0)
    M3 = adjoint_matrices(catalog("M", c=3), 2)
    assert M3[0].matrix[1] == (0, 0, 1, 0) and M3[0].matrix[2] == (0, 0, 0, 1)
    assert all(not any(r) for C_ in adjoint_matrices(catalog("abelian", n=3), 7) for r in C_.matrix)


@pytest.mark.parametrize("name,params", CATALOG_RINGS)
def test_adjoint_antisymmetry(name, params):
    p = 7
    C = adjoint_matrices(catalog(name, **params), p)
    n = len(C)
    for i in range(n):
        for j in range(n):
            assert C[j].matrix[i] == tuple(-x % p for x in C[i].matrix[j])


def test_lower_central_series_examples():
    assert lower_central_series(catalog("heisenberg"), 3).dims == (3, 1, 0)
    assert lower_central_series(catalog("heisenberg"), 3).nilpotency_class == 2
    assert lower_central_series(catalog("abelian", n=4), 5).nilpotency_class == 1
    tr2 = lower_central_series(catalog("tr", n=2), 5)
    assert not tr2.nilpotent and tr2.nilpotency_class is None
    assert not lower_central_series(catalog("sl2"), 5).nilpotent


@pytest.mark.parametrize("c", [2, 3, 4, 5, 6])
def test_maximal_class_series(c):
    lcs = lower_central_series(catalog("M", c=c), 5)
    assert lcs.nilpotency_class == c
    assert lcs.dims == (c + 1,) + tuple(range(c - 1, -1, -1))


@pytest.mark.parametrize("name,params", [rp for rp in CATALOG_RINGS if rp[0] not in ("sl2", "tr")])
def test_nilpotent_catalog_bases_raise_index(name, params):
    assert bracket_raises_index(catalog(name, **params))


@pytest.mark.parametrize("name,params", [rp for rp in CATALOG_RINGS])
def test_gradings_are_lie_gradings(name, params):
    r = catalog(name, **params)
    if r.grading is not None:
        assert is_graded(r)


def test_free_nilpotent_dimensions():
    f32 = catalog("f", c=3, d=2)
    assert f32.dim == 5 and f32.grading == (2, 1, 2)
    f42 = catalog("f", c=4, d=2)
    assert f42.dim == 8 and f42.grading == (2, 1, 2, 3)
    assert catalog("f", c=3, d=3).grading == (3, 3, 8)
    assert catalog("f", c=2, d=4).grading == (4, 6)
    assert free_nilpotent_basis_words(3, 2) == ((0,), (1,), (0, 1), (0, 1, 0), (0, 1, 1))


def test_free_nilpotent_class_and_derived():
    for c, d in [(2, 3), (3, 2), (4, 2), (3, 3)]:
        assert lower_central_series(catalog("f", c=c, d=d), 5).nilpotency_class == c


def test_tr1_is_abelian_line():
    r = catalog("tr", n=1)
    assert r.dim == 1 and r.brackets == {}


def test_catalog_errors():
    with pytest.raises(CatalogError):
        catalog("nope")
    with pytest.raises(CatalogError):
        catalog("M", c=1)
    with pytest.raises(CatalogError):
        catalog("tr", n=5)
    with pytest.raises(CatalogError):
        catalog("f", c=5, d=2)
    with pytest.raises(CatalogError):
        catalog("heisenberg", c=2)
    with pytest.raises(CatalogError):
        catalog("vl", a=1)


def test_catalog_lists_known_rings():
    names = {e.name for e in catalog_entries()}
    assert {"heisenberg", "M", "fil4", "f", "grenham", "L_E", "L_np8", "vl", "sl2", "tr", "H_m", "g53",
            "g64"} <= names


def test_catalog_aliases_case_insensitive():
    assert catalog("H") == catalog("heisenberg") == catalog("HEISENBERG")
    assert catalog("f22") == catalog("heisenberg")


def test_rings_are_hashable_and_equal_by_content():
    assert hash(catalog("M", c=3)) == hash(catalog("M", c=3))
    assert catalog("M", c=3) != catalog("M", c=4)
