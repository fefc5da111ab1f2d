from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octoreg.algebra import Octonion
from octoreg.clifford import Multivector
from octoreg.polyfun import (
    MAX_DEGREE,
    DegreeOverflowError,
    ParseError,
    Poly,
    PolyMap,
    UnknownSymbolError,
    normalize_algebra,
    parse,
    pointwise_mul,
    render,
)

from strategies import polymaps, polys, rationals


def test_parse_basic():
    f = parse("3/2*x1^2*x3*e5 - x0 + 7")
    assert f.comps[5] == Poly({(0, 2, 0, 1, 0, 0, 0, 0): Fraction(3, 2)})
    assert f.comps[0] == Poly({(1,) + (0,) * 7: -1, (0,) * 8: 7})


def test_render_order_and_signs():
    assert render(parse("x1*e1 + 7*x0")) == "7*x0 + x1*e1"
    assert render(parse("-x2*e3 + x1")) == "x1 - x2*e3"
    assert render(parse("x1 - x1")) == "0"
    assert render(parse("e47 - e12", "cl")) == "-e12 + e47"
    assert render(parse("1/3*x2^2*e2 + x0*x1*e2")) == "x0*x1*e2 + 1/3*x2^2*e2"


def test_e0_is_one():
    assert parse("x3*e0") == parse("x3")


@pytest.mark.parametrize("alg", ["O", "H", "Cl", "R"])
@given(data=st.data())
def test_round_trip(alg, data):
    if alg == "Cl":
        terms = data.draw(st.dictionaries(st.integers(0, 127), polys(max_terms=2), max_size=3))
        f = PolyMap("Cl", terms)
    else:
        f = data.draw(polymaps(alg, n_vars=4 if alg == "H" else 8))
    assert parse(render(f), alg) == f


@given(polymaps(), polymaps(), st.integers(0, 7))
def test_partial_is_linear(f, g, i):
    assert (f + g).partial(i) == f.partial(i) + g.partial(i)


@given(polys(), polys(), st.integers(0, 7))
def test_leibniz(p, q, i):
    assert (p * q).partial(i) == p.partial(i) * q + p * q.partial(i)


@given(polys(), polys(), st.lists(rationals, min_size=8, max_size=8))
def test_eval_is_a_ring_map(p, q, x):
    assert (p * q).eval(x) == p.eval(x) * q.eval(x)
    assert (p + q).eval(x) == p.eval(x) + q.eval(x)


@given(polymaps(max_degree=1), polymaps(max_degree=1), st.lists(rationals, min_size=8, max_size=8))
def test_pointwise_mul_evaluates(f, g, x):
    lhs = pointwise_mul(f, g).eval(x)
    assert lhs == f.eval(x) * g.eval(x)


def test_clifford_pointwise_mul():
    f = parse("x1*e1", "cl")
    g = parse("e2", "cl")
    assert render(pointwise_mul(f, g)) == "x1*e12"
    assert render(pointwise_mul(g, f)) == "-x1*e12"


def test_to_clifford_and_back():
    f = parse("x2*e1 - x7*e4 + 3")
    c = f.to_clifford()
    assert c.is_paravector()
    assert c.to_octonion_map() == f
    assert c.eval([0, 0, 1, 0, 0, 0, 0, 0]) == Multivector.e(1) + Multivector.scalar(3)


def test_eval_octonion():
    assert parse("x1*e2 + x0").eval([2, 5, 0, 0, 0, 0, 0, 0]) == Octonion([2, 0, 5, 0, 0, 0, 0, 0])


def test_degree():
    assert parse("x1^3*x2 + x0").degree() == 4
    assert parse("0").degree() == float("-inf")


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("x1 + y", 1, 6),
        ("x1 +\n  x2 * z", 2, 8),
        ("x8", 1, 1),
        ("x1*e9", 1, 4),
    ],
)
def test_unknown_symbols(src, line, col):
    with pytest.raises(UnknownSymbolError) as exc:
        parse(src)
    assert (exc.value.line, exc.value.column) == (line, col)


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("x1 +", 1, 5),
        ("x1 ** x2", 1, 5),
        ("3/0*x1", 1, 3),
        ("x1*e1*e2", 1, 7),
        ("x1 x2", 1, 4),
        ("x1 + $", 1, 6),
    ],
)
def test_syntax_errors(src, line, col):
    with pytest.raises(ParseError) as exc:
        parse(src)
    assert (exc.value.line, exc.value.column) == (line, col)
    assert f"line {line}, column {col}" in str(exc.value)


def test_basis_depends_on_algebra():
    with pytest.raises(UnknownSymbolError):
        parse("x1*e4", "quat")
    with pytest.raises(UnknownSymbolError):
        parse("e21", "cl")
    assert render(parse("x1*e3", "quat")) == "x1*e3"


def test_degree_overflow():
    with pytest.raises(DegreeOverflowError):
        parse(f"x1^{MAX_DEGREE + 1}")
    p = Poly.var(1)
    q = Poly({(0, MAX_DEGREE) + (0,) * 6: 1})
    with pytest.raises(DegreeOverflowError):
        p * q


def test_algebra_aliases():
    assert normalize_algebra("oct") == "O"
    assert normalize_algebra("quat") == "H"
    assert normalize_algebra("cl") == "Cl"
    with pytest.raises(ValueError):
        normalize_algebra("sedenion")


def test_zero_polys_compare_equal():
    assert Poly({(0,) * 8: 0}) == Poly()
    assert Poly().is_zero()
