from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from pbwflag.errors import NonConstantError
from pbwflag.exactalg import (
    Poly,
    PolyMatrix,
    Var,
    X,
    Z,
    c,
    det_permutation_sum,
    divide_exact,
    poly_arith,
    poly_det,
    rank_exact,
    rank_of_rows,
)

x, y, z = (Poly.var(Var("c", (1, i))) for i in (1, 2, 3))

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, max_terms=4):
    out = Poly.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        coef = draw(small_fracs)
        ex = draw(st.tuples(*[st.integers(0, 2)] * 3))
        out = out + Poly.const(coef) * x ** ex[0] * y ** ex[1] * z ** ex[2]
    return out


def to_sympy(p: Poly):
    syms = {}
    out = sympy.Integer(0)
    for mono, coef in p.terms.items():
        term = sympy.Rational(coef.numerator, coef.denominator)
        for v, e in mono:
            name = f"{v.family}_{'_'.join(map(str, v.index))}"
            term *= syms.setdefault(name, sympy.Symbol(name)) ** e
        out += term
    return sympy.expand(out)


def test_difference_of_squares():
    assert (x + y) * (x - y) == x**2 - y**2


def test_zero_serializes_as_fraction():
    assert Poly.zero().serialize() == "0/1"


def test_serialize_format():
    p = Poly.var(X(1, 2)) * Poly.var(X(3)) ** 2 * Fraction(3, 2) - Poly.var(X(1))
    # lex order with earlier variables ranking higher, so X[1] leads
    assert p.serialize() == "-1/1*X[1] + 3/2*X[1,2]*X[3]^2"


def test_lowest_part():
    p = x + x * y + y * z * 3
    deg, low = p.lowest_part()
    assert (deg, low) == (1, x)


def test_constant_value_raises_on_nonconstant():
    with pytest.raises(Exception):
        x.constant_value()


def test_substitute_and_evaluate():
    p = x * y + 2
    assert p.substitute({Var("c", (1, 1)): y + 1}) == y * y + y + 2
    assert p.evaluate({Var("c", (1, 1)): 3, Var("c", (1, 2)): Fraction(1, 3)}) == 3


def test_divide_exact():
    assert divide_exact(x**2 - y**2, x - y) == x + y
    with pytest.raises(ValueError):
        divide_exact(x**2 + y, x)


def test_poly_arith_ops():
    assert poly_arith(x, y, "add") == x + y
    assert poly_arith(x, y, "mul") == x * y
    with pytest.raises(ValueError):
        poly_arith(x, y, "pow")


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, cc):
    assert (a + b) + cc == a + (b + cc)
    assert a * (b + cc) == a * b + a * cc
    assert a * b == b * a
    assert a - a == Poly.zero()
    assert a * Poly.const(1) == a


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys())
def test_parse_roundtrip(p):
    assert Poly.parse(p.serialize()) == p


@given(polys(), polys())
def test_hash_consistent_with_equality(a, b):
    if a == b:
        assert hash(a) == hash(b)


def test_det_2x2():
    m = PolyMatrix([[x, y], [z, x]])
    assert poly_det(m) == x * x - y * z


def test_det_identity_and_triangular():
    assert poly_det(PolyMatrix.identity(6)) == Poly.const(1)
    m = PolyMatrix([[x if i == j else (y if j > i else 0) for j in range(7)] for i in range(7)])
    assert poly_det(m) == x**7


@given(st.integers(1, 7), st.data())
def test_det_matches_leibniz(size, data):
    entries = [[data.draw(polys(max_terms=2)) for _ in range(size)] for _ in range(size)]
    m = PolyMatrix(entries)
    assert poly_det(m) == det_permutation_sum(m)


@given(st.integers(1, 6), st.data())
def test_det_transpose_and_product(size, data):
    draw = lambda: [[data.draw(small_fracs) for _ in range(size)] for _ in range(size)]
    a, b = PolyMatrix(draw()), PolyMatrix(draw())
    assert poly_det(a.transpose()) == poly_det(a)
    assert poly_det(a @ b) == poly_det(a) * poly_det(b)


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_sympy_and_transpose(r, k, data):
    rows = [[data.draw(st.integers(-2, 2)) for _ in range(k)] for _ in range(r)]
    m = PolyMatrix(rows)
    expected = sympy.Matrix(rows).rank()
    assert rank_exact(m) == expected
    assert rank_exact(m.transpose()) == expected
    assert rank_of_rows([{j: v for j, v in enumerate(row) if v} for row in rows]) == expected


def test_rank_rejects_symbolic_entries():
    with pytest.raises(NonConstantError):
        rank_exact(PolyMatrix([[x, 1], [0, 1]]))


def test_variable_constructors():
    assert Poly.var(Z(1, 3)).serialize() == "1/1*Z[1,3]"
    assert Poly.var(c(2, 2)).serialize() == "1/1*c[2,2]"
