"""
Fields, monomial orders, polynomial arithmetic and Laurent / dual values
"""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from src.core.errors import (
    FieldMismatchError,
    InvariantViolation,
    MalformedInputError,
    PreconditionError,
    UnknownVariableError,
    ZeroInputError,
)
from src.core.fields import QQ, FieldSpec
from src.core.laurent import DualPoly, LaurentPoly, laurent_ord
from src.core.orders import GREVLEX, LEX, MonomialOrder
from src.core.poly import (
    Poly,
    PolyRing,
    compositions,
    derivative,
    multinomial,
    multinomial_nonzero,
    substitute,
)

R = PolyRing(QQ, ("x", "y"))
F7 = FieldSpec.prime(7)

Polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=4,
).map(lambda terms: Poly.from_terms(R, terms))


# -- fields -------------------------------------------------------------------


def test_field_parse():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("Fp:7") == F7
    assert str(FieldSpec.parse("fp:5")) == "Fp:5"


@pytest.mark.parametrize("text, error", [("Fp:8", PreconditionError), ("R", MalformedInputError), ("Fp:x", MalformedInputError)])
def test_field_parse_rejects(text, error):
    with pytest.raises(error):
        FieldSpec.parse(text)


def test_prime_field_normalizes_fractions():
    assert F7.normalize(Fraction(1, 2)) == 4
    assert F7.normalize(-1) == 6
    with pytest.raises(ZeroInputError):
        F7.normalize(Fraction(1, 7))


def test_inverse_of_zero():
    with pytest.raises(ZeroInputError):
        QQ.inv(0)
    assert F7.inv(3) == 5


def test_elements_of_q_refused():
    with pytest.raises(PreconditionError):
        QQ.elements()
    assert list(F7.elements()) == list(range(7))


# -- orders -------------------------------------------------------------------


def test_order_parse():
    assert MonomialOrder.parse("lex") == LEX
    assert MonomialOrder.parse("GREVLEX") == GREVLEX
    assert str(MonomialOrder.parse("elim:2")) == "elim:2"
    with pytest.raises(MalformedInputError):
        MonomialOrder.parse("deglex")
    with pytest.raises(MalformedInputError):
        MonomialOrder.parse("elim:0")


def test_grevlex_tie_break():
    # x*z < y^2 in grevlex on (x, y, z), the reverse of lex
    assert GREVLEX.key((1, 0, 1)) < GREVLEX.key((0, 2, 0))
    assert LEX.key((1, 0, 1)) > LEX.key((0, 2, 0))


# -- arithmetic ---------------------------------------------------------------


def test_printing(poly):
    assert str(poly("x^2 - 2*x*y + 1/2")) == "x^2 - 2*x*y + 1/2"
    assert str(poly("-x", "x,y", F7)) == "6*x"
    assert str(poly("0")) == "0"


def test_ring_mismatch(poly):
    with pytest.raises(FieldMismatchError):
        poly("x") + poly("x", "x,z")
    with pytest.raises(FieldMismatchError):
        poly("x") + poly("x", "x,y", F7)


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        R.var("z")


@given(Polys, Polys, Polys)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == R.zero()


@given(Polys, Polys)
def test_leibniz_rule(f, g):
    for name in R.variables:
        assert derivative(f * g, name) == derivative(f, name) * g + f * derivative(g, name)


def test_power_and_leading_terms(poly):
    p = poly("(x + y)^3")
    assert p == poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert p.leading_monomial() == (3, 0)
    assert p.total_degree() == 3
    assert poly("x^2 + x*y^3 + 1").min_degree() == 0
    with pytest.raises(ValueError):
        p ** -1


def test_substitute(poly):
    y = R.var("y")
    assert substitute(poly("x^2 + x*y"), {"x": y, "y": y}) == poly("2*y^2")
    with pytest.raises(UnknownVariableError):
        substitute(poly("x*y"), {"x": y})


def test_embed_and_coefficients(poly):
    big = PolyRing(QQ, ("t", "x", "y"))
    p = poly("x*y + 2").embed(big)
    assert p.ring.variables == ("t", "x", "y")
    assert p.coefficient((0, 1, 1)) == 1
    parts = poly("x^2*y + 3*y + x").coefficients_in("y")
    assert parts[1] == poly("x^2 + 3")
    assert parts[0] == poly("x")


# -- multinomials -------------------------------------------------------------


def test_compositions_order():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions(4, 3)) == comb(6, 2)
    assert compositions(0, 0) == [()]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_multinomial_digit_test_matches_binomials(p):
    for m in range(0, 30):
        for k in range(m + 1):
            assert multinomial_nonzero(m, (k, m - k), p) == (comb(m, k) % p != 0)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4), st.sampled_from([2, 3, 5]))
def test_multinomial_digit_test_matches_exact_value(parts, p):
    m = sum(parts)
    assert multinomial_nonzero(m, parts, p) == (multinomial(m, parts) % p != 0)


def test_multinomial_parts_must_sum():
    with pytest.raises(InvariantViolation):
        multinomial_nonzero(4, (1, 1), 3)
    assert multinomial_nonzero(4, (2, 2), 0)


# -- Laurent and dual values --------------------------------------------------


def test_laurent_inspection():
    scalars = PolyRing(QQ, ())
    p = LaurentPoly.from_scalars(scalars, "u", {-2: 3, 0: 1, 1: -1})
    assert p.ord() == laurent_ord(p) == -2
    assert laurent_ord(LaurentPoly.from_scalars(scalars, "u", {3: 1})) == 3
    assert p.pole_order() == 2
    assert not p.is_regular()
    assert p.polar_part() == LaurentPoly.from_scalars(scalars, "u", {-2: 3})
    assert p.truncate_above(0) == LaurentPoly.from_scalars(scalars, "u", {-2: 3, 0: 1})
    assert str(p) == "-u + 1 + 3*u^-2"
    with pytest.raises(ZeroInputError):
        LaurentPoly.zero(scalars, "u").ord()


def test_laurent_inverse_and_rescaling():
    scalars = PolyRing(QQ, ())
    u = LaurentPoly.monomial(scalars, "u", 1, 2)
    assert u ** -1 == LaurentPoly.from_scalars(scalars, "u", {-1: Fraction(1, 2)})
    with pytest.raises(PreconditionError):
        (u + 1) ** -1
    phi = LaurentPoly.from_scalars(scalars, "u", {-1: 1, 2: 1})
    assert phi.scale_variable(2) == LaurentPoly.from_scalars(scalars, "u", {-1: Fraction(1, 2), 2: 4})


def test_laurent_to_poly(poly):
    p = LaurentPoly.from_poly(poly("x^2*y + y"), "x")
    assert p.coeff_ring.variables == ("y",)
    assert p.to_poly(R) == poly("x^2*y + y")
    with pytest.raises(PreconditionError):
        p.shift(-3).to_poly(R)


def test_dual_numbers_square_to_zero():
    eps = DualPoly(R.zero(), R.one())
    assert (eps * eps).is_zero()
    x = R.var("x")
    a = DualPoly(x, R.one())
    b = DualPoly(x + 1, x)
    product = a * b
    assert product.body == x * (x + 1)
    assert product.eps == x * x + (x + 1)


@given(Polys, Polys, Polys, Polys)
def test_dual_product_rule(a0, a1, b0, b1):
    product = DualPoly(a0, a1) * DualPoly(b0, b1)
    assert product.body == a0 * b0
    assert product.eps == a0 * b1 + a1 * b0


def test_dual_power_is_first_order_taylor():
    x = R.var("x")
    value = DualPoly(x, R.one()) ** 3
    assert value.body == x ** 3
    assert value.eps == (x ** 2) * 3
