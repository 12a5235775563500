"""
Sections on punctured plane curves and the flat / globalizing / C-flat tests
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import FieldMismatchError, MalformedInputError, PreconditionError
from src.core.fields import QQ
from src.core.laurent import LaurentPoly
from src.core.plane_curves import (
    CurveSectionRep,
    PlaneCurveDeformation,
    detect_monomial_curve,
    monomial_curve_section,
    plane_classify,
    section_mul,
    section_to_parameter,
)
from src.core.poly import PolyRing
from src.core.semigroup import MonomialCurve
from src.utils.serialization import format_plane_deformation, parse_plane_deformation

SCALARS = PolyRing(QQ, ())
CUSP = MonomialCurve(2, 3)


def t_power(m: int, c=1) -> LaurentPoly:
    return LaurentPoly.from_scalars(SCALARS, "t", {m: c})


def test_cusp_is_detected(poly):
    curve = detect_monomial_curve(poly("v^3 - u^2", "u,v"))
    assert curve == CUSP
    assert detect_monomial_curve(poly("v^2 - u^2 - u^3", "u,v")) is None
    assert detect_monomial_curve(poly("v^2 - u^4", "u,v")) is None


def test_reduction_modulo_the_curve(poly):
    f = poly("v^3 - u^2", "u,v")
    assert CurveSectionRep.from_value(f, poly("v^3", "u,v")) == CurveSectionRep.from_value(f, poly("u^2", "u,v"))
    s = CurveSectionRep.from_value(f, poly("v^4 + u", "u,v"))
    assert [str(g) for g in s.coeffs] == ["u", "u^2", "0"]


def test_sections_need_a_monic_curve(poly):
    with pytest.raises(PreconditionError):
        CurveSectionRep.from_value(poly("u*v - 1", "u,v"), poly("u", "u,v"))
    with pytest.raises(MalformedInputError):
        CurveSectionRep.from_value(poly("v^2 - x", "x,y,v"), poly("x", "x,y,v"))


def test_section_product(poly):
    f = poly("v^3 - u^2", "u,v")
    s = CurveSectionRep.from_value(f, poly("v^2", "u,v"))
    assert section_mul(s, poly("v", "u,v")) == CurveSectionRep.from_value(f, poly("u^2", "u,v"))


def test_monomial_sections_pull_back(poly):
    for m in range(-6, 9):
        s = monomial_curve_section(CUSP, t_power(m))
        assert section_to_parameter(CUSP, s) == t_power(m)
    # t^-1 = v / u on the cusp u = t^3, v = t^2
    s = monomial_curve_section(CUSP, t_power(-1))
    assert s.coeffs[1] == LaurentPoly.from_scalars(SCALARS, "u", {-1: 1})
    assert not s.is_regular()


def test_simple_pole_is_cflat_but_not_flat():
    result = plane_classify(PlaneCurveDeformation.monomial(CUSP, t_power(-1)))
    assert not result.flat
    assert result.cflat
    assert result.globalizes is False
    assert result.globalizes_text == "no"


def test_double_pole_is_not_cflat():
    result = plane_classify(PlaneCurveDeformation.monomial(CUSP, t_power(-2)))
    assert not result.flat
    assert not result.cflat
    assert any("has a pole" in d for d in result.diagnostics)


def test_regular_phi_is_flat_and_globalizes():
    result = plane_classify(PlaneCurveDeformation.monomial(CUSP, t_power(2) + t_power(3, 5)))
    assert result.flat
    assert result.cflat
    assert result.globalizes


def test_gap_directions_do_not_globalize():
    # t^1 is a gap of N 2 + N 3: regular on the normalization, not on the curve
    result = plane_classify(PlaneCurveDeformation.monomial(CUSP, t_power(1)))
    assert not result.flat
    assert result.globalizes
    assert result.cflat


@pytest.mark.parametrize("a, c", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
def test_frobenius_pole_is_the_extreme_cflat_direction(a, c):
    curve = MonomialCurve(a, c)
    frobenius = curve.semigroup.frobenius()
    extreme = plane_classify(PlaneCurveDeformation.monomial(curve, t_power(-frobenius)))
    assert extreme.cflat
    assert extreme.globalizes is False
    beyond = plane_classify(PlaneCurveDeformation.monomial(curve, t_power(-frobenius - 1)))
    assert not beyond.cflat


@st.composite
def shifted_by_regular_sections(draw):
    curve = MonomialCurve(*draw(st.sampled_from([(2, 3), (2, 5), (3, 4), (3, 5)])))
    pole = draw(st.integers(-curve.semigroup.frobenius() - 2, 3))
    terms = draw(
        st.dictionaries(
            st.integers(0, 12).filter(curve.semigroup.member),
            st.integers(-3, 3).filter(bool),
            max_size=3,
        )
    )
    regular = LaurentPoly.from_scalars(SCALARS, "t", terms)
    return curve, t_power(pole), t_power(pole) + regular


@settings(max_examples=40)
@given(shifted_by_regular_sections())
def test_classification_ignores_regular_changes_of_phi(case):
    curve, phi, shifted = case
    before = plane_classify(PlaneCurveDeformation.monomial(curve, phi))
    after = plane_classify(PlaneCurveDeformation.monomial(curve, shifted))
    assert (after.flat, after.globalizes, after.cflat) == (before.flat, before.globalizes, before.cflat)


def test_polar_psi_is_refused(poly):
    f = poly("v^3 - u^2", "u,v")
    psi = LaurentPoly.from_scalars(PolyRing(QQ, ("v",)), "u", {-1: 1})
    d = PlaneCurveDeformation.from_values(f, psi, poly("0", "u,v"))
    result = plane_classify(d)
    assert not (result.flat or result.cflat)


def test_parse_plane_deformation():
    d = parse_plane_deformation("v^3 - u^2; 0; u^-1*v")
    assert d.curve == CUSP
    result = plane_classify(d)
    assert (result.flat, result.globalizes, result.cflat) == (False, False, True)
    assert format_plane_deformation(d).startswith("v^3 - u^2; 0;")
    with pytest.raises(MalformedInputError):
        parse_plane_deformation("v^3 - u^2; 0")


def test_nodal_curve_leaves_globalizing_unknown():
    d = parse_plane_deformation("v^2 - u^2 - u^3; 0; u")
    result = plane_classify(d)
    assert result.flat
    assert result.cflat
    assert result.globalizes is None
    assert result.globalizes_text == "unknown"


def test_sections_on_different_curves(poly):
    a = CurveSectionRep.from_value(poly("v^3 - u^2", "u,v"), poly("u", "u,v"))
    b = CurveSectionRep.from_value(poly("v^2 - u^3", "u,v"), poly("u", "u,v"))
    with pytest.raises(FieldMismatchError):
        a + b
