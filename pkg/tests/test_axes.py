"""
First-order deformations of the coordinate axes: flatness criteria,
projections, central fibers and smoothings
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.core.axes import (
    CnDeformation,
    cn_central_fiber_ideal,
    cn_central_fiber_torsion,
    cn_chow_vanishing,
    cn_is_flat,
    cn_is_kflat,
    cn_kflat_by_projections,
    cn_nonlinear_projection_equation,
    cn_normalize,
    cn_projection_b_direct,
    cn_projection_equation,
    cn_rescale,
    cn_smoothing,
    cn_smoothing_span_rank,
    cn_translation_difference,
    smoothing_first_order,
)
from src.core.errors import MalformedInputError, PreconditionError
from src.core.fields import QQ
from src.core.laurent import LaurentPoly
from src.core.poly import PolyRing

SCALARS = PolyRing(QQ, ())


def symmetric_poles(n: int, c=1) -> CnDeformation:
    return CnDeformation.simple_poles(n, {(i, j): c for i in range(1, n + 1) for j in range(1, n + 1) if i != j})


# -- criteria -----------------------------------------------------------------


def test_symmetric_simple_poles_are_kflat_not_flat():
    d = symmetric_poles(3)
    assert cn_is_kflat(d)
    assert not cn_is_flat(d)
    assert cn_chow_vanishing(d)


def test_regular_data_is_flat():
    d = CnDeformation.from_scalars(3, {(1, 2): {0: 1, 2: 3}, (3, 1): {1: -1}})
    assert cn_is_flat(d)
    assert cn_is_kflat(d)


def test_asymmetric_residues_are_not_kflat():
    d = CnDeformation.simple_poles(3, {(1, 2): 1, (2, 1): 2})
    assert not cn_is_kflat(d)
    check = cn_kflat_by_projections(d, draws=4, seed=1)
    assert not check.consistent
    assert set(check.refutation) == {"abar", "aprime", "lambda"}


def test_two_lines_allow_matching_simple_poles():
    assert cn_is_flat(CnDeformation.simple_poles(2, {(1, 2): 3, (2, 1): 3}))
    assert not cn_is_flat(CnDeformation.simple_poles(2, {(1, 2): 3}))


def test_double_pole_and_chow_vanishing():
    three = CnDeformation.from_scalars(3, {(1, 2): {-2: 1}, (2, 1): {-2: 1}})
    four = CnDeformation.from_scalars(4, {(1, 2): {-2: 1}, (2, 1): {-2: 1}})
    assert not cn_is_kflat(three)
    assert not cn_chow_vanishing(three)
    assert cn_chow_vanishing(four)
    assert not cn_kflat_by_projections(three, draws=2, seed=0).consistent
    with pytest.raises(PreconditionError):
        cn_chow_vanishing(CnDeformation.simple_poles(2, {(1, 2): 1}))


def test_residues_off_the_axes_must_vanish():
    d = CnDeformation.simple_poles(3, {(4, 1): 1}, m=4)
    assert not cn_is_kflat(d)
    assert cn_is_kflat(CnDeformation.from_scalars(3, {(4, 1): {0: 2}}, m=4))


def test_deformation_validation():
    with pytest.raises(PreconditionError):
        CnDeformation(1)
    with pytest.raises(MalformedInputError):
        CnDeformation.simple_poles(3, {(1, 1): 1})
    with pytest.raises(MalformedInputError):
        CnDeformation(3, {(1, 2): LaurentPoly.from_scalars(SCALARS, "x1", {-1: 1})})
    with pytest.raises(MalformedInputError):
        CnDeformation(3, m=2)


def test_normalize_and_rescale():
    d = CnDeformation.from_scalars(3, {(1, 2): {-1: 1, 0: 3, 2: 7}})
    normal = cn_normalize(d)
    assert normal.entry(1, 2) == LaurentPoly.from_scalars(SCALARS, "x2", {-1: 1, 0: 3})
    scaled = cn_rescale(normal, [2, 5, 1])
    assert scaled.entry(1, 2) == LaurentPoly.from_scalars(SCALARS, "x2", {-1: 10, 0: 6})
    assert cn_is_kflat(cn_rescale(symmetric_poles(3), [2, 3, 5]))
    with pytest.raises(PreconditionError):
        cn_rescale(d, [1, 0, 1])


def _laurent_entries(max_pole: int):
    return st.dictionaries(st.integers(-max_pole, 1), st.integers(-3, 3), max_size=3)


@st.composite
def deformations(draw, max_pole=2):
    n = draw(st.integers(2, 5))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=4, unique=True))
    data = {key: draw(_laurent_entries(max_pole)) for key in chosen}
    return CnDeformation.from_scalars(n, data)


@settings(max_examples=500)
@given(deformations())
def test_criteria_form_a_chain(d):
    if cn_is_flat(d) and d.n >= 3:
        assert cn_is_kflat(d)
    if cn_is_kflat(d) and d.n >= 3:
        assert cn_chow_vanishing(d)


@st.composite
def simple_pole_deformations(draw):
    n = draw(st.integers(3, 5))
    symmetric = draw(st.booleans())
    residues = {}
    constants = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = draw(st.integers(-2, 2))
            residues[(i, j)] = c
            residues[(j, i)] = c if symmetric else draw(st.integers(-2, 2))
            constants[(i, j)] = draw(st.integers(-2, 2))
    return CnDeformation.simple_poles(n, residues, constants)


@settings(max_examples=20)
@given(simple_pole_deformations())
def test_projections_agree_with_the_residue_criterion(d):
    assert cn_kflat_by_projections(d, draws=4, seed=7).consistent == cn_is_kflat(d)


@settings(max_examples=60)
@given(deformations(max_pole=3))
def test_projections_refute_exactly_the_non_kflat_data(d):
    assert cn_kflat_by_projections(d, seed=7).consistent == cn_is_kflat(d)


# -- projection equations -----------------------------------------------------


def test_projection_equation_matches_direct_formula():
    d = CnDeformation.from_scalars(3, {(1, 2): {-1: 2, 0: 1}, (2, 1): {-1: 2}, (3, 1): {0: 4}})
    abar, aprime = [0, 1, 3], [2, -1, 5]
    projection = cn_projection_equation(d, abar, aprime)
    assert projection.B == cn_projection_b_direct(d, abar, aprime)
    assert projection.regular
    u, v = projection.base.ring.gens()
    assert projection.base == v * (v - u) * (v - u * 3)


def test_projection_needs_distinct_coefficients():
    d = symmetric_poles(3)
    with pytest.raises(PreconditionError):
        cn_projection_equation(d, [1, 1, 2], [0, 0, 0])
    with pytest.raises(MalformedInputError):
        cn_projection_equation(d, [1, 2], [0, 0])


def test_linear_series_reproduce_the_linear_projection():
    d = CnDeformation.from_scalars(3, {(1, 2): {-1: 1, 0: 2}, (2, 1): {-1: 1}, (2, 3): {0: -1}})
    abar = [2, -1, 4]
    nonlinear = cn_nonlinear_projection_equation(d, {i + 1: {1: a} for i, a in enumerate(abar)})
    linear = cn_projection_equation(d, abar, [0, 0, 0])
    assert nonlinear.base == linear.base
    assert nonlinear.B == linear.B


def test_quadratic_terms_keep_kflat_data_regular():
    d = symmetric_poles(3)
    alpha = {1: {1: 1, 2: 3}, 2: {1: 2}, 3: {1: -1, 3: 1}}
    beta = {(1, 2): {1: 1}}
    assert cn_nonlinear_projection_equation(d, alpha, beta).regular
    with pytest.raises(MalformedInputError):
        cn_nonlinear_projection_equation(d, {1: {0: 1, 1: 1}, 2: {1: 2}, 3: {1: 3}})


# -- central fiber ------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5])
def test_central_fiber_torsion_is_n_minus_1(n):
    assert cn_central_fiber_torsion(symmetric_poles(n)) == n - 1


def test_central_fiber_torsion_for_random_residues():
    rng = random.Random(3)
    residues = {(i, j): rng.randint(1, 9) for i in range(1, 4) for j in range(1, 4) if i != j}
    residues[(2, 1)] = residues[(1, 2)] + 1
    assert cn_central_fiber_torsion(CnDeformation.simple_poles(3, residues)) == 2


def test_flat_central_fiber_has_no_torsion():
    fiber = cn_central_fiber_ideal(CnDeformation(3))
    assert cn_central_fiber_torsion(CnDeformation(3)) == 0
    assert fiber.dimension() == 1


def test_central_fiber_needs_simple_poles():
    with pytest.raises(PreconditionError):
        cn_central_fiber_ideal(CnDeformation.from_scalars(3, {(1, 2): {-2: 1}}))


# -- smoothings ---------------------------------------------------------------


def test_smoothing_family():
    smoothing = cn_smoothing([0, 1, 2], [1, 1, 1])
    assert len(smoothing.equations) == 3
    assert smoothing.first_order[(1, 2)] == -1
    assert smoothing.first_order[(3, 1)] == Fraction(1, 2)
    assert cn_is_flat(smoothing.deformation)


def test_inversion_changes_data_by_a_translation():
    p, lam = [1, 2, 3], [1, 2, 1]
    original = smoothing_first_order(p, lam)
    inverted = smoothing_first_order([Fraction(1, x) for x in p], [Fraction(-l, x * x) for l, x in zip(lam, p)])
    shift = cn_translation_difference(inverted, original)
    assert shift == {1: -1, 2: -1, 3: Fraction(-1, 3)}


def test_different_points_are_not_translates():
    assert cn_translation_difference(smoothing_first_order([1, 2, 3], [1, 1, 1]), smoothing_first_order([1, 2, 4], [1, 1, 1])) is None


def test_smoothing_input_checks():
    with pytest.raises(PreconditionError):
        smoothing_first_order([1, 1, 2], [1, 1, 1])
    with pytest.raises(PreconditionError):
        smoothing_first_order([1, 2, 3], [1, 0, 1])
    with pytest.raises(MalformedInputError):
        smoothing_first_order([1, 2, 3], [1, 1])


@pytest.mark.parametrize("n", [3, 4])
def test_smoothing_span_rank_bounds(n):
    rng = random.Random(n)
    samples = []
    while len(samples) < 3 * n * n:
        p = rng.sample(range(-20, 20), n)
        lam = [rng.randint(1, 9) for _ in range(n)]
        samples.append((p, lam))
    span = cn_smoothing_span_rank(samples, n)
    assert span.dimension == n * (n - 1)
    assert span.modulo_translations <= span.raw <= span.dimension
    assert span.modulo_translations <= span.dimension - n
    assert span.raw >= n
    with pytest.raises(MalformedInputError):
        cn_smoothing_span_rank(samples[:1], n)
