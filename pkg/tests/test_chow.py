"""
Chow equations: closed forms, the subset lemma, sampling, hulls and
the checkable consequences
"""

import random
from math import comb

import pytest

from src.core.chow import (
    CycleSpec,
    ProjectionSpec,
    apply_projection,
    axes_cycle,
    axes_exceptional,
    axes_ideal,
    axes_projection_pullback,
    chow_hull,
    chow_ideal_axes,
    chow_ideal_hypersurface_pair,
    derivative_ideal,
    find_weight_subset,
    homogeneous_degree,
    restriction_check,
    sample_chow_ideal,
    torsion_bound_check,
)
from src.core.errors import CharacteristicError, MalformedInputError, PreconditionError
from src.core.fields import FieldSpec
from src.core.ideal import Ideal
from src.core.poly import compositions


# -- closed forms -------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_chow_ideal_of_the_axes(n):
    ideal = chow_ideal_axes(n)
    exponents = {g.leading_monomial() for g in ideal.gens}
    expected = set(compositions(n, n))
    expected -= {tuple(n if k == i else 0 for k in range(n)) for i in range(n)}
    if n % 2:
        expected.discard((1,) * n)
    assert exponents == expected
    assert all(len(g.terms) == 1 for g in ideal.gens)


def test_axes_ideal_in_larger_ambient_space():
    ideal = axes_ideal(2, ambient=3)
    assert ideal.ring.variables == ("x1", "x2", "x3")
    assert {str(g) for g in ideal.gens} == {"x1*x2", "x1*x3", "x2*x3", "x3"}


@pytest.mark.parametrize("n", [3, 4])
def test_projection_pullbacks_lie_in_the_chow_ideal(n):
    rng = random.Random(n)
    ideal = chow_ideal_axes(n)
    for _ in range(5):
        a = [rng.randint(-5, 5) for _ in range(n)]
        b = [rng.randint(-5, 5) for _ in range(n)]
        assert ideal.member(axes_projection_pullback(a, b, ideal.ring))


def test_hypersurface_pair_of_a_line(poly):
    chow = chow_ideal_hypersurface_pair(poly("x"), "z")
    assert chow.ring.variables == ("x", "y", "z")
    assert chow.equals(Ideal(chow.ring, [chow.ring.var("x"), chow.ring.var("z")]))


def test_hypersurface_pair_of_a_node(poly):
    chow = chow_ideal_hypersurface_pair(poly("x*y"), "z")
    ring = chow.ring
    x, y, z = ring.gens()
    assert chow.equals(Ideal(ring, [x * y, z * x, z * y, z ** 2]))


def test_hypersurface_pair_needs_char_0(poly):
    with pytest.raises(CharacteristicError):
        chow_ideal_hypersurface_pair(poly("x", "x,y", FieldSpec.prime(5)))
    with pytest.raises(MalformedInputError):
        chow_ideal_hypersurface_pair(poly("x + z", "x,y,z"), "z")


def test_derivative_ideal(poly, ideal):
    assert derivative_ideal(poly("x^2"), 1).equals(ideal("x"))
    assert derivative_ideal(poly("x^2*y"), 2).equals(ideal("x, y"))
    assert derivative_ideal(poly("x^3"), 0).equals(ideal("x^3"))
    with pytest.raises(MalformedInputError):
        derivative_ideal(poly("x"), -1)


# -- subset lemma -------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 9))
def test_subset_lemma_fails_exactly_on_the_exceptional_monomials(n):
    for w in compositions(n, n):
        subset = find_weight_subset(w)
        assert (subset is None) == axes_exceptional(w)
        if subset is not None:
            assert sum(w[i - 1] for i in subset) == n - len(subset)


def test_subset_lemma_examples():
    assert find_weight_subset((1, 1, 1, 1)) == (1, 2)
    assert find_weight_subset((1, 1, 1)) is None
    assert find_weight_subset((0, 0, 3)) is None
    assert find_weight_subset((2, 1, 1, 0)) is not None
    with pytest.raises(MalformedInputError):
        find_weight_subset((1, 2))


# -- sampling and hulls -------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4])
def test_sampling_recovers_the_axes(n):
    sample = sample_chow_ideal(axes_cycle(n), trials=200, seed=11)
    assert sample.stabilized
    assert sample.status == "stabilized"
    assert sample.ideal.equals(chow_ideal_axes(n))


def test_sampling_is_reproducible_with_workers():
    one = sample_chow_ideal(axes_cycle(3), trials=60, seed=5, workers=1)
    many = sample_chow_ideal(axes_cycle(3), trials=60, seed=5, workers=4)
    assert [str(g) for g in one.ideal.gens] == [str(g) for g in many.ideal.gens]


def test_sampling_needs_homogeneous_components(ideal):
    with pytest.raises(PreconditionError):
        sample_chow_ideal(ideal("x - 1"), trials=10)


def test_double_line_plus_line_in_the_plane(ideal):
    cycle = CycleSpec([(ideal("x"), 2), (ideal("y"), 1)])
    hull = chow_hull(cycle)
    assert hull.equals(ideal("x^2*y"))
    sample = sample_chow_ideal(cycle, trials=100, seed=2)
    assert sample.stabilized
    assert sample.ideal.equals(hull)


def test_double_line_plus_line_in_space(ideal):
    variables = "x,y,z"
    cycle = CycleSpec([(ideal("x, y", variables), 2), (ideal("x, z", variables), 1)])
    hull = chow_hull(cycle)
    meet = ideal("x, y", variables).power(2).intersect(ideal("x, z", variables))
    assert hull.equals(meet.pure_part())
    sample = sample_chow_ideal(cycle, trials=200, seed=4)
    assert sample.stabilized
    assert sample.ideal.pure_part().equals(hull)


def test_cycle_validation(ideal):
    with pytest.raises(MalformedInputError):
        CycleSpec([])
    with pytest.raises(MalformedInputError):
        CycleSpec([(ideal("x"), 0)])
    with pytest.raises(MalformedInputError):
        CycleSpec([(ideal("x"), 1), (ideal("2*x"), 1)])


def test_homogeneous_degree(ideal):
    assert homogeneous_degree(ideal("x^2 - y*z", "x,y,z")) == 2
    assert homogeneous_degree(ideal("x*y*z", "x,y,z")) == 3
    with pytest.raises(PreconditionError):
        homogeneous_degree(ideal("x, y"))


# -- projections --------------------------------------------------------------


def test_projection_from_a_point(poly):
    spec = ProjectionSpec.linear_from_point({"x": 2}, "y")
    assert apply_projection(poly("x^2"), spec) == poly("(x - 2*y)^2")


def test_projection_to_a_subspace(poly):
    spec = ProjectionSpec.linear_to_subspace({"x": poly("x + y")})
    assert apply_projection(poly("x*y"), spec) == poly("x*y + y^2")
    with pytest.raises(MalformedInputError):
        apply_projection(poly("x"), ProjectionSpec.linear_to_subspace({"x": poly("x^2")}))


def test_affine_nonlinear_projection(poly):
    variables = "x,y,z"
    spec = ProjectionSpec.affine_nonlinear(poly("z", variables), {"x": poly("0", variables)}, degree=2)
    assert apply_projection(poly("x", variables), spec) == poly("x + x*z", variables)
    bad = ProjectionSpec.affine_nonlinear(
        poly("z", variables),
        {"x": poly("0", variables)},
        perturbations={"x": poly("y + 1", variables)},
        fixed=("y",),
    )
    with pytest.raises(MalformedInputError):
        apply_projection(poly("x", variables), bad)


# -- consequences -------------------------------------------------------------


@pytest.mark.parametrize("a", [2, 3, 4])
def test_torsion_bound_on_the_monomial_family(a):
    bound = torsion_bound_check(a)
    assert bound.matches_display
    assert bound.torsion_length == comb(a, 2)
    assert bound.holds


@pytest.mark.parametrize("c", [1, 2, -1])
def test_chow_equations_do_not_commute_with_restriction(poly, c):
    f, g = poly("x^4 + y^4"), poly("x^2*y^2")
    assert not restriction_check(f, g, c).commutes
    rng = random.Random(c)
    for _ in range(2):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        assert not restriction_check(f, g, c, a, b).commutes
