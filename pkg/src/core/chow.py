"""
Chow Equations
Projection formulas, derivative ideals, closed-form ideals of Chow
equations, a sampling oracle for generic projections and Chow hulls
"""

import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..config import config
from .errors import (
    CharacteristicError,
    InvariantViolation,
    MalformedInputError,
    PreconditionError,
)
from .fields import QQ, FieldSpec, Scalar
from .ideal import Ideal, length_between
from .linalg import EchelonSpan, nullspace
from .orders import GREVLEX
from .poly import Poly, PolyRing, compositions, derivative, substitute

# Set up logging
logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Projections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectionSpec:
    """A projection given by the coordinate substitution it induces on equations"""

    kind: str
    center: Tuple[Tuple[str, Scalar], ...] = ()
    along: Optional[str] = None
    forms: Tuple[Tuple[str, Poly], ...] = ()
    ell0: Optional[Poly] = None
    degree: int = 2
    perturbations: Tuple[Tuple[str, Poly], ...] = ()
    fixed: Tuple[str, ...] = ()

    @classmethod
    def linear_from_point(cls, center: Mapping[str, Scalar], along: str) -> "ProjectionSpec":
        """x_i -> x_i - a_i * along: projection from the point with coordinates a on the along-axis"""
        return cls("linear_from_point", center=tuple(center.items()), along=along)

    @classmethod
    def linear_to_subspace(cls, forms: Mapping[str, Poly]) -> "ProjectionSpec":
        return cls("linear_to_subspace", forms=tuple(forms.items()))

    @classmethod
    def affine_nonlinear(
        cls,
        ell0: Poly,
        forms: Mapping[str, Poly],
        degree: int = 2,
        perturbations: Optional[Mapping[str, Poly]] = None,
        fixed: Sequence[str] = (),
    ) -> "ProjectionSpec":
        """x_i -> (x_i + phi_i - l_i)(1 + l_0 + ... + l_0^(degree-1))"""
        return cls(
            "affine_nonlinear",
            forms=tuple(forms.items()),
            ell0=ell0,
            degree=degree,
            perturbations=tuple((perturbations or {}).items()),
            fixed=tuple(fixed),
        )


def apply_projection(p: Poly, spec: ProjectionSpec) -> Poly:
    """Pull p back along the projection's coordinate substitution"""
    ring = p.ring
    mapping: Dict[str, Poly] = {v: ring.var(v) for v in ring.variables}
    if spec.kind == "linear_from_point":
        if spec.along not in ring.variables:
            raise MalformedInputError(f"projection axis '{spec.along}' is not a ring variable")
        along = ring.var(spec.along)
        for name, a in spec.center:
            if name not in ring.variables:
                raise MalformedInputError(f"center coordinate '{name}' is not a ring variable")
            mapping[name] = ring.var(name) - along.scale(a)
    elif spec.kind == "linear_to_subspace":
        for name, form in spec.forms:
            if name not in ring.variables:
                raise MalformedInputError(f"'{name}' is not a ring variable")
            if form.total_degree() > 1:
                raise MalformedInputError(f"{form} is not linear")
            mapping[name] = form.embed(ring)
    elif spec.kind == "affine_nonlinear":
        if spec.ell0 is None:
            raise MalformedInputError("affine projection needs l_0")
        ell0 = spec.ell0.embed(ring)
        series = ring.zero()
        for k in range(spec.degree):
            series = series + ell0 ** k
        perturbation = dict(spec.perturbations)
        for name, phi in perturbation.items():
            _check_perturbation(phi.embed(ring), spec.fixed)
        for name, form in spec.forms:
            if name not in ring.variables:
                raise MalformedInputError(f"'{name}' is not a ring variable")
            shifted = ring.var(name) - form.embed(ring)
            if name in perturbation:
                shifted = shifted + perturbation[name].embed(ring)
            mapping[name] = shifted * series
    else:
        raise MalformedInputError(f"unknown projection kind '{spec.kind}'")
    return substitute(p, mapping)


def _check_perturbation(phi: Poly, fixed: Sequence[str]) -> None:
    ring = phi.ring
    restricted = {v: ring.var(v) if v in fixed else ring.zero() for v in ring.variables}
    if not substitute(phi, restricted).is_zero():
        raise MalformedInputError(f"perturbation {phi} does not vanish on the fixed coordinates {list(fixed)}")


# ---------------------------------------------------------------------------
# Derivative ideals and closed forms
# ---------------------------------------------------------------------------


def _derivative_step(gens: Sequence[Poly]) -> List[Poly]:
    out = list(gens)
    for g in gens:
        for v in g.ring.variables:
            out.append(derivative(g, v))
    return out


def derivative_ideal(f: Poly, m: int = 1) -> Ideal:
    """D^m(f): D^0 = (f), D^k = D^(k-1) plus all partials of its generators"""
    if m < 0:
        raise MalformedInputError("derivative order must be non-negative")
    gens: Sequence[Poly] = [f]
    for _ in range(m):
        gens = Ideal(f.ring, _derivative_step(gens)).groebner_basis(GREVLEX)
    return Ideal(f.ring, gens)


def chow_ideal_hypersurface_pair(f: Poly, z: str = "z", homogeneous: bool = False) -> Ideal:
    """(f, z D(f), ..., z^m D^m(f)) with m = mult_0 f, or deg f for homogeneous f"""
    if f.ring.field.characteristic() != 0:
        raise CharacteristicError("Chow equations of a hypersurface pair need characteristic 0")
    if f.is_zero():
        raise MalformedInputError("f must be nonzero")
    if z in f.ring.variables:
        if f.degree_in(z) > 0:
            raise MalformedInputError(f"f must not involve the extra variable {z}")
        ring = f.ring
    else:
        ring = f.ring.extend(back=(z,))
    m = f.total_degree() if homogeneous else f.min_degree()
    zz = ring.var(z)
    gens = [f.embed(ring)]
    for i in range(1, m + 1):
        for g in derivative_ideal(f, i).gens:
            gens.append(g.embed(ring) * zz ** i)
    logger.info(f"hypersurface pair Chow ideal: multiplicity {m}, {len(gens)} generators")
    return Ideal(ring, gens)


def axes_ring(n: int, field: FieldSpec = QQ) -> PolyRing:
    return PolyRing(field, tuple(f"x{i}" for i in range(1, n + 1)))


def axes_ideal(n: int, field: FieldSpec = QQ, ambient: Optional[int] = None) -> Ideal:
    """I(C_n): products of distinct coordinates, plus x_i for i > n in a larger ambient space"""
    m = ambient or n
    ring = axes_ring(m, field)
    x = ring.gens()
    gens = [x[i] * x[j] for i in range(m) for j in range(i + 1, m)]
    gens += [x[i] for i in range(n, m)]
    return Ideal(ring, gens)


def axes_exceptional(w: Sequence[int]) -> bool:
    """Degree-n monomials missing from the Chow ideal of C_n"""
    n = len(w)
    if any(e == n for e in w):
        return True
    return n % 2 == 1 and all(e == 1 for e in w)


def chow_ideal_axes(n: int, field: FieldSpec = QQ) -> Ideal:
    """All degree-n monomials except x_i^n, and except x_1...x_n when n is odd"""
    if n < 2:
        raise PreconditionError("C_n needs n >= 2")
    ring = axes_ring(n, field)
    gens = [ring.monomial(w) for w in compositions(n, n) if not axes_exceptional(w)]
    return Ideal(ring, gens)


def axes_projection_pullback(a: Sequence[Scalar], b: Sequence[Scalar], ring: Optional[PolyRing] = None) -> Poly:
    """prod_j sum_i (a_i b_j - a_j b_i) x_i"""
    if len(a) != len(b):
        raise MalformedInputError("a and b must have the same length")
    n = len(a)
    ring = ring or axes_ring(n)
    x = ring.gens()
    result = ring.one()
    for j in range(n):
        factor = ring.zero()
        for i in range(n):
            factor = factor + x[i].scale(Fraction(a[i]) * b[j] - Fraction(a[j]) * b[i])
        result = result * factor
    return result


def find_weight_subset(w: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """A subset I (1-based) with sum_{i in I} w_i = n - |I|, smallest first"""
    n = len(w)
    if sum(w) != n or any(e < 0 for e in w):
        raise MalformedInputError(f"{tuple(w)} is not the exponent vector of a degree-{n} monomial")
    if n > config.MAX_SUBSET_SIZE:
        raise PreconditionError(f"subset search is limited to n <= {config.MAX_SUBSET_SIZE}")
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            if sum(w[i] for i in subset) == n - size:
                return tuple(i + 1 for i in subset)
    return None


# ---------------------------------------------------------------------------
# Cycles, sampling and hulls
# ---------------------------------------------------------------------------


@dataclass
class CycleSpec:
    """sum_i m_i Z_i with Z_i given by (prime) ideals"""

    components: List[Tuple[Ideal, int]]

    def __post_init__(self):
        if not self.components:
            raise MalformedInputError("a cycle needs at least one component")
        ring = self.components[0][0].ring
        for ideal, mult in self.components:
            ring.check_compatible(ideal.ring)
            if mult < 1:
                raise MalformedInputError("multiplicities must be positive")
        for (a, _), (b, _) in itertools.combinations(self.components, 2):
            if a.equals(b):
                raise MalformedInputError(f"components {a} and {b} coincide")

    @property
    def ring(self) -> PolyRing:
        return self.components[0][0].ring

    @classmethod
    def reduced(cls, ideals: Sequence[Ideal]) -> "CycleSpec":
        return cls([(i, 1) for i in ideals])


def axes_cycle(n: int, field: FieldSpec = QQ) -> CycleSpec:
    """C_n as the sum of its n coordinate axes"""
    ring = axes_ring(n, field)
    x = ring.gens()
    return CycleSpec.reduced([Ideal(ring, [x[i] for i in range(n) if i != j]) for j in range(n)])


def homogeneous_degree(ideal: Ideal) -> int:
    """Degree of the projective cycle cut out by a homogeneous ideal"""
    d = ideal.dimension()
    if d <= 0:
        raise PreconditionError("the degree needs a positive-dimensional cone")
    top = max(g.total_degree() for g in ideal.groebner_basis(GREVLEX))
    start = 4 * top + 8
    values = [ideal.hilbert_count(start + k) for k in range(d + 1)]
    for _ in range(d):
        values = [b - a for a, b in zip(values, values[1:])]
    return values[0]


@dataclass
class _ComponentData:
    ideal: Ideal
    multiplicity: int
    direction: Optional[List[Scalar]] = None
    dimension: int = 1
    degree: int = 1


def _prepare(cycle: CycleSpec) -> List[_ComponentData]:
    out = []
    field = cycle.ring.field
    for ideal, mult in cycle.components:
        if any(not g.is_homogeneous() for g in ideal.gens):
            raise PreconditionError(f"component {ideal} is not homogeneous (a cone over a projective cycle)")
        data = _ComponentData(ideal=ideal, multiplicity=mult, dimension=ideal.dimension())
        if data.dimension < 1:
            raise PreconditionError(f"component {ideal} has no positive-dimensional cone")
        linear = all(g.total_degree() == 1 for g in ideal.gens)
        if linear and data.dimension == 1:
            rows = [[g.coefficient(_unit(i, ideal.ring.nvars)) for i in range(ideal.ring.nvars)] for g in ideal.gens]
            (data.direction,) = nullspace(rows, ideal.ring.nvars, field)
        else:
            data.degree = homogeneous_degree(ideal)
        out.append(data)
    dims = {c.dimension for c in out}
    if len(dims) != 1:
        raise PreconditionError("cycle components must have equal dimension")
    return out


def _unit(i: int, n: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def _linear_forms(ring: PolyRing, matrix: Sequence[Sequence[int]]) -> List[Poly]:
    x = ring.gens()
    out = []
    for row in matrix:
        form = ring.zero()
        for c, xi in zip(row, x):
            form = form + xi.scale(c)
        out.append(form)
    return out


def _component_equation(comp: _ComponentData, matrix: Sequence[Sequence[int]]) -> Optional[Poly]:
    """Pullback of the image equation of one component, or None if the projection is not finite on it"""
    ring = comp.ideal.ring
    field = ring.field
    forms = _linear_forms(ring, matrix)
    if comp.direction is not None:
        # line through the origin: image point (L_0 d, L_1 d)
        p0 = field.normalize(sum(c * d for c, d in zip(matrix[0], comp.direction)))
        p1 = field.normalize(sum(c * d for c, d in zip(matrix[1], comp.direction)))
        if p0 == 0 and p1 == 0:
            return None
        return (forms[0].scale(p1) - forms[1].scale(p0)) ** comp.multiplicity
    if (comp.ideal + Ideal(ring, forms)).dimension() > 0:
        return None
    targets = tuple(ring.fresh_name(f"_y{k}") for k in range(len(matrix)))
    ext = ring.extend(back=targets)
    graph = [g.embed(ext) for g in comp.ideal.gens]
    graph += [ext.var(t) - f.embed(ext) for t, f in zip(targets, forms)]
    image = Ideal(ext, graph).eliminate(ring.variables)
    if len(image.gens) != 1:
        return None
    g = image.gens[0].monic()
    if g.total_degree() < 1 or comp.degree % g.total_degree():
        raise InvariantViolation(f"image degree {g.total_degree()} does not divide {comp.degree}")
    map_degree = comp.degree // g.total_degree()
    pulled = substitute(g, {t: f for t, f in zip(targets, forms)})
    return pulled ** (map_degree * comp.multiplicity)


def _draw_matrix(rng: random.Random, rows: int, cols: int) -> List[List[int]]:
    bound = config.SAMPLE_BOUND
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def _chow_equation(components: Sequence[_ComponentData], matrix: Sequence[Sequence[int]]) -> Optional[Poly]:
    total: Optional[Poly] = None
    for comp in components:
        eq = _component_equation(comp, matrix)
        if eq is None or eq.is_zero():
            return None
        total = eq if total is None else total * eq
    return total


class _Merger:
    """Growing ideal; same-degree homogeneous forms are merged by linear algebra"""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.gens: List[Poly] = []
        self.degree: Optional[int] = None
        self.span = EchelonSpan(ring.field)

    def add(self, p: Poly) -> bool:
        if p.is_homogeneous() and self.degree in (None, p.total_degree()):
            self.degree = p.total_degree()
            if self.span.add(dict(p.terms)):
                self.gens.append(p)
                return True
            return False
        if Ideal(self.ring, self.gens).member(p):
            return False
        self.degree = -1
        self.gens.append(p)
        return True


@dataclass
class ChowSample:
    """Result of sampling Chow equations of random linear projections"""

    ideal: Ideal
    stabilized: bool
    draws: int
    rejected: int
    batches: int
    added_per_batch: List[int] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "stabilized" if self.stabilized else "budget exhausted"


def sample_chow_ideal(
    target: Union[Ideal, CycleSpec],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    batch: Optional[int] = None,
    workers: Optional[int] = None,
) -> ChowSample:
    """Ideal generated by Chow equations of random linear projections

    Stops once two consecutive batches add nothing (stabilized) or when the
    trial budget is spent. Draws that are not finite on the cycle are
    redrawn a bounded number of times.
    """
    cycle = target if isinstance(target, CycleSpec) else CycleSpec.reduced([target])
    trials = trials if trials is not None else config.SAMPLE_TRIALS
    batch = batch or config.SAMPLE_BATCH
    workers = workers or config.SAMPLE_WORKERS
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    components = _prepare(cycle)
    ring = cycle.ring
    rows = components[0].dimension + 1
    merger = _Merger(ring)
    draws = rejected = batches = 0
    empty_streak = 0
    added_per_batch: List[int] = []

    with ThreadPoolExecutor(max_workers=workers) as pool:
        while draws < trials:
            size = min(batch, trials - draws)
            matrices = [_draw_matrix(rng, rows, ring.nvars) for _ in range(size)]
            equations = list(pool.map(lambda m: _chow_equation(components, m), matrices))
            for slot in range(size):
                retries = 0
                while equations[slot] is None:
                    rejected += 1
                    retries += 1
                    if retries > config.MAX_REDRAWS:
                        raise PreconditionError("no projection finite on the cycle was found")
                    equations[slot] = _chow_equation(components, _draw_matrix(rng, rows, ring.nvars))
            added = sum(1 for eq in equations if merger.add(eq))
            draws += size
            batches += 1
            added_per_batch.append(added)
            logger.debug(f"chow sampling batch {batches}: {added} new equations, {draws} draws")
            empty_streak = empty_streak + 1 if added == 0 else 0
            if empty_streak >= 2:
                break

    stabilized = empty_streak >= 2
    if not stabilized:
        logger.warning(f"chow sampling exhausted its budget of {trials} draws without stabilizing")
    return ChowSample(
        ideal=Ideal(ring, merger.gens),
        stabilized=stabilized,
        draws=draws,
        rejected=rejected,
        batches=batches,
        added_per_batch=added_per_batch,
    )


def chow_hull(
    cycle: CycleSpec,
    form: Optional[Poly] = None,
    literal_field: bool = False,
    enumerate_field: bool = False,
) -> Ideal:
    """pure_part of the intersection of the element-wise powers I(Z_i)^[m_i]"""
    meet: Optional[Ideal] = None
    for ideal, mult in cycle.components:
        power = ideal.elementwise_power(mult, literal_field=literal_field, enumerate_field=enumerate_field)
        meet = power if meet is None else meet.intersect(power)
    return meet.pure_part(form)


# ---------------------------------------------------------------------------
# Checkable consequences
# ---------------------------------------------------------------------------


@dataclass
class TorsionBound:
    """Torsion of a central fiber against I(pure)/I^ch(pure)"""

    a: int
    fiber: Ideal
    torsion_length: int
    chow_quotient_length: int
    matches_display: bool

    @property
    def holds(self) -> bool:
        return self.torsion_length <= self.chow_quotient_length


def torsion_bound_check(a: int, field: FieldSpec = QQ) -> TorsionBound:
    """The surface (s, t) -> (s^a, s^(a+1), s t, t) over the curve x^(a+1) = y^a"""
    if a < 2:
        raise PreconditionError("the family needs a >= 2")
    ring = PolyRing(field, ("s", "x", "y", "z", "t"))
    s, x, y, z, t = ring.gens()
    surface = Ideal(ring, [x - s ** a, y - s ** (a + 1), z - s * t]).eliminate(["s"])
    fiber_ring = PolyRing(field, ("x", "y", "z"))
    fx, fy, fz = fiber_ring.gens()
    zero_t = {"x": fx, "y": fy, "z": fz, "t": fiber_ring.zero()}
    fiber = Ideal(fiber_ring, [substitute(g, zero_t) for g in surface.gens])
    curve = fx ** (a + 1) - fy ** a
    displayed = Ideal(fiber_ring, [curve, fz * fx] + [fz * m for m in Ideal(fiber_ring, [fy, fz]).power(a - 1).gens])
    torsion = fiber.torsion_length()
    pure = fiber.pure_part()
    plane = PolyRing(field, ("x", "y"))
    chow = chow_ideal_hypersurface_pair(plane.var("x") ** (a + 1) - plane.var("y") ** a, "z")
    chow = Ideal(fiber_ring, [g.embed(fiber_ring) for g in chow.gens])
    quotient = length_between(pure, chow)
    logger.info(f"torsion bound a={a}: torsion {torsion}, I(pure)/I^ch {quotient}")
    return TorsionBound(
        a=a,
        fiber=fiber,
        torsion_length=torsion,
        chow_quotient_length=quotient,
        matches_display=fiber.equals(displayed),
    )


@dataclass
class RestrictionCheck:
    """Whether Chow equations commute with restricting F = f + z g to z = c + a x + b y"""

    g_in_restricted_ideal: bool

    @property
    def commutes(self) -> bool:
        return self.g_in_restricted_ideal


def restriction_check(f: Poly, g: Poly, c: Scalar, a: Scalar = 0, b: Scalar = 0) -> RestrictionCheck:
    """Membership of g in D(F restricted), the derivative ideal after setting z = c + a x + b y"""
    ring = f.ring
    if ring.nvars != 2:
        raise MalformedInputError("restriction check works in two variables")
    x, y = ring.gens()
    plane = x.scale(a) + y.scale(b) + c
    restricted = f + plane * g
    ideal = derivative_ideal(restricted, 1)
    return RestrictionCheck(g_in_restricted_ideal=ideal.member(g))
