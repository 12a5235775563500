"""
Deformations of the Coordinate Axes
First-order deformations of C_n, the union of the n coordinate axes in
A^m, given along each axis by x_i = phi_ij(x_j) eps
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..config import config
from .dsupp import MultMatrix, char_poly
from .errors import FieldMismatchError, MalformedInputError, PreconditionError
from .fields import QQ, FieldSpec, Scalar
from .ideal import Ideal
from .laurent import DualPoly, LaurentPoly
from .linalg import nullspace, rank
from .poly import Poly, PolyRing, compositions, derivative

# Set up logging
logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def axis_variable(j: int) -> str:
    return f"x{j}"


@dataclass
class CnDeformation:
    """x_i = phi[(i, j)](x_j) eps along the x_j-axis; 1 <= i <= m, 1 <= j <= n, i != j"""

    n: int
    phi: Dict[Pair, LaurentPoly] = field(default_factory=dict)
    m: Optional[int] = None
    field: FieldSpec = QQ

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError("C_n needs n >= 2")
        self.m = self.m or self.n
        if self.m < self.n:
            raise MalformedInputError(f"ambient dimension {self.m} is smaller than n = {self.n}")
        cleaned = {}
        for (i, j), value in self.phi.items():
            if not (1 <= i <= self.m and 1 <= j <= self.n and i != j):
                raise MalformedInputError(f"no entry ({i}, {j}) for C_{self.n} in A^{self.m}")
            if value.var != axis_variable(j):
                raise MalformedInputError(f"phi_{i}{j} must be a Laurent polynomial in {axis_variable(j)}")
            if value.field != self.field:
                raise FieldMismatchError(f"phi_{i}{j} lives over {value.field}, expected {self.field}")
            if value.coeff_ring.nvars:
                raise MalformedInputError(f"phi_{i}{j} must have scalar coefficients")
            if not value.is_zero():
                cleaned[(i, j)] = value
        self.phi = cleaned

    @property
    def scalars(self) -> PolyRing:
        return PolyRing(self.field, ())

    @classmethod
    def from_scalars(
        cls,
        n: int,
        data: Mapping[Pair, Mapping[int, Scalar]],
        m: Optional[int] = None,
        field: FieldSpec = QQ,
    ) -> "CnDeformation":
        scalars = PolyRing(field, ())
        phi = {(i, j): LaurentPoly.from_scalars(scalars, axis_variable(j), dict(c)) for (i, j), c in data.items()}
        return cls(n, phi, m, field)

    @classmethod
    def simple_poles(
        cls,
        n: int,
        residues: Mapping[Pair, Scalar],
        constants: Optional[Mapping[Pair, Scalar]] = None,
        m: Optional[int] = None,
        field: FieldSpec = QQ,
    ) -> "CnDeformation":
        """phi_ij = c_ij / x_j + e_ij"""
        data: Dict[Pair, Dict[int, Scalar]] = {}
        for key, c in residues.items():
            data.setdefault(key, {})[-1] = c
        for key, e in (constants or {}).items():
            data.setdefault(key, {})[0] = e
        return cls.from_scalars(n, data, m, field)

    def pairs(self) -> List[Pair]:
        return [(i, j) for j in range(1, self.n + 1) for i in range(1, self.m + 1) if i != j]

    def entry(self, i: int, j: int) -> LaurentPoly:
        if j > self.n:
            return LaurentPoly.zero(self.scalars, axis_variable(j))
        return self.phi.get((i, j), LaurentPoly.zero(self.scalars, axis_variable(j)))

    def residue(self, i: int, j: int) -> Scalar:
        return self.entry(i, j).coefficient(-1).constant_term()

    def max_pole_order(self) -> int:
        return max((p.pole_order() for p in self.phi.values()), default=0)

    def along(self, i: int, j: int, var: str = "u") -> LaurentPoly:
        """phi_ij as a Laurent polynomial in the projection coordinate"""
        return self.entry(i, j).rename(var)


def cn_normalize(d: CnDeformation) -> CnDeformation:
    """Drop the strictly positive part of every phi_ij (absorbed into coordinates)"""
    phi = {key: p.truncate_above(0) for key, p in d.phi.items()}
    return CnDeformation(d.n, phi, d.m, d.field)


def cn_is_flat(d: CnDeformation) -> bool:
    if d.n >= 3:
        return all(p.is_regular() for p in d.phi.values())
    # two lines: simple poles on phi_12, phi_21 with equal residues
    for (i, j), p in d.phi.items():
        limit = 1 if {i, j} == {1, 2} else 0
        if p.pole_order() > limit:
            return False
    return d.residue(1, 2) == d.residue(2, 1)


def cn_is_kflat(d: CnDeformation) -> bool:
    """Only simple poles, and phi_ij, phi_ji have the same residue (missing entries count as 0)"""
    if d.max_pole_order() > 1:
        return False
    for i in range(1, d.m + 1):
        for k in range(i + 1, d.m + 1):
            if d.residue(i, k) != d.residue(k, i):
                return False
    return True


def cn_chow_vanishing(d: CnDeformation) -> bool:
    """The ideal of Chow equations lifts iff every pole order is at most n - 2"""
    if d.n < 3:
        raise PreconditionError("the Chow-equation criterion needs n >= 3")
    return d.max_pole_order() <= d.n - 2


def cn_rescale(d: CnDeformation, lam: Sequence[Scalar]) -> CnDeformation:
    """Reparametrize x_i = y_i / lam_i: phi_ij becomes lam_i * phi_ij(y_j / lam_j)"""
    if len(lam) != d.m:
        raise MalformedInputError(f"need {d.m} scalings, got {len(lam)}")
    f = d.field
    lam = [f.normalize(x) for x in lam]
    if any(x == 0 for x in lam):
        raise PreconditionError("scalings must be nonzero")
    phi = {}
    for (i, j), p in d.phi.items():
        stretched = p.scale_variable(f.inv(lam[j - 1]))
        phi[(i, j)] = LaurentPoly(stretched.coeff_ring, stretched.var, {k: c.scale(lam[i - 1]) for k, c in stretched.terms.items()})
    return CnDeformation(d.n, phi, d.m, d.field)


# ---------------------------------------------------------------------------
# Projections to the plane
# ---------------------------------------------------------------------------


@dataclass
class CnProjection:
    """prod_j (v - abar_j u) - B eps"""

    base: Poly
    B: LaurentPoly

    @property
    def regular(self) -> bool:
        return self.B.is_regular()


def _check_projection(d: CnDeformation, abar: Sequence[Scalar]) -> List[Scalar]:
    if len(abar) != d.m:
        raise MalformedInputError(f"need {d.m} projection coefficients, got {len(abar)}")
    values = [d.field.normalize(a) for a in abar]
    if len(set(values[: d.n])) != d.n:
        raise PreconditionError("abar_j must be pairwise distinct on the axes")
    return values


def _u_monomial(d: CnDeformation, k: int, c: Scalar) -> LaurentPoly:
    return LaurentPoly.from_scalars(d.scalars, "u", {k: c})


def _equation_parts(d: CnDeformation, entries: Sequence[DualPoly]) -> CnProjection:
    zero = DualPoly.lift(LaurentPoly.zero(d.scalars, "u"))
    rows = [[entries[r] if r == s else zero for s in range(d.n)] for r in range(d.n)]
    eq = char_poly(MultMatrix.of(rows), "v")
    base = eq.body.to_poly(PolyRing(d.field, ("u", "v")))
    return CnProjection(base=base, B=-eq.eps)


def cn_projection_equation(d: CnDeformation, abar: Sequence[Scalar], aprime: Sequence[Scalar]) -> CnProjection:
    """Equation of the projection u = sum x_i, v = sum a_i x_i with a_i = abar_i + aprime_i eps

    Multiplication by v is diagonal on the branches, with entry
    abar_j u + eps (aprime_j u + sum_i (abar_i - abar_j) phi_ij(u)) on the x_j-axis.
    """
    abar = _check_projection(d, abar)
    if len(aprime) != d.m:
        raise MalformedInputError(f"need {d.m} first-order coefficients, got {len(aprime)}")
    entries = []
    for j in range(1, d.n + 1):
        body = _u_monomial(d, 1, abar[j - 1])
        eps = _u_monomial(d, 1, aprime[j - 1])
        for i in range(1, d.m + 1):
            if i != j:
                eps = eps + d.along(i, j) * (abar[i - 1] - abar[j - 1])
        entries.append(DualPoly(body, eps))
    return _equation_parts(d, entries)


def cn_projection_b_direct(d: CnDeformation, abar: Sequence[Scalar], aprime: Sequence[Scalar]) -> LaurentPoly:
    """sum_j prod_{k != j} (v - abar_k u) * (aprime_j u + sum_i (abar_i - abar_j) phi_ij(u))"""
    abar = _check_projection(d, abar)
    ring = PolyRing(d.field, ("v",))
    v = ring.var("v")

    def lift(p: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(ring, "u", {k: c.embed(ring) for k, c in p.terms.items()})

    total = LaurentPoly.zero(ring, "u")
    for j in range(1, d.n + 1):
        product = LaurentPoly.monomial(ring, "u", 0, 1)
        for k in range(1, d.n + 1):
            if k != j:
                product = product * LaurentPoly(ring, "u", {0: v, 1: ring.const(-abar[k - 1])})
        inner = _u_monomial(d, 1, aprime[j - 1])
        for i in range(1, d.m + 1):
            if i != j:
                inner = inner + d.along(i, j) * (abar[i - 1] - abar[j - 1])
        total = total + product * lift(inner)
    return total


def _eval_series(coeffs: Mapping[int, Scalar], x: DualPoly) -> DualPoly:
    total = x * 0
    for power, c in coeffs.items():
        if power < 1:
            raise MalformedInputError("projection series must vanish at 0")
        total = total + (x ** power) * c
    return total


def cn_nonlinear_projection_equation(
    d: CnDeformation,
    alpha: Mapping[int, Mapping[int, Scalar]],
    beta: Optional[Mapping[Pair, Mapping[int, Scalar]]] = None,
) -> CnProjection:
    """Projection u = sum x_i, v = sum alpha_i(x_i) + sum x_i beta_ij(x_j)

    alpha_i and beta_ij are power series without constant term, given as
    {power: coefficient}. On the x_j-axis x_j = u - eps sum_i phi_ij(u)
    and x_i = eps phi_ij(u).
    """
    beta = beta or {}
    linear = [alpha.get(i, {}).get(1, 0) for i in range(1, d.m + 1)]
    _check_projection(d, linear)
    entries = []
    for j in range(1, d.n + 1):
        zero = LaurentPoly.zero(d.scalars, "u")
        drift = zero
        for i in range(1, d.m + 1):
            if i != j:
                drift = drift + d.along(i, j)
        coords = {j: DualPoly(_u_monomial(d, 1, 1), -drift)}
        for i in range(1, d.m + 1):
            if i != j:
                coords[i] = DualPoly(zero, d.along(i, j))
        value = DualPoly.lift(zero)
        for i, series in alpha.items():
            value = value + _eval_series(series, coords[i])
        for (i, k), series in beta.items():
            if i == k:
                raise MalformedInputError("beta_ij needs i != j")
            value = value + coords[i] * _eval_series(series, coords[k])
        entries.append(value)
    return _equation_parts(d, entries)


@dataclass
class ProjectionCheck:
    """Outcome of the projection cross-check for K-flatness"""

    consistent: bool
    draws: int
    refutation: Optional[Dict[str, List]] = None


def _draw_scalar(rng: random.Random, fieldspec: FieldSpec, nonzero: bool = False) -> Scalar:
    bound = config.SAMPLE_BOUND
    for _ in range(config.MAX_REDRAWS):
        value = fieldspec.normalize(rng.randint(-bound, bound))
        if not nonzero or value != 0:
            return value
    raise PreconditionError("no nonzero scalar was drawn")


def _draw_distinct(rng: random.Random, d: CnDeformation) -> List[Scalar]:
    for _ in range(config.MAX_REDRAWS):
        values = [_draw_scalar(rng, d.field) for _ in range(d.m)]
        if len(set(values[: d.n])) == d.n:
            return values
    raise PreconditionError(f"could not draw {d.n} distinct projection coefficients over {d.field}")


def cn_kflat_by_projections(d: CnDeformation, draws: Optional[int] = None, seed: Optional[int] = None) -> ProjectionCheck:
    """Random linear projections, then the same after random axis rescalings

    A projection whose B has a pole refutes K-flatness; all draws regular is
    only evidence for it.
    """
    draws = draws or config.KFLAT_DRAWS
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    total = 0
    for rescaled in (False, True):
        for _ in range(draws):
            lam = [_draw_scalar(rng, d.field, nonzero=True) for _ in range(d.m)] if rescaled else [1] * d.m
            target = cn_rescale(d, lam) if rescaled else d
            abar = _draw_distinct(rng, d)
            aprime = [_draw_scalar(rng, d.field) for _ in range(d.m)]
            total += 1
            if not cn_projection_equation(target, abar, aprime).regular:
                logger.info(f"projection refutes K-flatness after {total} draws")
                return ProjectionCheck(
                    consistent=False,
                    draws=total,
                    refutation={"abar": abar, "aprime": aprime, "lambda": lam},
                )
    return ProjectionCheck(consistent=True, draws=total)


# ---------------------------------------------------------------------------
# Central fiber
# ---------------------------------------------------------------------------


def _axis_restriction(p: Poly, j: int) -> Dict[int, Scalar]:
    """p on the x_j-axis as {power of x_j: coefficient}"""
    out: Dict[int, Scalar] = {}
    idx = j - 1
    for exp, c in p.terms.items():
        if all(e == 0 for k, e in enumerate(exp) if k != idx):
            out[exp[idx]] = c
    return out


def _quadric_basis(d: CnDeformation, ring: PolyRing) -> List[Poly]:
    x = ring.gens()
    basis = [x[i] for i in range(d.n, d.m)]
    basis += [x[i] * x[k] for i in range(d.m) for k in range(i + 1, d.m)]
    basis += [x[i] * x[i] for i in range(d.n, d.m)]
    return basis


def cn_central_fiber_ideal(d: CnDeformation) -> Ideal:
    """Central fiber of a simple-pole deformation

    F_0 in I(C_n) lifts to F_0 + F_1 eps iff every
    h_j = -sum_i (dF_0/dx_i on the x_j-axis) phi_ij is regular and the
    h_j(0) agree. Only the quadric part is constrained; every cubic in
    I(C_n) lifts.
    """
    if d.max_pole_order() > 1:
        raise PreconditionError("the central fiber is computed for simple poles only")
    fieldspec = d.field
    ring = PolyRing(fieldspec, tuple(axis_variable(i) for i in range(1, d.m + 1)))
    basis = _quadric_basis(d, ring)
    # columns: basis elements; rows: polar coefficients of h_j and h_j(0) - h_1(0)
    contributions: List[Dict[Tuple[int, int], Scalar]] = []
    for b in basis:
        h: Dict[Tuple[int, int], Scalar] = {}
        for j in range(1, d.n + 1):
            for i in range(1, d.m + 1):
                if i == j:
                    continue
                restricted = _axis_restriction(derivative(b, axis_variable(i)), j)
                if not restricted:
                    continue
                phi = d.entry(i, j)
                for power, c in restricted.items():
                    for k, coeff in phi.terms.items():
                        key = (j, power + k)
                        h[key] = h.get(key, 0) - c * coeff.constant_term()
        contributions.append(h)
    keys = sorted({key for h in contributions for key in h if key[1] <= 0})
    rows = []
    for key in keys:
        if key[1] < 0:
            rows.append([fieldspec.normalize(h.get(key, 0)) for h in contributions])
    for j in range(2, d.n + 1):
        rows.append([fieldspec.normalize(h.get((j, 0), 0) - h.get((1, 0), 0)) for h in contributions])
    solutions = nullspace(rows, len(basis), fieldspec)
    gens = []
    for vec in solutions:
        g = ring.zero()
        for coeff, b in zip(vec, basis):
            g = g + b.scale(coeff)
        gens.append(g)
    for exp in compositions(3, d.m):
        if not any(e == 3 for e in exp[: d.n]):
            gens.append(ring.monomial(exp))
    logger.info(f"central fiber of C_{d.n}: {len(solutions)} of {len(basis)} quadrics lift")
    return Ideal(ring, gens)


def cn_central_fiber_torsion(d: CnDeformation) -> int:
    return cn_central_fiber_ideal(d).torsion_length()


# ---------------------------------------------------------------------------
# Smoothings
# ---------------------------------------------------------------------------


@dataclass
class CnSmoothing:
    """(p_i - p_j) x_i x_j + (lam_j x_i - lam_i x_j) t and its tangent e_ij = lam_i / (p_i - p_j)"""

    equations: List[Poly]
    first_order: Dict[Pair, Scalar]
    deformation: CnDeformation


def smoothing_first_order(p: Sequence[Scalar], lam: Sequence[Scalar], fieldspec: FieldSpec = QQ) -> Dict[Pair, Scalar]:
    n = len(p)
    if len(lam) != n:
        raise MalformedInputError("p and lambda must have the same length")
    p = [fieldspec.normalize(x) for x in p]
    lam = [fieldspec.normalize(x) for x in lam]
    if len(set(p)) != n:
        raise PreconditionError("the points p_i must be distinct")
    if any(x == 0 for x in lam):
        raise PreconditionError("lambda_i must be nonzero")
    return {(i + 1, j + 1): fieldspec.div(lam[i], p[i] - p[j]) for i in range(n) for j in range(n) if i != j}


def cn_smoothing(p: Sequence[Scalar], lam: Sequence[Scalar], fieldspec: FieldSpec = QQ) -> CnSmoothing:
    e = smoothing_first_order(p, lam, fieldspec)
    n = len(p)
    ring = PolyRing(fieldspec, tuple(axis_variable(i) for i in range(1, n + 1)) + ("t",))
    x = ring.gens()
    t = x[-1]
    equations = []
    for i in range(n):
        for j in range(i + 1, n):
            equations.append(
                (x[i] * x[j]).scale(Fraction(p[i]) - p[j]) + (x[i].scale(lam[j]) - x[j].scale(lam[i])) * t
            )
    deformation = CnDeformation.from_scalars(n, {key: {0: value} for key, value in e.items()}, field=fieldspec)
    return CnSmoothing(equations=equations, first_order=e, deformation=deformation)


def cn_translation_difference(e: Mapping[Pair, Scalar], e2: Mapping[Pair, Scalar]) -> Optional[Dict[int, Scalar]]:
    """a with e_ij - e2_ij = a_i for all j, if the two data differ by a translation"""
    if set(e) != set(e2):
        raise MalformedInputError("first-order data must have the same index set")
    shift: Dict[int, Scalar] = {}
    for (i, j), value in e.items():
        diff = value - e2[(i, j)]
        if shift.setdefault(i, diff) != diff:
            return None
    return shift


@dataclass
class SpanRank:
    raw: int
    modulo_translations: int
    dimension: int


def cn_smoothing_span_rank(samples: Sequence[Tuple[Sequence[Scalar], Sequence[Scalar]]], n: int, fieldspec: FieldSpec = QQ) -> SpanRank:
    """Rank of the tangent vectors e(p, lambda) in the n(n-1)-dimensional space of constant data"""
    if len(samples) < 2:
        raise MalformedInputError("need at least two samples")
    index = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    rows = []
    for p, lam in samples:
        if len(p) != n:
            raise MalformedInputError(f"sample of length {len(p)} for n = {n}")
        e = smoothing_first_order(p, lam, fieldspec)
        rows.append([e[key] for key in index])
    translations = [[fieldspec.one() if key[0] == i else fieldspec.zero() for key in index] for i in range(1, n + 1)]
    raw = rank(rows, fieldspec)
    modulo = rank(rows + translations, fieldspec) - rank(translations, fieldspec)
    logger.info(f"smoothing span for n={n}: rank {raw}, modulo translations {modulo}")
    return SpanRank(raw=raw, modulo_translations=modulo, dimension=len(index))
