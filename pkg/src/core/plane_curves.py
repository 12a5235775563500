"""
Plane Curve Deformations
Sections on a punctured plane curve f = 0 written in the basis v^i k[u]
with Laurent coefficients, and the flat / globalizing / C-flat tests
for z = phi eps over it
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from .errors import FieldMismatchError, MalformedInputError, PreconditionError
from .laurent import LaurentPoly
from .poly import Poly, PolyRing, derivative
from .semigroup import MonomialCurve, monomial_section

# Set up logging
logger = logging.getLogger(__name__)


def _scalar_ring(f: Poly) -> PolyRing:
    return PolyRing(f.ring.field, ())


def _curve_variables(f: Poly) -> tuple:
    if f.ring.nvars != 2:
        raise MalformedInputError(f"{f} must be a polynomial in two variables (u, v)")
    return f.ring.variables


def _monic_in_v(f: Poly) -> Poly:
    """Normalize the leading v-coefficient of f to 1; it must be a nonzero constant"""
    _, v = _curve_variables(f)
    coeffs = f.coefficients_in(v)
    n = max(coeffs)
    lead = coeffs[n]
    if n < 1 or not lead.is_constant():
        raise PreconditionError(f"{f} is not monic of positive degree in {v}")
    return f.scale(f.ring.field.inv(lead.constant_term()))


@dataclass
class CurveSectionRep:
    """sum_i v^i g_i(u) on the punctured curve f = 0, i < deg_v f"""

    f: Poly
    coeffs: List[LaurentPoly]

    def __post_init__(self):
        self.f = _monic_in_v(self.f)
        if len(self.coeffs) != self.degree:
            raise MalformedInputError(f"expected {self.degree} coefficients, got {len(self.coeffs)}")

    @property
    def u(self) -> str:
        return self.f.ring.variables[0]

    @property
    def v(self) -> str:
        return self.f.ring.variables[1]

    @property
    def degree(self) -> int:
        return self.f.degree_in(self.f.ring.variables[1])

    @classmethod
    def reduce(cls, f: Poly, parts: Dict[int, LaurentPoly]) -> "CurveSectionRep":
        """Reduce sum_d v^d parts[d] modulo f by division in v"""
        f = _monic_in_v(f)
        u, v = _curve_variables(f)
        scalars = _scalar_ring(f)
        n = f.degree_in(v)
        tail = {
            k: LaurentPoly(scalars, u, {exp[0]: scalars.const(c) for exp, c in fk.terms.items()})
            for k, fk in f.coefficients_in(v).items()
            if k < n
        }
        zero = LaurentPoly.zero(scalars, u)
        work = {d: p for d, p in parts.items() if not p.is_zero()}
        while any(d >= n for d in work):
            d = max(work)
            top = work.pop(d)
            # v^d = -v^(d-n) * sum_k f_k v^k
            for k, fk in tail.items():
                work[d - n + k] = work.get(d - n + k, zero) - top * fk
        coeffs = [work.get(i, zero) for i in range(n)]
        return cls(f, coeffs)

    @classmethod
    def from_value(cls, f: Poly, value: Union[Poly, LaurentPoly]) -> "CurveSectionRep":
        """A polynomial in (u, v), or a Laurent polynomial in u with coefficients in v"""
        u, v = _curve_variables(f)
        scalars = _scalar_ring(f)
        parts: Dict[int, LaurentPoly] = {}

        def add(d: int, k: int, c) -> None:
            term = LaurentPoly(scalars, u, {k: scalars.const(c)})
            parts[d] = parts.get(d, LaurentPoly.zero(scalars, u)) + term

        if isinstance(value, Poly):
            f.ring.check_compatible(value.ring)
            for exp, c in value.terms.items():
                add(exp[1], exp[0], c)
        elif isinstance(value, LaurentPoly):
            if value.var != u:
                raise FieldMismatchError(f"Laurent variable must be {u}, got {value.var}")
            extra = [x for x in value.coeff_ring.variables if x != v]
            if extra:
                raise FieldMismatchError(f"unexpected variables {extra} in a section")
            for k, coeff in value.terms.items():
                for exp, c in coeff.terms.items():
                    d = exp[value.coeff_ring.index(v)] if value.coeff_ring.nvars else 0
                    add(d, k, c)
        else:
            raise MalformedInputError(f"cannot read a section from {type(value).__name__}")
        return cls.reduce(f, parts)

    def is_regular(self) -> bool:
        return all(g.is_regular() for g in self.coeffs)

    def polar_witness(self) -> Optional[str]:
        for i, g in enumerate(self.coeffs):
            if not g.is_regular():
                return f"v^{i} * ({g.polar_part()})"
        return None

    def __add__(self, other: "CurveSectionRep") -> "CurveSectionRep":
        if other.f != self.f:
            raise FieldMismatchError("sections live on different curves")
        return CurveSectionRep(self.f, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveSectionRep):
            return NotImplemented
        return self.f == other.f and self.coeffs == other.coeffs

    def __str__(self) -> str:
        pieces = []
        for i, g in enumerate(self.coeffs):
            if g.is_zero():
                continue
            pieces.append(f"({g})" if i == 0 else f"{self.v}^{i}*({g})")
        return " + ".join(pieces) if pieces else "0"


def section_mul(s: CurveSectionRep, p: Poly) -> CurveSectionRep:
    """s * p reduced modulo f"""
    s.f.ring.check_compatible(p.ring)
    u, v = _curve_variables(s.f)
    scalars = _scalar_ring(s.f)
    parts: Dict[int, LaurentPoly] = {}
    for i, g in enumerate(s.coeffs):
        if g.is_zero():
            continue
        for exp, c in p.terms.items():
            term = g * LaurentPoly(scalars, u, {exp[0]: scalars.const(c)})
            d = i + exp[1]
            parts[d] = parts.get(d, LaurentPoly.zero(scalars, u)) + term
    return CurveSectionRep.reduce(s.f, parts)


def detect_monomial_curve(f: Poly) -> Optional[MonomialCurve]:
    """f = v^c - u^a with gcd(a, c) = 1, i.e. the curve u = t^c, v = t^a"""
    f = _monic_in_v(f)
    if len(f.terms) != 2:
        return None
    c = f.degree_in(f.ring.variables[1])
    a = f.degree_in(f.ring.variables[0])
    expected = f.ring.monomial((0, c)) - f.ring.monomial((a, 0))
    if a < 1 or f != expected:
        return None
    try:
        return MonomialCurve(a, c)
    except PreconditionError:
        return None


def monomial_curve_section(curve: MonomialCurve, phi: LaurentPoly, f: Optional[Poly] = None) -> CurveSectionRep:
    """Rewrite a Laurent polynomial in t as a section in (u, v) = (t^c, t^a)"""
    if f is None:
        ring = PolyRing(phi.field, ("u", "v"))
        u, v = ring.gens()
        f = v ** curve.c - u ** curve.a
    scalars = _scalar_ring(f)
    u_name = f.ring.variables[0]
    parts: Dict[int, LaurentPoly] = {}
    for m, coeff in phi.terms.items():
        alpha, beta = monomial_section(curve.a, curve.c, m)
        term = LaurentPoly(scalars, u_name, {alpha: scalars.const(coeff.constant_term())})
        parts[beta] = parts.get(beta, LaurentPoly.zero(scalars, u_name)) + term
    return CurveSectionRep.reduce(f, parts)


def section_to_parameter(curve: MonomialCurve, s: CurveSectionRep, t: str = "t") -> LaurentPoly:
    """Pull a section back to the normalization k[t, t^-1]"""
    scalars = _scalar_ring(s.f)
    total = LaurentPoly.zero(scalars, t)
    for beta, g in enumerate(s.coeffs):
        for alpha, c in g.terms.items():
            total = total + LaurentPoly(scalars, t, {alpha * curve.c + beta * curve.a: c})
    return total


@dataclass
class PlaneCurveDeformation:
    """f(x, y) = psi eps and z = phi eps over the plane curve f = 0"""

    f: Poly
    psi: CurveSectionRep
    phi: CurveSectionRep
    curve: Optional[MonomialCurve] = None

    def __post_init__(self):
        self.f = _monic_in_v(self.f)
        if self.psi.f != self.f or self.phi.f != self.f:
            raise FieldMismatchError("psi and phi must be sections on the curve f = 0")
        if self.curve is None:
            self.curve = detect_monomial_curve(self.f)

    @classmethod
    def from_values(cls, f: Poly, psi, phi) -> "PlaneCurveDeformation":
        return cls(f, CurveSectionRep.from_value(f, psi), CurveSectionRep.from_value(f, phi))

    @classmethod
    def monomial(cls, curve: MonomialCurve, phi: LaurentPoly, psi: Optional[LaurentPoly] = None) -> "PlaneCurveDeformation":
        ring = PolyRing(phi.field, ("u", "v"))
        u, v = ring.gens()
        f = v ** curve.c - u ** curve.a
        psi_t = psi if psi is not None else LaurentPoly.zero(phi.coeff_ring, phi.var)
        return cls(f, monomial_curve_section(curve, psi_t, f), monomial_curve_section(curve, phi, f), curve)


@dataclass
class PlaneClassification:
    flat: bool
    globalizes: Optional[bool]
    cflat: bool
    diagnostics: List[str] = field(default_factory=list)

    @property
    def globalizes_text(self) -> str:
        return "unknown" if self.globalizes is None else ("yes" if self.globalizes else "no")


def plane_classify(d: PlaneCurveDeformation) -> PlaneClassification:
    """Flat iff phi is regular, C-flat iff f_u phi and f_v phi are; globalizing is decided for monomial curves"""
    if not d.psi.is_regular():
        return PlaneClassification(
            flat=False,
            globalizes=False,
            cflat=False,
            diagnostics=[f"psi is not regular: {d.psi.polar_witness()}"],
        )
    u, v = d.f.ring.variables
    diagnostics: List[str] = []
    flat = d.phi.is_regular()
    if not flat:
        diagnostics.append(f"phi has a pole: {d.phi.polar_witness()}")
    cflat = True
    for name in (u, v):
        product = section_mul(d.phi, derivative(d.f, name))
        if not product.is_regular():
            cflat = False
            diagnostics.append(f"f_{name} * phi has a pole: {product.polar_witness()}")
    globalizes: Optional[bool] = None
    if d.curve is not None:
        pulled = section_to_parameter(d.curve, d.phi)
        globalizes = pulled.is_regular()
        if not globalizes:
            diagnostics.append(f"phi on the normalization: {pulled}")
    else:
        diagnostics.append("normalization not available: globalizing is unknown")
    logger.info(f"plane classification: flat={flat} globalizes={globalizes} cflat={cflat}")
    return PlaneClassification(flat=flat, globalizes=globalizes, cflat=cflat, diagnostics=diagnostics)
