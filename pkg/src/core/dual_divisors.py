"""
Divisors over Dual Numbers
Principality of f + eps y^(-r) g and the standard examples of
generically Cartier ideals over k[eps] with embedded torsion
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import MalformedInputError
from .fields import QQ, FieldSpec
from .ideal import Ideal
from .poly import Poly, PolyRing, substitute

# Set up logging
logger = logging.getLogger(__name__)


@dataclass
class CartierReport:
    """g in (f, y^r), with the non-zerodivisor preconditions that make it meaningful"""

    principal: bool
    preconditions_hold: bool
    diagnostics: List[str] = field(default_factory=list)

    @property
    def decided(self) -> bool:
        return self.preconditions_hold


def _non_zerodivisor(y: Poly, p: Poly) -> bool:
    """y is a non-zerodivisor modulo (p): (p) : y == (p)"""
    ideal = Ideal(p.ring, [p])
    return ideal.quotient(y).equals(ideal)


def cartier_principal_test(f_k: Poly, g_k: Poly, y: str, r: int) -> CartierReport:
    """The divisor (f + eps y^(-r) g = 0) is Cartier iff g in (f, y^r)"""
    if r < 0:
        raise MalformedInputError("the pole order r must be non-negative")
    ring = f_k.ring
    ring.check_compatible(g_k.ring)
    if y not in ring.variables:
        raise MalformedInputError(f"'{y}' is not a ring variable")
    yy = ring.var(y)
    diagnostics = []
    hold = True
    if not f_k.is_zero() and not _non_zerodivisor(yy, f_k):
        hold = False
        diagnostics.append(f"{y} is a zero divisor modulo f = {f_k}")
    if not g_k.is_zero() and not _non_zerodivisor(yy, g_k):
        hold = False
        diagnostics.append(f"{y} is a zero divisor modulo g = {g_k}")
    principal = Ideal(ring, [f_k, yy ** r]).member(g_k)
    if not hold:
        logger.warning(f"cartier test for r={r}: preconditions fail, answer is not decided")
    return CartierReport(principal=principal, preconditions_hold=hold, diagnostics=diagnostics)


@dataclass
class DualExample:
    """An ideal over k[eps] together with its central fiber and torsion"""

    kind: str
    ideal: Ideal
    central_fiber: Ideal
    torsion: int
    expected_torsion: int

    @property
    def verified(self) -> bool:
        return self.torsion == self.expected_torsion


def _dual_ring(fieldspec: FieldSpec) -> PolyRing:
    return PolyRing(fieldspec, ("u", "v", "eps"))


def _central_fiber(ideal: Ideal) -> Ideal:
    plane = PolyRing(ideal.ring.field, ("u", "v"))
    mapping = {"u": plane.var("u"), "v": plane.var("v"), "eps": plane.zero()}
    return Ideal(plane, [substitute(g, mapping) for g in ideal.gens])


def example_ideal_generators(
    kind: str,
    r: int = 2,
    q: Optional[Poly] = None,
    f: Optional[Poly] = None,
    g: Optional[Poly] = None,
    fieldspec: FieldSpec = QQ,
) -> DualExample:
    """Generators in k[u, v, eps] (eps^2 included) for smooth-r, cusp or jfg

    smooth-r: (v^2, v u^r + q(u) eps, v eps), torsion k[u]/(u^r)
    cusp:     ((v^2 - u^3)^2, v (v^2 - u^3) + eps, (v^2 - u^3) eps), torsion of length 3
    jfg:      (f^2, f g + eps, f eps), torsion R/(f, g)
    """
    ring = _dual_ring(fieldspec)
    u, v, eps = ring.gens()
    plane = PolyRing(fieldspec, ("u", "v"))
    if kind == "smooth-r":
        if r < 1:
            raise MalformedInputError("smooth-r needs r >= 1")
        qq = (q if q is not None else plane.one() + plane.var("u")).embed(ring)
        if qq.degree_in("v") > 0:
            raise MalformedInputError("q must be a polynomial in u")
        if qq.constant_term() == 0:
            raise MalformedInputError("q(0) must be nonzero")
        gens = [v ** 2, v * u ** r + qq * eps, v * eps]
        expected = r
    elif kind == "cusp":
        cusp = v ** 2 - u ** 3
        gens = [cusp ** 2, v * cusp + eps, cusp * eps]
        expected = 3
    elif kind == "jfg":
        if f is None or g is None:
            raise MalformedInputError("jfg needs f and g")
        ff, gg = f.embed(ring), g.embed(ring)
        gens = [ff ** 2, ff * gg + eps, ff * eps]
        expected = Ideal(plane, [f.embed(plane), g.embed(plane)]).colength()
    else:
        raise MalformedInputError(f"unknown example kind '{kind}'")
    ideal = Ideal(ring, gens + [eps ** 2])
    central = _central_fiber(ideal)
    torsion = central.torsion_length()
    logger.info(f"{kind} example: torsion {torsion}, expected {expected}")
    return DualExample(kind=kind, ideal=ideal, central_fiber=central, torsion=torsion, expected_torsion=expected)
