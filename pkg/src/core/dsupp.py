"""
Divisorial Support
Characteristic polynomials of multiplication matrices over the base
field, Laurent rings and dual numbers
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Union

from ..config import config
from .errors import InvariantViolation, MalformedInputError, PreconditionError
from .ideal import Ideal
from .laurent import DualPoly, LaurentPoly
from .linalg import berkowitz, det_cofactor
from .poly import Poly, PolyRing

# Set up logging
logger = logging.getLogger(__name__)

Entry = Union[Poly, LaurentPoly, DualPoly]
Equation = Union[Poly, LaurentPoly, DualPoly]


@dataclass(frozen=True)
class MultMatrix:
    """Square matrix of ring elements (a multiplication operator)"""

    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise MalformedInputError("multiplication matrix must be square")
        if n > config.MAX_MATRIX_SIZE:
            raise PreconditionError(f"matrix size {n} exceeds the limit {config.MAX_MATRIX_SIZE}")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "MultMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[Entry]]:
        return [list(row) for row in self.entries]


@dataclass
class DsuppResult:
    """Equation of the divisorial support and its Cartier verdict"""

    equation: Equation
    is_cartier: bool
    polar_witness: Optional[str] = None


def companion_matrix(g: Poly) -> MultMatrix:
    """Companion matrix of a monic one-variable polynomial: subdiagonal ones, last column -a_i"""
    used = g.variables_used()
    if len(used) > 1:
        raise PreconditionError(f"{g} is not a polynomial in one variable")
    name = used[0] if used else g.ring.variables[0]
    coeffs = g.coefficients_in(name)
    d = max(coeffs)
    if d < 1 or coeffs[d] != 1:
        raise PreconditionError(f"{g} is not monic of positive degree in {name}")
    scalars = PolyRing(g.ring.field, ())
    zero, one = scalars.zero(), scalars.one()
    rows = [[zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = one
    for i in range(d):
        a_i = coeffs.get(i)
        rows[i][d - 1] = -scalars.const(a_i.constant_term()) if a_i is not None else zero
    return MultMatrix.of(rows)


def block_diagonal(blocks: Sequence[MultMatrix]) -> MultMatrix:
    if not blocks:
        raise MalformedInputError("no blocks given")
    zero = blocks[0].entries[0][0] * 0
    n = sum(b.size for b in blocks)
    rows = [[zero] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.size):
            for j in range(b.size):
                rows[offset + i][offset + j] = b.entries[i][j]
        offset += b.size
    return MultMatrix.of(rows)


def _entry_pole_order(entry: Entry) -> int:
    if isinstance(entry, LaurentPoly):
        return entry.pole_order()
    if isinstance(entry, DualPoly):
        return max(_entry_pole_order(entry.body), _entry_pole_order(entry.eps))
    return 0


def _shift(entry: Entry, r: int) -> Entry:
    if isinstance(entry, LaurentPoly):
        return entry.shift(r)
    if isinstance(entry, DualPoly):
        return DualPoly(_shift(entry.body, r), _shift(entry.eps, r))
    return entry


def _with_variable(coeff: Any, var: str, power: int) -> Any:
    """coeff * var^power inside a ring that also contains var"""
    if isinstance(coeff, Poly):
        ring = coeff.ring.extend(back=(var,))
        return coeff.embed(ring) * (ring.var(var) ** power)
    if isinstance(coeff, LaurentPoly):
        ring = coeff.coeff_ring.extend(back=(var,))
        x = ring.var(var) ** power
        return LaurentPoly(ring, coeff.var, {k: c.embed(ring) * x for k, c in coeff.terms.items()})
    raise MalformedInputError(f"unsupported matrix entry type {type(coeff).__name__}")


def _assemble(coeffs: Sequence[Any], var: str) -> Any:
    n = len(coeffs) - 1
    total = None
    for k, c in enumerate(coeffs):
        term = _with_variable(c, var, n - k)
        total = term if total is None else total + term
    return total


def char_poly(matrix: MultMatrix, var: str = "v") -> Equation:
    """det(var*I - M), monic in var, by the Berkowitz algorithm

    Laurent entries are cleared by a common power u^r first; the
    coefficient of var^(n-k) is then c_k * u^(-r k).
    """
    n = matrix.size
    sample = matrix.entries[0][0]
    r = max(_entry_pole_order(e) for row in matrix.entries for e in row)
    rows = [[_shift(e, r) for e in row] for row in matrix.entries] if r else matrix.rows()
    one = sample * 0 + 1
    coeffs = berkowitz(rows, one)
    if r:
        coeffs = [_shift(c, -r * k) for k, c in enumerate(coeffs)]
        worst = max(_entry_pole_order(c) for c in coeffs)
        if worst > n * r:
            raise InvariantViolation(f"pole order {worst} exceeds the bound {n * r}")
    if isinstance(sample, DualPoly):
        return DualPoly(_assemble([c.body for c in coeffs], var), _assemble([c.eps for c in coeffs], var))
    return _assemble(coeffs, var)


def char_poly_cofactor(matrix: MultMatrix, var: str = "v") -> Equation:
    """det(var*I - M) by Laplace expansion; the reference for char_poly"""
    sample = matrix.entries[0][0]
    lifted = [[_with_variable(e, var, 0) for e in row] for row in matrix.entries]
    if isinstance(sample, (Poly, LaurentPoly)):
        x = _with_variable(sample * 0 + 1, var, 1)
        n = matrix.size
        shifted = [[(x if i == j else x * 0) - lifted[i][j] for j in range(n)] for i in range(n)]
        return det_cofactor(shifted, x * 0 + 1)
    raise MalformedInputError("cofactor expansion supports polynomial and Laurent entries")


def _polar_witness(value: Any) -> Optional[str]:
    if isinstance(value, LaurentPoly):
        for k in sorted(value.terms):
            if k < 0:
                return f"({value.terms[k]})*{value.var}^{k}"
    if isinstance(value, DualPoly):
        return _polar_witness(value.body) or _polar_witness(value.eps)
    return None


def dsupp(matrix: MultMatrix, var: str = "v") -> DsuppResult:
    """Divisorial support equation with the Cartier verdict"""
    equation = char_poly(matrix, var)
    witness = _polar_witness(equation)
    logger.info(f"dsupp of a {matrix.size}x{matrix.size} matrix: cartier={witness is None}")
    return DsuppResult(equation=equation, is_cartier=witness is None, polar_witness=witness)


def dsupp_torsion(mods: Sequence[Poly]) -> Poly:
    """Divisor of a torsion module sum_j k[x]/(g_j): the product of the g_j"""
    if not mods:
        raise MalformedInputError("no modules given")
    ring = mods[0].ring
    total = ring.one()
    for g in mods:
        used = g.variables_used()
        if len(used) > 1:
            raise PreconditionError(f"{g} is not a polynomial in one variable")
        if used and g.leading_coefficient() != 1:
            raise PreconditionError(f"{g} is not monic")
        total = total * g
    return total


def is_relative_cartier(eq: DualPoly, f_k: Poly, y: str, r: int) -> bool:
    """Whether f + eps*y^(-r)*g is Cartier, i.e. g in (f_k, y^r)"""
    if r < 0:
        raise MalformedInputError("pole order must be non-negative")
    body = eq.body
    if isinstance(body, LaurentPoly):
        body = body.to_poly(f_k.ring)
    if body != f_k:
        raise MalformedInputError(f"equation body {body} is not {f_k}")
    if r == 0:
        return True
    polar = eq.eps
    if isinstance(polar, Poly):
        polar = LaurentPoly.from_poly(polar, y)
    if polar.var != y:
        raise MalformedInputError(f"eps part must be a Laurent polynomial in {y}")
    if polar.pole_order() > r:
        raise MalformedInputError(f"eps part has a pole of order {polar.pole_order()} > {r}")
    g = polar.shift(r).to_poly(f_k.ring)
    y_r = f_k.ring.var(y) ** r
    return Ideal(f_k.ring, [f_k, y_r]).member(g)
