"""
Laurent and Dual-Number Values
One-variable Laurent polynomials with polynomial coefficients, and
first-order values p0 + p1*eps with eps^2 = 0
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .errors import FieldMismatchError, PreconditionError, ZeroInputError
from .fields import Scalar
from .poly import Poly, PolyRing, format_monomial

# Set up logging
logger = logging.getLogger(__name__)


class LaurentPoly:
    """sum_k c_k * var^k with k in Z and c_k polynomials in the other variables"""

    __slots__ = ("coeff_ring", "var", "terms")

    def __init__(self, coeff_ring: PolyRing, var: str, terms: Dict[int, Poly]):
        if var in coeff_ring.variables:
            raise FieldMismatchError(f"Laurent variable '{var}' also occurs in {coeff_ring}")
        self.coeff_ring = coeff_ring
        self.var = var
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, coeff_ring: PolyRing, var: str) -> "LaurentPoly":
        return cls(coeff_ring, var, {})

    @classmethod
    def monomial(cls, coeff_ring: PolyRing, var: str, k: int, c: Any = 1) -> "LaurentPoly":
        coeff = c if isinstance(c, Poly) else coeff_ring.const(c)
        return cls(coeff_ring, var, {k: coeff})

    @classmethod
    def from_scalars(cls, coeff_ring: PolyRing, var: str, coeffs: Dict[int, Scalar]) -> "LaurentPoly":
        return cls(coeff_ring, var, {k: coeff_ring.const(c) for k, c in coeffs.items()})

    @classmethod
    def from_poly(cls, p: Poly, var: str) -> "LaurentPoly":
        """View p as a Laurent polynomial in var over the remaining variables"""
        coeff_ring = p.ring.drop([var])
        parts = p.coefficients_in(var)
        return cls(coeff_ring, var, {k: c.embed(coeff_ring) for k, c in parts.items()})

    # -- inspection ---------------------------------------------------------

    @property
    def field(self):
        return self.coeff_ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def ord(self) -> int:
        """Minimal exponent with a nonzero coefficient"""
        if not self.terms:
            raise ZeroInputError("ord of the zero Laurent polynomial")
        return min(self.terms)

    def pole_order(self) -> int:
        return max(0, -self.ord()) if self.terms else 0

    def is_regular(self) -> bool:
        return all(k >= 0 for k in self.terms)

    def coefficient(self, k: int) -> Poly:
        return self.terms.get(k, self.coeff_ring.zero())

    def residue(self) -> Poly:
        return self.coefficient(-1)

    def constant_term(self) -> Poly:
        return self.coefficient(0)

    def polar_part(self) -> "LaurentPoly":
        return LaurentPoly(self.coeff_ring, self.var, {k: c for k, c in self.terms.items() if k < 0})

    def regular_part(self) -> "LaurentPoly":
        return LaurentPoly(self.coeff_ring, self.var, {k: c for k, c in self.terms.items() if k >= 0})

    def truncate_above(self, k: int) -> "LaurentPoly":
        """Keep exponents <= k"""
        return LaurentPoly(self.coeff_ring, self.var, {e: c for e, c in self.terms.items() if e <= k})

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())).is_constant()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if other.var != self.var:
            raise FieldMismatchError(f"Laurent variables differ: {self.var} vs {other.var}")
        self.coeff_ring.check_compatible(other.coeff_ring)

    def _coerce(self, other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.monomial(self.coeff_ring, self.var, 0, other)
        if isinstance(other, Poly):
            self.coeff_ring.check_compatible(other.ring)
            return LaurentPoly(self.coeff_ring, self.var, {0: other})
        return None

    def __add__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(self.coeff_ring, self.var, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.coeff_ring, self.var, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.coeff_ring, self.var, {k: c.scale(other) for k, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: Dict[int, Poly] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = k1 + k2
                prod = c1 * c2
                out[k] = out[k] + prod if k in out else prod
        return LaurentPoly(self.coeff_ring, self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit_monomial():
                raise PreconditionError("only unit monomials have negative powers")
            (e, c), = self.terms.items()
            inv = self.field.inv(c.constant_term())
            return LaurentPoly.monomial(self.coeff_ring, self.var, e * k, self.field.normalize(inv ** (-k)))
        result = LaurentPoly.monomial(self.coeff_ring, self.var, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k"""
        return LaurentPoly(self.coeff_ring, self.var, {e + k: c for e, c in self.terms.items()})

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self.coeff_ring, var, self.terms)

    def scale_variable(self, lam: Scalar) -> "LaurentPoly":
        """phi(var) -> phi(lam * var), lam a nonzero scalar"""
        field = self.field
        lam = field.normalize(lam)
        if lam == 0:
            raise ZeroInputError("cannot rescale by zero")
        inv = field.inv(lam)
        out = {}
        for k, c in self.terms.items():
            factor = field.normalize(lam ** k) if k >= 0 else field.normalize(inv ** (-k))
            out[k] = c.scale(factor)
        return LaurentPoly(self.coeff_ring, self.var, out)

    def to_poly(self, ring: PolyRing) -> Poly:
        """Convert a regular value into a polynomial ring containing var and the coefficient variables"""
        if not self.is_regular():
            raise PreconditionError(f"{self} has a pole in {self.var}")
        total = ring.zero()
        x = ring.var(self.var)
        for k, c in self.terms.items():
            total = total + c.embed(ring) * (x ** k)
        return total

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            o = self._coerce(other)
            return o is not None and self.terms == o.terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self.var == other.var
            and self.coeff_ring.same_as(other.coeff_ring)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.var, self.coeff_ring.variables, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for k in sorted(self.terms, reverse=True):
            coeff = self.terms[k]
            power = format_monomial((k,), (self.var,)) if k >= 0 else f"{self.var}^{k}"
            if len(coeff.terms) == 1:
                text = str(coeff)
                negative = text.startswith("-")
                mag = text[1:] if negative else text
                if power:
                    mag = power if mag == "1" else f"{mag}*{power}"
            else:
                negative = False
                mag = f"({coeff})*{power}" if power else f"({coeff})"
            if not pieces:
                pieces.append(f"-{mag}" if negative else mag)
            else:
                pieces.append(f" - {mag}" if negative else f" + {mag}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def laurent_ord(value: LaurentPoly) -> int:
    return value.ord()


class DualPoly:
    """body + eps * eps_part over any commutative ring element type"""

    __slots__ = ("body", "eps")

    def __init__(self, body: Any, eps: Any):
        self.body = body
        self.eps = eps

    @classmethod
    def lift(cls, value: Any) -> "DualPoly":
        return cls(value, value * 0)

    def _coerce(self, other: Any) -> Optional["DualPoly"]:
        if isinstance(other, DualPoly):
            _check_same_ring(self.body, other.body)
            return other
        if isinstance(other, (int, Fraction, Poly, LaurentPoly)):
            return DualPoly(other, self.eps * 0)
        return None

    def __add__(self, other: Any) -> "DualPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualPoly(self.body + o.body, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self) -> "DualPoly":
        return DualPoly(-self.body, -self.eps)

    def __sub__(self, other: Any) -> "DualPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualPoly(self.body - o.body, self.eps - o.eps)

    def __rsub__(self, other: Any) -> "DualPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualPoly(o.body - self.body, o.eps - self.eps)

    def __mul__(self, other: Any) -> "DualPoly":
        if isinstance(other, (int, Fraction)):
            return DualPoly(self.body * other, self.eps * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return dual_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "DualPoly":
        if k < 0:
            raise ValueError("negative powers of dual values are not defined")
        result = DualPoly(self.body * 0 + 1, self.eps * 0)
        for _ in range(k):
            result = dual_mul(result, self)
        return result

    def is_zero(self) -> bool:
        return _is_zero(self.body) and _is_zero(self.eps)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, DualPoly):
            return NotImplemented
        return self.body == other.body and self.eps == other.eps

    def __hash__(self) -> int:
        return hash((self.body, self.eps))

    def __str__(self) -> str:
        if _is_zero(self.eps):
            return str(self.body)
        return f"({self.body}) + ({self.eps})*eps"

    def __repr__(self) -> str:
        return f"DualPoly({self.body}; {self.eps})"


def _is_zero(value: Any) -> bool:
    return value.is_zero() if hasattr(value, "is_zero") else value == 0


def _ring_signature(value: Any) -> Optional[Tuple]:
    if isinstance(value, Poly):
        return ("poly", value.ring.field, value.ring.variables)
    if isinstance(value, LaurentPoly):
        return ("laurent", value.field, value.var, value.coeff_ring.variables)
    return None


def _check_same_ring(a: Any, b: Any) -> None:
    sa, sb = _ring_signature(a), _ring_signature(b)
    if sa is not None and sb is not None and sa != sb:
        raise FieldMismatchError(f"dual values live in different rings: {sa} vs {sb}")


def dual_mul(a: DualPoly, b: DualPoly) -> DualPoly:
    """(a0 + a1 eps)(b0 + b1 eps) = a0 b0 + (a0 b1 + a1 b0) eps"""
    _check_same_ring(a.body, b.body)
    return DualPoly(a.body * b.body, a.body * b.eps + a.eps * b.body)

