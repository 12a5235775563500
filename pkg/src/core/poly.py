"""
Polynomial Rings
Exact multivariate polynomials over Q or F_p
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import FieldMismatchError, InvariantViolation, UnknownVariableError
from .fields import FieldSpec, Scalar
from .orders import GREVLEX, Exponent, MonomialOrder

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyRing:
    """k[x_1, ..., x_n] with a fixed variable list and a default order"""

    field: FieldSpec
    variables: Tuple[str, ...]
    order: MonomialOrder = GREVLEX

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"variable '{name}' is not in ring {self}")

    def same_as(self, other: "PolyRing") -> bool:
        return self.field == other.field and self.variables == other.variables

    def check_compatible(self, other: "PolyRing") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")
        if self.variables != other.variables:
            raise FieldMismatchError(
                f"ring mismatch: ({', '.join(self.variables)}) vs ({', '.join(other.variables)})"
            )

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return replace(self, order=order)

    def extend(self, front: Sequence[str] = (), back: Sequence[str] = ()) -> "PolyRing":
        clash = [v for v in list(front) + list(back) if v in self.variables]
        if clash:
            raise FieldMismatchError(f"variables {clash} already in ring")
        return PolyRing(self.field, tuple(front) + self.variables + tuple(back), self.order)

    def drop(self, names: Iterable[str]) -> "PolyRing":
        names = set(names)
        return PolyRing(self.field, tuple(v for v in self.variables if v not in names), self.order)

    def fresh_name(self, stem: str = "_t") -> str:
        name, k = stem, 0
        while name in self.variables:
            k += 1
            name = f"{stem}{k}"
        return name

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: Scalar) -> "Poly":
        return Poly.from_terms(self, {(0,) * self.nvars: c})

    def monomial(self, exp: Sequence[int], c: Scalar = 1) -> "Poly":
        return Poly.from_terms(self, {tuple(exp): c})

    def var(self, name: str) -> "Poly":
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return self.monomial(exp)

    def gens(self) -> List["Poly"]:
        return [self.var(v) for v in self.variables]

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}]"


class Poly:
    """Immutable polynomial stored as {exponent tuple: nonzero coefficient}"""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Exponent, Scalar]):
        self.ring = ring
        self.terms = terms
        self._hash: Optional[int] = None

    @classmethod
    def from_terms(cls, ring: PolyRing, items: Mapping[Exponent, Any]) -> "Poly":
        field = ring.field
        clean: Dict[Exponent, Scalar] = {}
        for exp, c in items.items():
            if len(exp) != ring.nvars:
                raise FieldMismatchError(f"exponent {exp} does not fit ring {ring}")
            c = field.normalize(c)
            if c != 0:
                clean[tuple(exp)] = c
        return cls(ring, clean)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exp), self.ring.field.zero())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)"""
        return min((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def variables_used(self) -> List[str]:
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Exponent, Scalar]]:
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Exponent:
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Scalar:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: Optional[MonomialOrder] = None) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    def coefficients_in(self, name: str) -> Dict[int, "Poly"]:
        """Split as sum of name^k * c_k with c_k free of name (same ring)"""
        i = self.ring.index(name)
        parts: Dict[int, Dict[Exponent, Scalar]] = {}
        for exp, c in self.terms.items():
            rest = exp[:i] + (0,) + exp[i + 1 :]
            parts.setdefault(exp[i], {})[rest] = c
        return {k: Poly(self.ring, t) for k, t in parts.items()}

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            self.ring.check_compatible(other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def scale(self, c: Scalar) -> "Poly":
        field = self.ring.field
        c = field.normalize(c)
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {e: field.normalize(v * c) for e, v in self.terms.items()})

    def __add__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        field = self.ring.field
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = field.normalize(out.get(e, 0) + c)
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        field = self.ring.field
        return Poly(self.ring, {e: field.normalize(-c) for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Poly.from_terms(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exp: Exponent, c: Scalar = 1) -> "Poly":
        field = self.ring.field
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): field.normalize(v * c) for e, v in self.terms.items()},
        )

    # -- ring changes -------------------------------------------------------

    def embed(self, target: PolyRing) -> "Poly":
        """Move into a ring over the same field whose variables cover the ones used"""
        if target.field != self.ring.field:
            raise FieldMismatchError(f"field mismatch: {self.ring.field} vs {target.field}")
        positions = {v: i for i, v in enumerate(target.variables)}
        out: Dict[Exponent, Scalar] = {}
        for exp, c in self.terms.items():
            new = [0] * target.nvars
            for name, e in zip(self.ring.variables, exp):
                if e == 0:
                    continue
                if name not in positions:
                    raise UnknownVariableError(f"variable '{name}' is not in ring {target}")
                new[positions[name]] = e
            out[tuple(new)] = c
        return Poly(target, out)

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.same_as(other.ring) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.field, self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self.sorted_terms(), self.ring.variables, self.ring.field)

    def __repr__(self) -> str:
        return f"Poly({self})"


def format_monomial(exp: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(items: Sequence[Tuple[Exponent, Scalar]], names: Sequence[str], field: FieldSpec) -> str:
    """Render (exponent, coefficient) pairs, already in descending order"""
    if not items:
        return "0"
    out: List[str] = []
    for exp, c in items:
        negative = field.p == 0 and c < 0
        mag = -c if negative else c
        mono = format_monomial(exp, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def derivative(p: Poly, name: str) -> Poly:
    """Formal partial derivative"""
    i = p.ring.index(name)
    acc: Dict[Exponent, Scalar] = {}
    for exp, c in p.terms.items():
        if exp[i]:
            new = exp[:i] + (exp[i] - 1,) + exp[i + 1 :]
            acc[new] = c * exp[i]
    return Poly.from_terms(p.ring, acc)


def substitute(p: Poly, mapping: Mapping[str, Any]) -> Any:
    """Compose p with a variable -> element map

    Targets may be Poly, LaurentPoly, DualPoly or scalars; products of dual
    targets drop eps^2 automatically. Variables absent from the map must not
    occur in p.
    """
    used = p.variables_used()
    missing = [v for v in used if v not in mapping]
    if missing:
        raise UnknownVariableError(f"no substitution given for {missing}")
    if not mapping:
        return p
    sample = next(iter(mapping.values()))
    total = sample * 0
    for exp, c in p.terms.items():
        term: Any = c
        for name, e in zip(p.ring.variables, exp):
            if e:
                term = term * (mapping[name] ** e)
        total = total + term
    return total


def multinomial(m: int, parts: Sequence[int]) -> int:
    value = factorial(m)
    for k in parts:
        value //= factorial(k)
    return value


def _digits(value: int, p: int) -> List[int]:
    out = []
    while value:
        out.append(value % p)
        value //= p
    return out


def multinomial_nonzero(m: int, parts: Sequence[int], characteristic: int) -> bool:
    """Whether multinomial(m; parts) is nonzero in a field of the given characteristic

    In characteristic p this adds the base-p digits of the parts and checks
    that no carry occurs; the big-integer value is used as a cross-check.
    """
    if any(k < 0 for k in parts) or sum(parts) != m:
        raise InvariantViolation(f"parts {tuple(parts)} do not sum to {m}")
    if characteristic == 0:
        return True
    p = characteristic
    width = max((len(_digits(k, p)) for k in parts), default=0)
    carry_free = True
    for position in range(width):
        column = 0
        for k in parts:
            digits = _digits(k, p)
            column += digits[position] if position < len(digits) else 0
        if column >= p:
            carry_free = False
            break
    exact = multinomial(m, parts) % p != 0
    if exact != carry_free:
        raise InvariantViolation(f"digit test and exact value disagree for {m}; {tuple(parts)} mod {p}")
    return carry_free


def compositions(m: int, s: int) -> List[Tuple[int, ...]]:
    """All exponent vectors of length s summing to m, lex descending"""
    if s == 0:
        return [()] if m == 0 else []
    if s == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        for rest in compositions(m - first, s - 1):
            out.append((first,) + rest)
    return out
