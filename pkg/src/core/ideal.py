"""
Ideal Arithmetic
Membership, intersection, quotients, saturation, element-wise powers,
pure parts and torsion lengths on top of the Groebner engine
"""

import itertools
import logging
import random
import threading
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..config import config
from .errors import (
    FieldTooSmallError,
    InfiniteLengthError,
    MalformedInputError,
    PreconditionError,
    ZeroInputError,
)
from .groebner import buchberger, normal_form
from .orders import GREVLEX, Exponent, MonomialOrder, elimination
from .poly import Poly, PolyRing, compositions, multinomial_nonzero

# Set up logging
logger = logging.getLogger(__name__)


class Ideal:
    """An ideal given by generators, with Groebner bases cached per order"""

    def __init__(self, ring: PolyRing, gens: Iterable[Poly]):
        self.ring = ring
        gens = list(gens)
        for g in gens:
            ring.check_compatible(g.ring)
        self.gens: Tuple[Poly, ...] = tuple(g for g in gens if not g.is_zero())
        self._bases: Dict[MonomialOrder, Tuple[Poly, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def of(cls, *gens: Poly) -> "Ideal":
        if not gens:
            raise MalformedInputError("Ideal.of needs at least one generator to fix the ring")
        return cls(gens[0].ring, gens)

    # -- Groebner bases -----------------------------------------------------

    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> Tuple[Poly, ...]:
        order = order or self.ring.order
        cached = self._bases.get(order)
        if cached is not None:
            return cached
        with self._lock:
            if order not in self._bases:
                self._bases[order] = tuple(buchberger(self.gens, order, self.ring))
            return self._bases[order]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.groebner_basis(GREVLEX))

    def is_zero(self) -> bool:
        return not self.gens

    def reduce(self, p: Poly, order: Optional[MonomialOrder] = None) -> Poly:
        order = order or self.ring.order
        return normal_form(p, self.groebner_basis(order), order)

    def member(self, p: Poly) -> bool:
        self.ring.check_compatible(p.ring)
        if p.is_zero():
            return True
        return self.reduce(p, GREVLEX).is_zero()

    def contains(self, other: "Ideal") -> bool:
        return all(self.member(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.contains(other) and other.contains(self)

    # -- constructions ------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ring.check_compatible(other.ring)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self.ring.check_compatible(other.ring)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def power(self, m: int) -> "Ideal":
        result = Ideal(self.ring, [self.ring.one()])
        for _ in range(m):
            result = result * self
        return result

    def eliminate(self, names: Sequence[str]) -> "Ideal":
        """Intersection with the subring in the remaining variables"""
        names = list(names)
        keep = self.ring.drop(names)
        ext = PolyRing(self.ring.field, tuple(names) + keep.variables, elimination(len(names)))
        basis = buchberger([g.embed(ext) for g in self.gens], ext.order, ext)
        k = len(names)
        out = [g.embed(keep) for g in basis if all(not any(e[:k]) for e in g.terms)]
        return Ideal(keep, out)

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J by eliminating t from t*I + (1 - t)*J"""
        self.ring.check_compatible(other.ring)
        t_name = self.ring.fresh_name()
        ext = PolyRing(self.ring.field, (t_name,) + self.ring.variables, elimination(1))
        t = ext.var(t_name)
        gens = [t * g.embed(ext) for g in self.gens] + [(1 - t) * g.embed(ext) for g in other.gens]
        basis = buchberger(gens, ext.order, ext)
        out = [g.embed(self.ring) for g in basis if all(e[0] == 0 for e in g.terms)]
        return Ideal(self.ring, out)

    def quotient(self, f: Poly) -> "Ideal":
        """I : f, from the generators of I cap (f) divided by f"""
        if f.is_zero():
            raise ZeroInputError("ideal quotient by the zero polynomial")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        meet = self.intersect(Ideal(self.ring, [f]))
        return Ideal(self.ring, [exact_divide(h, f) for h in meet.groebner_basis()])

    def quotient_ideal(self, other: "Ideal") -> "Ideal":
        """I : J as the intersection of the quotients by generators of J"""
        if other.is_zero():
            return Ideal(self.ring, [self.ring.one()])
        result: Optional[Ideal] = None
        for g in other.gens:
            q = self.quotient(g)
            result = q if result is None else result.intersect(q)
        return result

    def saturate(self, f: Poly) -> "Ideal":
        """I : f^infinity via I + (1 - t*f), eliminating t"""
        if f.is_zero():
            raise ZeroInputError("saturation by the zero polynomial")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        t_name = self.ring.fresh_name()
        ext = PolyRing(self.ring.field, (t_name,) + self.ring.variables, elimination(1))
        t = ext.var(t_name)
        gens = [g.embed(ext) for g in self.gens] + [1 - t * f.embed(ext)]
        basis = buchberger(gens, ext.order, ext)
        out = [g.embed(self.ring) for g in basis if all(e[0] == 0 for e in g.terms)]
        return Ideal(self.ring, out)

    def saturate_maximal(self) -> "Ideal":
        """I : m^infinity for m = (x_1, ..., x_n), as the intersection over the variables"""
        result: Optional[Ideal] = None
        for x in self.ring.gens():
            s = self.saturate(x)
            result = s if result is None else result.intersect(s)
        return result if result is not None else Ideal(self.ring, self.gens)

    def pure_part(self, form: Optional[Poly] = None) -> "Ideal":
        """Remove origin-supported embedded components (or saturate by an explicit form)"""
        if form is not None:
            return self.saturate(form)
        return self.saturate_maximal()

    def pure_part_checked(self, form: Optional[Poly] = None, seed: int = 0) -> Tuple["Ideal", bool]:
        """pure_part plus a flag that is True when embedded components away from the origin remain"""
        pure = self.pure_part(form)
        if pure.is_unit() or pure.dimension() <= 0:
            return pure, False
        rng = random.Random(seed)
        bound = config.SAMPLE_BOUND
        ell = self.ring.zero()
        for x in self.ring.gens():
            ell = ell + x * rng.choice([c for c in range(-bound, bound + 1) if c != 0])
        flagged = not pure.equals(pure.saturate(ell))
        if flagged:
            logger.warning("pure part is best-effort: embedded components away from the origin remain")
        return pure, flagged

    def elementwise_power(self, m: int, literal_field: bool = False, enumerate_field: bool = False) -> "Ideal":
        """I^[m], the ideal generated by m-th powers of elements of I

        Generators are the products r^J with |J| = m whose multinomial
        coefficient is nonzero in the characteristic. With literal_field the
        coefficient field F_p itself is used: it is refused when p <= m unless
        enumerate_field asks for all (sum c_i r_i)^m with c in F_p^s.
        """
        if m < 0:
            raise MalformedInputError("element-wise power needs m >= 0")
        field = self.ring.field
        if m == 0:
            return Ideal(self.ring, [self.ring.one()])
        if literal_field and field.is_finite() and field.p <= m:
            if not enumerate_field:
                raise FieldTooSmallError(
                    f"F_{field.p} has at most {m} elements; pass enumerate_field to enumerate (sum c_i r_i)^{m}"
                )
            return Ideal(self.ring, self._enumerated_power(m))
        r = list(self.gens)
        out = []
        for exps in compositions(m, len(r)):
            if not multinomial_nonzero(m, exps, field.characteristic()):
                continue
            term = self.ring.one()
            for g, e in zip(r, exps):
                if e:
                    term = term * g ** e
            out.append(term)
        return Ideal(self.ring, out)

    def _enumerated_power(self, m: int) -> List[Poly]:
        field = self.ring.field
        out = []
        for coeffs in itertools.product(list(field.elements()), repeat=len(self.gens)):
            combo = self.ring.zero()
            for c, g in zip(coeffs, self.gens):
                combo = combo + g.scale(c)
            if not combo.is_zero():
                out.append(combo ** m)
        logger.debug(f"enumerated {len(out)} powers over F_{field.p}")
        return out

    # -- invariants ---------------------------------------------------------

    def leading_monomials(self) -> List[Exponent]:
        return [g.leading_monomial(GREVLEX) for g in self.groebner_basis(GREVLEX)]

    def dimension(self) -> int:
        """Krull dimension of k[x]/I (-1 for the unit ideal)"""
        if self.is_unit():
            return -1
        leads = self.leading_monomials()
        n = self.ring.nvars
        for size in range(n, -1, -1):
            for subset in itertools.combinations(range(n), size):
                chosen = set(subset)
                if all(any(e and i not in chosen for i, e in enumerate(lead)) for lead in leads):
                    return size
        return 0

    def hilbert_count(self, degree: int) -> int:
        """Number of grevlex standard monomials of total degree <= degree"""
        leads = _minimalize(self.leading_monomials())
        return _count_standard(frozenset(leads), self.ring.nvars, degree)

    def colength(self) -> int:
        """dim_k k[x]/I for a zero-dimensional ideal"""
        if self.dimension() > 0:
            raise InfiniteLengthError(f"k[x]/I is infinite dimensional (dimension {self.dimension()})")
        return length_between(Ideal(self.ring, [self.ring.one()]), self)

    def torsion_length(self, form: Optional[Poly] = None, max_degree: Optional[int] = None) -> int:
        """dim_k pure_part(I) / I"""
        return length_between(self.pure_part(form), self, max_degree)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def exact_divide(h: Poly, f: Poly) -> Poly:
    """h / f when f divides h"""
    order = GREVLEX
    field = h.ring.field
    lead = f.leading_monomial(order)
    inv = field.inv(f.terms[lead])
    quotient = h.ring.zero()
    rest = h
    while not rest.is_zero():
        m = rest.leading_monomial(order)
        if any(a < b for a, b in zip(m, lead)):
            raise PreconditionError(f"{f} does not divide {h}")
        shift = tuple(a - b for a, b in zip(m, lead))
        c = field.normalize(rest.terms[m] * inv)
        quotient = quotient + h.ring.monomial(shift, c)
        rest = rest - f.mul_monomial(shift, c)
    return quotient


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def ideal_member(p: Poly, ideal: Ideal) -> bool:
    return ideal.member(p)


def length_between(big: Ideal, small: Ideal, max_degree: Optional[int] = None) -> int:
    """dim_k big/small for small contained in big, by truncated standard-monomial counts

    The truncation degree starts at twice the largest generator degree and
    doubles until two consecutive values agree.
    """
    cap = max_degree or config.TORSION_MAX_DEGREE
    degree = max(2, 2 * max((g.total_degree() for g in small.gens + big.gens), default=1))
    previous = small.hilbert_count(degree) - big.hilbert_count(degree)
    while True:
        degree *= 2
        if degree > cap:
            raise InfiniteLengthError(f"length did not stabilize up to degree {cap}")
        current = small.hilbert_count(degree) - big.hilbert_count(degree)
        logger.debug(f"length at degree {degree}: {current}")
        if current == previous:
            return current
        previous = current


def _minimalize(leads: Sequence[Exponent]) -> List[Exponent]:
    out = []
    for i, a in enumerate(leads):
        if any(
            all(x <= y for x, y in zip(b, a)) and (b != a or j < i)
            for j, b in enumerate(leads)
            if j != i
        ):
            continue
        out.append(a)
    return out


@lru_cache(maxsize=100_000)
def _count_standard(leads: FrozenSet[Exponent], nvars: int, degree: int) -> int:
    if degree < 0:
        return 0
    if not leads:
        return comb(degree + nvars, nvars)
    if nvars == 0:
        return 0
    if any(not any(lead) for lead in leads):
        return 0
    total = 0
    for e in range(degree + 1):
        projected = _minimalize(sorted({lead[:-1] for lead in leads if lead[-1] <= e}))
        if any(not any(p) for p in projected) and projected:
            break
        total += _count_standard(frozenset(projected), nvars - 1, degree - e)
    return total
