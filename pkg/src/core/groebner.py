"""
Groebner Bases
Buchberger's algorithm with the sugar strategy and reduced output
"""

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .fields import FieldSpec, Scalar
from .orders import Exponent, MonomialOrder
from .poly import Poly, PolyRing

# Set up logging
logger = logging.getLogger(__name__)

Terms = Dict[Exponent, Scalar]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(terms: Terms, basis: Sequence[Tuple[Exponent, Terms]], key, field: FieldSpec) -> Terms:
    """Full reduction of terms by monic basis elements given as (lead, terms)"""
    remainder: Terms = {}
    work = dict(terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for lead, g in basis:
            if _divides(lead, m):
                shift = tuple(x - y for x, y in zip(m, lead))
                for e, gc in g.items():
                    target = tuple(x + y for x, y in zip(e, shift))
                    v = field.normalize(work.get(target, 0) - c * gc)
                    if v == 0:
                        work.pop(target, None)
                    else:
                        work[target] = v
                break
        else:
            remainder[m] = c
            del work[m]
    return remainder


def _monic(terms: Terms, key, field: FieldSpec) -> Tuple[Exponent, Terms]:
    lead = max(terms, key=key)
    inv = field.inv(terms[lead])
    return lead, {e: field.normalize(c * inv) for e, c in terms.items()}


def normal_form(p: Poly, basis: Sequence[Poly], order: Optional[MonomialOrder] = None) -> Poly:
    """Remainder of p on division by basis"""
    order = order or p.ring.order
    field = p.ring.field
    prepared = [_monic(g.terms, order.key, field) for g in basis if not g.is_zero()]
    return Poly(p.ring, _reduce(p.terms, prepared, order.key, field))


def s_polynomial(f: Poly, g: Poly, order: Optional[MonomialOrder] = None) -> Poly:
    order = order or f.ring.order
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = _lcm(lf, lg)
    field = f.ring.field
    left = f.mul_monomial(tuple(a - b for a, b in zip(lcm, lf)), field.inv(f.terms[lf]))
    right = g.mul_monomial(tuple(a - b for a, b in zip(lcm, lg)), field.inv(g.terms[lg]))
    return left - right


def _sugar_degree(terms: Terms) -> int:
    return max(sum(e) for e in terms)


def buchberger(gens: Sequence[Poly], order: Optional[MonomialOrder] = None, ring: Optional[PolyRing] = None) -> List[Poly]:
    """Reduced, monic Groebner basis sorted by descending leading monomial

    Pairs are chosen by lowest sugar, ties broken by pair creation index.
    The product criterion and Buchberger's chain criterion prune pairs.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = ring or gens[0].ring
    for g in gens:
        ring.check_compatible(g.ring)
    order = order or ring.order
    key = order.key
    field = ring.field

    basis: List[Tuple[Exponent, Terms]] = []
    sugar: List[int] = []
    pending: Dict[Tuple[int, int], Tuple[int, int]] = {}
    counter = 0

    def add(terms: Terms, s: int) -> None:
        nonlocal counter
        lead, monic = _monic(terms, key, field)
        idx = len(basis)
        basis.append((lead, monic))
        sugar.append(s)
        for i in range(idx):
            li = basis[i][0]
            lcm = _lcm(li, lead)
            deg = sum(lcm)
            pair_sugar = max(sugar[i] + deg - sum(li), s + deg - sum(lead))
            pending[(i, idx)] = (pair_sugar, counter)
            counter += 1

    seen: Set[Tuple] = set()
    for g in gens:
        signature = tuple(sorted(g.monic(order).terms.items()))
        if signature in seen:
            continue
        seen.add(signature)
        add(dict(g.terms), _sugar_degree(g.terms))

    processed = 0
    while pending:
        pair = min(pending, key=lambda p: pending[p])
        pair_sugar, _ = pending.pop(pair)
        i, j = pair
        li, lj = basis[i][0], basis[j][0]
        lcm = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if _chain_skip(i, j, lcm, basis, pending):
            continue
        processed += 1
        f, g = basis[i][1], basis[j][1]
        spoly: Terms = {}
        for terms, lead in ((f, li), (g, lj)):
            shift = tuple(a - b for a, b in zip(lcm, lead))
            sign = 1 if terms is f else -1
            for e, c in terms.items():
                t = tuple(x + y for x, y in zip(e, shift))
                v = field.normalize(spoly.get(t, 0) + sign * c)
                if v == 0:
                    spoly.pop(t, None)
                else:
                    spoly[t] = v
        remainder = _reduce(spoly, basis, key, field)
        if remainder:
            add(remainder, pair_sugar)

    logger.debug(f"buchberger: {len(gens)} generators, {processed} pairs reduced, {len(basis)} basis elements")
    return _interreduce(basis, ring, order)


def _chain_skip(i: int, j: int, lcm: Exponent, basis, pending) -> bool:
    for k, (lk, _) in enumerate(basis):
        if k in (i, j) or not _divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _interreduce(basis: List[Tuple[Exponent, Terms]], ring: PolyRing, order: MonomialOrder) -> List[Poly]:
    key = order.key
    field = ring.field
    minimal: List[Tuple[Exponent, Terms]] = []
    for idx, (lead, terms) in enumerate(basis):
        dominated = False
        for jdx, (other, _) in enumerate(basis):
            if jdx == idx or not _divides(other, lead):
                continue
            if other != lead or jdx < idx:
                dominated = True
                break
        if not dominated:
            minimal.append((lead, terms))
    reduced: List[Poly] = []
    for idx, (lead, terms) in enumerate(minimal):
        others = [b for jdx, b in enumerate(minimal) if jdx != idx]
        tail = {e: c for e, c in terms.items() if e != lead}
        tail = _reduce(tail, others, key, field)
        tail[lead] = field.one()
        reduced.append(Poly(ring, tail))
    reduced.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return reduced


def is_groebner_basis(basis: Sequence[Poly], order: Optional[MonomialOrder] = None) -> bool:
    """Every S-polynomial reduces to zero"""
    if not basis:
        return True
    order = order or basis[0].ring.order
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True
