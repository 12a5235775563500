"""
Monomial Curves and Numerical Semigroups
The curve x^a = y^c parametrized by t -> (t^c, t^a) and its semigroup
of exponents N a + N c
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Tuple

from .errors import InvariantViolation, MalformedInputError, PreconditionError

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumericalSemigroup:
    """N a + N c with a membership table up to the Frobenius number ac - a - c"""

    a: int
    c: int
    table: Tuple[bool, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.a < 1 or self.c < 1:
            raise MalformedInputError("semigroup generators must be positive")
        if gcd(self.a, self.c) != 1:
            raise PreconditionError(f"gcd({self.a}, {self.c}) != 1")
        bound = self.frobenius()
        table = [False] * (bound + 1) if bound >= 0 else []
        for m in range(len(table)):
            table[m] = m == 0 or (m >= self.a and table[m - self.a]) or (m >= self.c and table[m - self.c])
        object.__setattr__(self, "table", tuple(table))

    def frobenius(self) -> int:
        return self.a * self.c - self.a - self.c

    def member(self, m: int) -> bool:
        if m < 0:
            return False
        if m >= len(self.table):
            return True
        return self.table[m]

    def __contains__(self, m: int) -> bool:
        return self.member(m)

    def gaps(self) -> List[int]:
        return [m for m, inside in enumerate(self.table) if not inside]


def semigroup_member(semigroup: NumericalSemigroup, m: int) -> bool:
    if m < 0:
        raise MalformedInputError("membership is asked for m >= 0")
    return semigroup.member(m)


def semigroup_gaps(semigroup: NumericalSemigroup) -> List[int]:
    return semigroup.gaps()


@dataclass
class SemigroupLemmaReport:
    a: int
    c: int
    passed: bool
    counterexample: Optional[Tuple[str, int]] = None
    checked: int = 0


def check_semigroup_lemma(a: int, c: int, include_zero: bool = False) -> SemigroupLemmaReport:
    """Exhaustive check of the two gap symmetries of N a + N c

    (a) for 1 <= m <= min(ac-a, ac-c): ac-a-m and ac-c-m lie in E iff ac-a-c-m does.
    (b) for 0 <= m <= ac-a-c: ac-a-c-m lies in E iff m does not.

    Part (a) fails at m = 0, where ac-a and ac-c are in E but the Frobenius
    number is not; include_zero=True checks that case too.
    """
    E = NumericalSemigroup(a, c)
    F = E.frobenius()
    checked = 0
    for m in range(0 if include_zero else 1, min(a * c - a, a * c - c) + 1):
        checked += 1
        left = E.member(a * c - a - m) and E.member(a * c - c - m)
        if left != E.member(F - m):
            logger.info(f"semigroup lemma (a) fails for ({a}, {c}) at m={m}")
            return SemigroupLemmaReport(a, c, False, ("a", m), checked)
    for m in range(0, F + 1):
        checked += 1
        if E.member(F - m) == E.member(m):
            logger.info(f"semigroup lemma (b) fails for ({a}, {c}) at m={m}")
            return SemigroupLemmaReport(a, c, False, ("b", m), checked)
    return SemigroupLemmaReport(a, c, True, None, checked)


@dataclass(frozen=True)
class MonomialCurve:
    """x^a = y^c, gcd(a, c) = 1, parametrized by t -> (t^c, t^a)"""

    a: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.c < 1:
            raise MalformedInputError("monomial curve exponents must be positive")
        if gcd(self.a, self.c) != 1:
            raise PreconditionError(f"gcd({self.a}, {self.c}) != 1")

    @property
    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup(self.a, self.c)

    def is_smooth(self) -> bool:
        return min(self.a, self.c) == 1

    def section_exponents(self, m: int) -> Tuple[int, int]:
        return monomial_section(self.a, self.c, m)

    def regular_exponent(self, m: int) -> bool:
        """t^m lies in k[t^a, t^c]"""
        return self.semigroup.member(m)


def monomial_section(a: int, c: int, m: int) -> Tuple[int, int]:
    """(alpha, beta) with t^m = u^alpha v^beta, u = t^c, v = t^a and 0 <= beta < c"""
    if gcd(a, c) != 1:
        raise PreconditionError(f"gcd({a}, {c}) != 1")
    beta = (m * pow(a, -1, c)) % c if c > 1 else 0
    alpha, rest = divmod(m - beta * a, c)
    if rest:
        raise InvariantViolation(f"t^{m} is not u^alpha v^beta")
    return alpha, beta


def monomial_cflat_nonglobal_dim(a: int, c: int) -> int:
    """Dimension of the C-flat deformations z = phi eps of x^a = y^c that do not globalize

    Counts the phi = t^-m, 1 <= m <= ac-a-c, with ac-a-c-m in E; these are
    exactly the gaps of E, so the count is (a-1)(c-1)/2.
    """
    E = NumericalSemigroup(a, c)
    F = E.frobenius()
    count = sum(1 for m in range(1, F + 1) if E.member(F - m))
    gaps = len(E.gaps())
    if count != gaps or 2 * count != (a - 1) * (c - 1):
        raise InvariantViolation(f"({a}, {c}): {count} C-flat non-global directions, {gaps} gaps")
    return count
