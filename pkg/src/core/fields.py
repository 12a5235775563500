"""
Coefficient Fields
The rationals and prime fields F_p with exact arithmetic
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime

from .errors import MalformedInputError, PreconditionError, ZeroInputError

# Set up logging
logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: p == 0 means Q, otherwise F_p"""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not isprime(self.p):
            raise PreconditionError(f"field characteristic {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse 'Q' or 'Fp:<p>'"""
        cleaned = text.strip()
        if cleaned.upper() in ("Q", "QQ"):
            return cls.rationals()
        if cleaned.lower().startswith("fp:"):
            try:
                return cls.prime(int(cleaned[3:]))
            except ValueError:
                raise MalformedInputError(f"bad field characteristic in '{text}'")
        raise MalformedInputError(f"unknown field '{text}' (use Q or Fp:p)")

    def characteristic(self) -> int:
        return self.p

    def is_finite(self) -> bool:
        return self.p != 0

    def size(self) -> float:
        return float("inf") if self.p == 0 else self.p

    def normalize(self, value: Scalar) -> Scalar:
        """Canonical representative of a scalar"""
        if self.p == 0:
            return value if type(value) is Fraction else Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroInputError(f"{value} has no image in F_{self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def zero(self) -> Scalar:
        return self.normalize(0)

    def one(self) -> Scalar:
        return self.normalize(1)

    def inv(self, value: Scalar) -> Scalar:
        value = self.normalize(value)
        if value == 0:
            raise ZeroInputError("division by zero in coefficient field")
        if self.p == 0:
            return 1 / value
        return pow(int(value), -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(self.normalize(a) * self.inv(b))

    def elements(self) -> Iterator[Scalar]:
        """All elements of a finite field"""
        if self.p == 0:
            raise PreconditionError("Q has infinitely many elements")
        return iter(range(self.p))

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"Fp:{self.p}"


QQ = FieldSpec.rationals()
