"""
Monomial Orders
lex, grevlex and block elimination orders as sort keys
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import MalformedInputError

Exponent = Tuple[int, ...]


def _grevlex(exp: Sequence[int]) -> tuple:
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on exponent vectors; a larger key is a larger monomial"""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise MalformedInputError(f"unknown monomial order '{self.kind}'")
        if self.kind == "elim" and self.block < 1:
            raise MalformedInputError("elimination order needs a positive block size")

    def key(self, exp: Exponent) -> tuple:
        if self.kind == "lex":
            return tuple(exp)
        if self.kind == "grevlex":
            return _grevlex(exp)
        # first block strictly dominates, grevlex inside both blocks
        return (_grevlex(exp[: self.block]), _grevlex(exp[self.block :]))

    def is_degree_compatible(self) -> bool:
        return self.kind == "grevlex"

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        cleaned = text.strip().lower()
        if cleaned in ("lex", "grevlex"):
            return cls(cleaned)
        if cleaned.startswith("elim:"):
            try:
                return cls("elim", int(cleaned[5:]))
            except ValueError:
                raise MalformedInputError(f"bad elimination block in '{text}'")
        raise MalformedInputError(f"unknown monomial order '{text}' (lex, grevlex, elim:k)")

    def __str__(self) -> str:
        return f"elim:{self.block}" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)
