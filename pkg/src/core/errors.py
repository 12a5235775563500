"""
Error Types
Exceptions raised by the kflat algebra kernel
"""

from typing import Optional


class KFlatError(Exception):
    """Base class for every error the library raises"""

    error_type = "processing_error"

    def __init__(self, message: str = "", details: str = ""):
        super().__init__(message)
        self.message = message
        self.details = details


class FieldMismatchError(KFlatError):
    """Operands live over different fields or variable lists"""

    error_type = "field_mismatch"


class UnknownVariableError(KFlatError):
    """A variable name is not part of the ring"""

    error_type = "unknown_variable"


class ZeroInputError(KFlatError):
    """An operation received the zero element where it needs a nonzero one"""

    error_type = "zero_input"


class PreconditionError(KFlatError):
    """A documented precondition of an operation does not hold"""

    error_type = "precondition"


class FieldTooSmallError(PreconditionError):
    """The finite coefficient field has too few elements for the operation"""

    error_type = "field_too_small"


class CharacteristicError(PreconditionError):
    """The operation is only defined in characteristic 0"""

    error_type = "characteristic"


class InfiniteLengthError(KFlatError):
    """A length computation did not stabilize below the truncation cap"""

    error_type = "infinite_length"


class MalformedInputError(KFlatError):
    """Input data does not have the required shape"""

    error_type = "malformed_input"


class ParseError(KFlatError):
    """Expression text could not be parsed"""

    error_type = "parse_error"

    def __init__(self, message: str, offset: Optional[int] = None, source: str = ""):
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}", details=source)
        self.offset = offset
        self.source = source


class InvariantViolation(KFlatError):
    """An internal cross-check failed"""

    error_type = "invariant_violation"
