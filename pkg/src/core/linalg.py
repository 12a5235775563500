"""
Exact Linear Algebra
Row reduction over a FieldSpec, incremental spans, and division-free
characteristic polynomials over arbitrary commutative rings
"""

import logging
from typing import Any, Dict, Hashable, List, Optional, Sequence

from .errors import MalformedInputError
from .fields import FieldSpec, Scalar

# Set up logging
logger = logging.getLogger(__name__)


def row_echelon(rows: Sequence[Sequence[Scalar]], field: FieldSpec) -> tuple:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)"""
    matrix = [[field.normalize(x) for x in row] for row in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = field.inv(matrix[r][col])
        matrix[r] = [field.normalize(x * inv) for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [field.normalize(a - factor * b) for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]], field: FieldSpec) -> int:
    return len(row_echelon(rows, field)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int, field: FieldSpec) -> List[List[Scalar]]:
    """Basis of {x : rows . x = 0}"""
    reduced, pivots = row_echelon(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero()] * ncols
        vec[f] = field.one()
        for row, p in zip(reduced, pivots):
            vec[p] = field.normalize(-row[f])
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], field: FieldSpec) -> Optional[List[Scalar]]:
    """One solution of matrix . x = rhs, or None"""
    if not matrix:
        return [] if all(field.normalize(b) == 0 for b in rhs) else None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = row_echelon(augmented, field)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


class EchelonSpan:
    """Incrementally maintained span of sparse vectors with hashable coordinates"""

    def __init__(self, field: FieldSpec):
        self.field = field
        self._columns: Dict[Hashable, int] = {}
        self._rows: Dict[int, Dict[int, Scalar]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _index(self, vector: Dict[Hashable, Scalar]) -> Dict[int, Scalar]:
        out = {}
        for key, value in vector.items():
            value = self.field.normalize(value)
            if value == 0:
                continue
            if key not in self._columns:
                self._columns[key] = len(self._columns)
            out[self._columns[key]] = value
        return out

    def _reduce(self, vec: Dict[int, Scalar]) -> Dict[int, Scalar]:
        field = self.field
        vec = dict(vec)
        for pivot in sorted(self._rows):
            c = vec.get(pivot)
            if not c:
                continue
            for col, value in self._rows[pivot].items():
                v = field.normalize(vec.get(col, 0) - c * value)
                if v == 0:
                    vec.pop(col, None)
                else:
                    vec[col] = v
        return vec

    def contains(self, vector: Dict[Hashable, Scalar]) -> bool:
        return not self._reduce(self._index(vector))

    def add(self, vector: Dict[Hashable, Scalar]) -> bool:
        """Insert a vector; True when it enlarged the span"""
        residue = self._reduce(self._index(vector))
        if not residue:
            return False
        pivot = min(residue)
        inv = self.field.inv(residue[pivot])
        self._rows[pivot] = {col: self.field.normalize(v * inv) for col, v in residue.items()}
        return True


def berkowitz(matrix: Sequence[Sequence[Any]], one: Any) -> List[Any]:
    """Coefficients [1, c_1, ..., c_n] of det(t*I - M), highest degree first

    Division free, so the entries may come from any commutative ring that
    supports +, - and *.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise MalformedInputError("characteristic polynomial needs a square matrix")
    if n == 0:
        return [one]
    zero = one * 0
    coeffs = [one, -matrix[0][0]]
    for r in range(1, n):
        a = matrix[r][r]
        row = [matrix[r][j] for j in range(r)]
        col = [matrix[i][r] for i in range(r)]
        toeplitz = [one, -a]
        # R * A_r^k * S for k = 0 .. r-1
        vec = col
        for _ in range(r):
            dot = zero
            for x, y in zip(row, vec):
                dot = dot + x * y
            toeplitz.append(-dot)
            vec = [_dot(matrix[i][:r], vec, zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                acc = acc + toeplitz[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    return coeffs


def _dot(xs: Sequence[Any], ys: Sequence[Any], zero: Any) -> Any:
    acc = zero
    for x, y in zip(xs, ys):
        acc = acc + x * y
    return acc


def det_cofactor(matrix: Sequence[Sequence[Any]], one: Any) -> Any:
    """Laplace expansion along the first row"""
    n = len(matrix)
    if n == 0:
        return one
    if n == 1:
        return matrix[0][0]
    zero = one * 0
    total = zero
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor([list(r) for r in minor], one)
        total = total + term if j % 2 == 0 else total - term
    return total
