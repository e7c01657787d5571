"""Exact integer matrix algebra.

Generalized Euclid over integer vectors with unimodular witnesses, fraction-free
determinants and the unit-determinant / linear-form constructions built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math
from typing import TYPE_CHECKING, Any, Protocol, TypeVar

from sympy import Matrix

from detrep.exceptions import DetRepError


if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Sequence
    from typing import Self


logger = logging.getLogger(__name__)


class RingElement(Protocol):
    def __add__(self, other: Any, /) -> Any: ...
    def __sub__(self, other: Any, /) -> Any: ...
    def __mul__(self, other: Any, /) -> Any: ...
    def __neg__(self) -> Any: ...
    def __bool__(self) -> bool: ...


T = TypeVar("T", bound=RingElement)


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows * self.cols != len(self.entries):
            raise DetRepError.dimension_mismatch(self.rows * self.cols, len(self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> Self:
        width = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != width:
                raise DetRepError.dimension_mismatch(width, len(row))
        return cls(len(rows), width, tuple(int(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        row, col = key
        return self.entries[row * self.cols + col]

    def row(self, index: int) -> tuple[int, ...]:
        return self.entries[index * self.cols : (index + 1) * self.cols]

    def column(self, index: int) -> tuple[int, ...]:
        return self.entries[index :: self.cols]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (self.row(i) for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        columns = [list(self.column(j)) for j in range(self.cols)]
        return IntMatrix.from_rows(columns, self.rows)

    def head(self, count: int) -> IntMatrix:
        """The first ``count`` rows."""
        return IntMatrix.from_rows(self.to_rows()[:count], self.cols)

    def stack(self, *rows: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows([*self.to_rows(), *(list(r) for r in rows)], self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DetRepError.dimension_mismatch(self.cols, other.rows)
        columns = [other.column(j) for j in range(other.cols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in columns] for row in self],
            other.cols,
        )

    def vecmul(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise DetRepError.dimension_mismatch(self.rows, len(vector))
        return tuple(
            sum(v * c for v, c in zip(vector, self.column(j))) for j in range(self.cols)
        )


@dataclass(frozen=True, slots=True)
class UnimodularWitness:
    """Accumulated column transformation and its determinant."""

    forward: IntMatrix
    parity: int


def _add_column(matrix: list[list[int]], target: int, source: int, factor: int) -> None:
    for row in matrix:
        row[target] += factor * row[source]


def _swap_columns(matrix: list[list[int]], i: int, j: int) -> None:
    for row in matrix:
        row[i], row[j] = row[j], row[i]


def _min_position(values: Sequence[int]) -> int:
    """Lowest index among the non-zero entries of least absolute value."""
    return min((abs(v), i) for i, v in enumerate(values) if v)[1]


def gcd_row_reduce(a: Sequence[int]) -> tuple[int, UnimodularWitness]:
    """Generalized Euclidean algorithm on a row vector.

    Repeatedly divides every entry by the entry of least absolute value,
    keeping the remainders, until a single non-zero entry survives; it is then
    moved to the last position and made positive. Every step is a column
    operation recorded in the witness.

    Args:
        a: Non-empty integer vector, not all zero.

    Returns:
        ``(g, witness)`` with ``a @ witness.forward == (0, ..., 0, g)``, ``g > 0``
        the gcd of the entries and ``det(witness.forward) == witness.parity``.

    Raises:
        DetRepError: If ``a`` is empty or all zero.
    """
    values = [int(x) for x in a]
    n = len(values)
    if not any(values):
        msg = "cannot reduce an empty or all-zero vector"
        raise DetRepError.degenerate_input(msg)
    matrix = [[int(i == j) for j in range(n)] for i in range(n)]
    parity = 1
    pivot = _min_position(values)
    while True:
        for j in range(n):
            if j == pivot or not values[j]:
                continue
            quotient = values[j] // values[pivot]
            values[j] -= quotient * values[pivot]
            _add_column(matrix, j, pivot, -quotient)
            if values[j]:
                pivot = _min_position(values)
                break
        else:
            break
    if pivot != n - 1:
        _swap_columns(matrix, pivot, n - 1)
        values[pivot], values[n - 1] = values[n - 1], values[pivot]
        parity = -parity
    if values[n - 1] < 0:
        for row in matrix:
            row[n - 1] = -row[n - 1]
        values[n - 1] = -values[n - 1]
        parity = -parity
    return values[n - 1], UnimodularWitness(IntMatrix.from_rows(matrix), parity)


def normalize_sign(witness: UnimodularWitness) -> UnimodularWitness:
    """Make the witness determinant +1 by negating its first column.

    The first column multiplies to a zero entry of the reduced vector, so the
    reduction result is unchanged. A single-column witness has no such column.
    """
    if witness.parity == 1:
        return witness
    forward = witness.forward
    if forward.cols < 2:  # noqa: PLR2004
        msg = "a one-column witness cannot change sign without changing the gcd"
        raise DetRepError.degenerate_input(msg)
    rows = forward.to_rows()
    for row in rows:
        row[0] = -row[0]
    return UnimodularWitness(IntMatrix.from_rows(rows), 1)


def fraction_free_determinant(
    rows: Sequence[Sequence[T]],
    exact_divide: Callable[[T, T], T],
    one: T,
) -> T:
    """Bareiss elimination with row pivoting over an integral domain.

    Args:
        rows: Square matrix.
        exact_divide: Division that is exact on the Bareiss quotients.
        one: Multiplicative identity, returned for the empty matrix.
    """
    work = [list(row) for row in rows]
    n = len(work)
    if n == 0:
        return one
    sign = 1
    previous: T | None = None
    for k in range(n - 1):
        if not work[k][k]:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return work[k][k]
        pivot = work[k][k]
        for i in range(k + 1, n):
            lead = work[i][k]
            for j in range(k + 1, n):
                value = pivot * work[i][j] - lead * work[k][j]
                work[i][j] = value if previous is None else exact_divide(value, previous)
        previous = pivot
    last = work[n - 1][n - 1]
    return last if sign > 0 else -last


def cofactor_determinant(
    rows: Sequence[Sequence[T]], zero: T, one: T
) -> T:
    """Laplace expansion along the first row; exponential, for small matrices."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = zero
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [[*row[:j], *row[j + 1 :]] for row in rows[1:]]
        term = entry * cofactor_determinant(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def _exact_int_divide(a: int, b: int) -> int:
    return a // b


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    if not matrix.is_square:
        raise DetRepError.not_square(matrix.rows, matrix.cols)
    return fraction_free_determinant(matrix.to_rows(), _exact_int_divide, 1)


def invert_unimodular(matrix: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +1 or -1, via the adjugate."""
    if not matrix.is_square:
        raise DetRepError.not_square(matrix.rows, matrix.cols)
    det = determinant(matrix)
    if abs(det) != 1:
        raise DetRepError.not_unimodular(det)
    if matrix.rows == 1:
        return IntMatrix.from_rows([[det]])
    adjugate = Matrix(matrix.to_rows()).adjugate()
    n = matrix.rows
    return IntMatrix.from_rows(
        [[det * int(adjugate[i, j]) for j in range(n)] for i in range(n)]
    )


def solve_unit_determinant(a: Sequence[int]) -> IntMatrix:
    """Rows ``B`` such that ``det [B; a] == 1``.

    Raises:
        DetRepError: If ``len(a) < 2`` or the entries are not coprime.
    """
    if len(a) < 2:  # noqa: PLR2004
        msg = "a unit-determinant completion needs at least two entries"
        raise DetRepError.degenerate_input(msg)
    g, witness = gcd_row_reduce(a)
    if g != 1:
        msg = f"entries share the factor {g}"
        raise DetRepError.degenerate_input(msg)
    inverse = invert_unimodular(normalize_sign(witness).forward)
    return inverse.head(len(a) - 1)


def linear_form_matrix(a: Sequence[int]) -> IntMatrix:
    """Integer rows ``A`` with ``det [A; (x_1 ... x_n)] == a_1 x_1 + ... + a_n x_n``.

    ``A`` is made of the first ``n - 1`` rows of the transposed witness that
    reduces ``a / g`` to ``(0, ..., 0, 1)``; its first row is then scaled by
    ``g = gcd(a)``.
    """
    if len(a) < 2:  # noqa: PLR2004
        msg = "a linear form with one term is its own 1x1 matrix"
        raise DetRepError.degenerate_input(msg)
    g = math.gcd(*a)
    if g == 0:
        msg = "cannot build a linear form from an all-zero vector"
        raise DetRepError.degenerate_input(msg)
    _, witness = gcd_row_reduce([x // g for x in a])
    rows = normalize_sign(witness).forward.transpose().to_rows()[: len(a) - 1]
    rows[0] = [g * x for x in rows[0]]
    logger.debug("Linear form matrix for %d coefficients, gcd %d", len(a), g)
    return IntMatrix.from_rows(rows)
