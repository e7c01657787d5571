"""Normal, triangular and reduced determinantal representations."""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math
from typing import TYPE_CHECKING

from detrep.exceptions import DetRepError
from detrep.linalg import IntMatrix, determinant, gcd_row_reduce, linear_form_matrix
from detrep.pencil import PencilMatrix, infer_column_vars
from detrep.poly import Polynomial


if TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import Self

    from detrep.chains import ChainForm
    from detrep.pencil import FormTag


logger = logging.getLogger(__name__)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _audit(transform: list[list[int]], what: str) -> int:
    det = determinant(IntMatrix.from_rows(transform))
    if abs(det) != 1:
        raise DetRepError.not_unimodular(det)
    logger.debug("%s transformation has determinant %d", what, det)
    return det


def _permutation_sign(order: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(order))
        for j in range(i + 1, len(order))
        if order[i] > order[j]
    )
    return -1 if inversions % 2 else 1


@dataclass(slots=True)
class SplitPencil:
    """Integer pencil ``A + B`` with one variable per column.

    ``constants`` is ``A``; ``coefficients[r][c]`` is the coefficient of
    ``x_{column_vars[c]}`` in entry ``(r, c)``.
    """

    constants: list[list[int]]
    coefficients: list[list[int]]
    column_vars: list[int | None]

    @property
    def n(self) -> int:
        return len(self.constants)

    @classmethod
    def from_pencil(cls, matrix: PencilMatrix) -> Self:
        if not matrix.is_integral:
            msg = "splitting needs an integer pencil"
            raise DetRepError.unsupported(msg)
        column_vars = list(matrix.column_vars or infer_column_vars(matrix))
        rows = matrix.affine_rows()
        constants = [[int(e.constant) for e in row] for row in rows]
        coefficients = [
            [
                0 if column_vars[c] is None else int(e.coefficient(column_vars[c]))
                for c, e in enumerate(row)
            ]
            for row in rows
        ]
        return cls(constants, coefficients, column_vars)

    def to_pencil(
        self, names: Sequence[str], form: FormTag, parity: int = 1
    ) -> PencilMatrix:
        names = tuple(names)
        gens = [Polynomial.generator(name, names) for name in names]
        rows = []
        for r in range(self.n):
            row = []
            for c, var in enumerate(self.column_vars):
                entry = Polynomial.constant(self.constants[r][c], names)
                if var is not None and self.coefficients[r][c]:
                    entry += gens[var] * self.coefficients[r][c]
                row.append(entry)
            rows.append(tuple(row))
        return PencilMatrix(
            names, tuple(rows), form, frozenset(), tuple(self.column_vars), parity
        )

    # --- lockstep operations on A, B and the accumulated row transformation ------

    def rotate_to_bottom(self, row: int, transform: list[list[int]]) -> None:
        """Move ``row`` to the bottom, shifting the rows below it up."""
        for matrix in (self.constants, self.coefficients, transform):
            matrix.append(matrix.pop(row))

    def swap_rows(self, i: int, j: int, transform: list[list[int]]) -> None:
        for matrix in (self.constants, self.coefficients, transform):
            matrix[i], matrix[j] = matrix[j], matrix[i]

    def swap_columns(self, i: int, j: int) -> None:
        for matrix in (self.constants, self.coefficients):
            for row in matrix:
                row[i], row[j] = row[j], row[i]
        column_vars = self.column_vars
        column_vars[i], column_vars[j] = column_vars[j], column_vars[i]

    def mix_rows(self, start: int, mixing: IntMatrix, transform: list[list[int]]) -> None:
        """Replace the rows from ``start`` on by ``mixing @ rows``."""
        for matrix in (self.constants, self.coefficients, transform):
            block = matrix[start:]
            width = len(block[0])
            matrix[start:] = [
                [
                    sum(w * row[c] for w, row in zip(weights, block) if w)
                    for c in range(width)
                ]
                for weights in mixing
            ]

    def subtract_row(
        self, target: int, source: int, factor: int, transform: list[list[int]]
    ) -> None:
        for matrix in (self.constants, self.coefficients, transform):
            source_row = matrix[source]
            matrix[target] = [a - factor * b for a, b in zip(matrix[target], source_row)]

    def negate_column(self, col: int) -> None:
        for matrix in (self.constants, self.coefficients):
            for row in matrix:
                row[col] = -row[col]


# --- NDR -----------------------------------------------------------------------------


def ndr(cf: ChainForm) -> PencilMatrix:
    """Normal determinantal representation of a chain-form.

    The coefficient vector gives the integer rows of ``linear_form_matrix``,
    stacked over the row of monomials. For every entry with a successor ``j``
    under ``x_v``, the column operation ``col_i -= x_v * col_j`` clears the
    monomial row and leaves a column affine in ``x_v``; columns are processed
    left to right, so ``col_j`` is still untouched when it is used.
    """
    n = len(cf)
    if n == 0:
        msg = "empty chain-form"
        raise DetRepError.degenerate_input(msg)
    monomials = cf.monomials
    column_vars: list[int | None] = [
        m.support[0] if m.degree == 1 else None for m in monomials
    ]
    if n == 1:
        coeff = cf.entries[0].coefficient
        constant = monomials[0].is_constant
        split = SplitPencil(
            [[coeff if constant else 0]], [[0 if constant else coeff]], column_vars
        )
        return split.to_pencil(cf.names, "NDR")
    upper = linear_form_matrix(cf.coefficients).to_rows()
    constants = [*upper, [int(m.is_constant) for m in monomials]]
    coefficients = [[0] * n for _ in range(n - 1)]
    coefficients.append([int(m.degree == 1) for m in monomials])
    for i, entry in enumerate(cf.entries):
        link = entry.successor
        if link is None:
            continue
        column_vars[i] = link.var
        for r in range(n - 1):
            coefficients[r][i] = -upper[r][link.position]
    logger.debug("NDR of dimension %d", n)
    return SplitPencil(constants, coefficients, column_vars).to_pencil(cf.names, "NDR")


# --- TDR -----------------------------------------------------------------------------


def tdr(matrix: PencilMatrix) -> PencilMatrix:
    """Triangular determinantal representation of an NDR.

    Column by column: rows without variable part are rotated to the bottom,
    the column holding the least non-zero coefficient of the current row is
    swapped into place, the generalized Euclidean algorithm runs down the
    column to leave the gcd on the diagonal and zeros below it, and the
    coefficients above the diagonal are reduced modulo it. All operations act
    on constants and coefficients together. A final negation of the first
    column restores the determinant sign.
    """
    if matrix.form != "NDR":
        raise DetRepError.wrong_form("NDR", matrix.form)
    split = SplitPencil.from_pencil(matrix)
    b = split.coefficients
    n = split.n
    transform = _identity(n)
    column_sign = 1
    i = 0
    while i < n and any(any(b[r]) for r in range(i, n)):
        while not any(b[i]):
            split.rotate_to_bottom(i, transform)
        pivot = min((abs(v), c) for c, v in enumerate(b[i]) if c >= i and v)[1]
        if pivot != i:
            split.swap_columns(i, pivot)
            column_sign = -column_sign
        _, witness = gcd_row_reduce([b[r][i] for r in range(i, n)])
        split.mix_rows(i, witness.forward.transpose(), transform)
        if i != n - 1:
            split.swap_rows(i, n - 1, transform)
        diagonal = b[i][i]
        for r in range(i):
            if quotient := b[r][i] // diagonal:
                split.subtract_row(r, i, quotient, transform)
        i += 1
    parity = _audit(transform, "TDR row") * column_sign
    if parity < 0:
        split.negate_column(0)
    logger.debug("TDR of dimension %d with %d variable rows", n, i)
    return split.to_pencil(matrix.names, "TDR", parity)


# --- RDR -----------------------------------------------------------------------------


def rdr(matrix: PencilMatrix) -> PencilMatrix:
    """Reduced determinantal representation of a TDR.

    Constant rows are moved to the bottom. Working upwards from the last row,
    unimodular column operations on each constant row's leading segment leave
    its gcd on the diagonal and zeros to the left, so the matrix becomes
    ``[[L, L'], [0, D]]`` with ``D`` upper triangular. The result is ``L`` with
    its first row multiplied by ``det(D)`` and the accumulated sign.

    A TDR made only of constant rows reduces to the 1x1 matrix of its
    determinant.
    """
    if matrix.form != "TDR":
        raise DetRepError.wrong_form("TDR", matrix.form)
    if not matrix.is_integral:
        msg = "reduction needs an integer pencil"
        raise DetRepError.unsupported(msg)
    n = matrix.n
    rows = matrix.affine_rows()
    constant = [r for r in range(n) if all(e.is_constant for e in rows[r])]
    if not constant:
        return matrix.retag("RDR")
    order = [r for r in range(n) if r not in constant] + constant
    layers: dict[int | None, list[list[int]]] = {
        None: [[int(rows[r][c].constant) for c in range(n)] for r in order]
    }
    for var in sorted({v for row in rows for e in row for v in e.variables}):
        layers[var] = [
            [int(rows[r][c].coefficient(var)) for c in range(n)] for r in order
        ]
    kept = n - len(constant)
    if kept == 0:
        det = determinant(IntMatrix.from_rows(layers[None]))
        return PencilMatrix.from_rows(matrix.names, [[det]], "RDR", column_vars=(None,))
    transform = _identity(n)
    for r in range(n - 1, kept - 1, -1):
        segment = layers[None][r][: r + 1]
        if not any(segment):
            msg = "constant rows are linearly dependent"
            raise DetRepError.degenerate_input(msg)
        _, witness = gcd_row_reduce(segment)
        mixing = witness.forward
        for target in (*layers.values(), transform):
            for row in target:
                head = mixing.vecmul(row[: r + 1])
                row[: r + 1] = head
    sign = _audit(transform, "RDR column") * _permutation_sign(order)
    scale = sign * math.prod(layers[None][r][r] for r in range(kept, n))
    names = matrix.names
    gens = {
        var: Polynomial.generator(names[var], names) for var in layers if var is not None
    }
    reduced = []
    for r in range(kept):
        row = []
        for c in range(kept):
            entry = Polynomial.constant(layers[None][r][c], names)
            for var, gen in gens.items():
                if coeff := layers[var][r][c]:
                    entry += gen * coeff
            row.append(entry * scale if r == 0 else entry)
        reduced.append(tuple(row))
    logger.debug("RDR of dimension %d from %d constant rows", kept, len(constant))
    return PencilMatrix(names, tuple(reduced), "RDR", frozenset(), None, sign)
