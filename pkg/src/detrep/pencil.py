"""Matrices with affine entries, their determinants and structural predicates."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
import logging
import random
from typing import TYPE_CHECKING, Literal

from detrep.exceptions import DetRepError
from detrep.linalg import (
    IntMatrix,
    cofactor_determinant,
    determinant,
    fraction_free_determinant,
)
from detrep.parsing import parse_polynomial
from detrep.poly import EvalPoint, Monomial, Polynomial, evaluate


if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence
    from typing import Self

    from sympy.polys.rings import PolyElement


logger = logging.getLogger(__name__)

FormTag = Literal["NDR", "TDR", "RDR", "UDR", "RAW"]
Coefficient = int | Polynomial

COFACTOR_LIMIT = 4
DEFAULT_TRIALS = 20


@dataclass(frozen=True, slots=True)
class AffineEntry:
    """``constant + sum(linear[v] * x_v)``.

    Coefficients are integers for integer pencils and polynomials in the
    parameters otherwise. Zero linear coefficients are never stored.
    """

    constant: Coefficient
    linear: dict[int, Coefficient] = field(default_factory=dict)

    @property
    def is_constant(self) -> bool:
        return not self.linear

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.linear))

    def coefficient(self, var: int) -> Coefficient:
        return self.linear.get(var, 0)


def _exact_divide(a: PolyElement, b: PolyElement) -> PolyElement:
    return a.exquo(b)


@dataclass(frozen=True, slots=True)
class PencilMatrix:
    """Square matrix of affine entries over named generators.

    Entries are polynomials over ``names``; the names in ``params`` are
    coefficient parameters, every other name is a pencil variable.
    ``column_vars`` records the variable of each column for NDR and TDR
    pencils, ``parity`` the sign correction applied while building the form.
    """

    names: tuple[str, ...]
    entries: tuple[tuple[Polynomial, ...], ...]
    form: FormTag = "RAW"
    params: frozenset[str] = frozenset()
    column_vars: tuple[int | None, ...] | None = None
    parity: int = 1

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise DetRepError.not_square(0, 0)
        for row in self.entries:
            if len(row) != n:
                raise DetRepError.not_square(n, len(row))
            for entry in row:
                if entry.names != self.names:
                    expected, actual = len(self.names), len(entry.names)
                    raise DetRepError.dimension_mismatch(expected, actual)
        if self.column_vars is not None and len(self.column_vars) != n:
            raise DetRepError.dimension_mismatch(n, len(self.column_vars))

    @classmethod
    def from_rows(
        cls,
        names: Sequence[str],
        rows: Sequence[Sequence[Polynomial | int | str]],
        form: FormTag = "RAW",
        params: Sequence[str] = (),
        column_vars: Sequence[int | None] | None = None,
    ) -> Self:
        """Build a pencil from polynomials, integers or entry text.

        Text entries are parsed with the pencil variables as the variable
        order; bracketed names in them must be listed in ``params``.
        """
        names = tuple(names)
        variables = [n for n in names if n not in params]

        def coerce(value: Polynomial | int | str) -> Polynomial:
            if isinstance(value, Polynomial):
                return value.embed(names, params)
            if isinstance(value, int):
                return Polynomial.constant(value, names, params)
            return parse_polynomial(value, variables).embed(names, params)

        entries = tuple(tuple(coerce(v) for v in row) for row in rows)
        vars_ = None if column_vars is None else tuple(column_vars)
        return cls(names, entries, form, frozenset(params), vars_)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def variables(self) -> tuple[int, ...]:
        """Indices of the pencil variables (names that are not parameters)."""
        return tuple(i for i, name in enumerate(self.names) if name not in self.params)

    @property
    def is_integral(self) -> bool:
        return not self.params

    def __getitem__(self, key: tuple[int, int]) -> Polynomial:
        row, col = key
        return self.entries[row][col]

    def __iter__(self) -> Iterator[tuple[Polynomial, ...]]:
        return iter(self.entries)

    def retag(self, form: FormTag) -> PencilMatrix:
        return replace(self, form=form)

    def affine_entry(self, row: int, col: int) -> AffineEntry:
        """Split entry ``(row, col)`` into constant and per-variable coefficients.

        Raises:
            DetRepError: If the entry is not affine in the pencil variables.
        """
        entry = self.entries[row][col]
        variables = set(self.variables)
        param_indices = [i for i in range(len(self.names)) if i not in variables]
        param_names = tuple(self.names[i] for i in param_indices)
        grouped: dict[int | None, dict[Monomial, int]] = {}
        for monomial, coeff in entry.terms():
            support = [i for i in monomial.support if i in variables]
            if len(support) > 1 or any(monomial.exponents[i] > 1 for i in support):
                raise DetRepError.non_affine(row, col)
            key = support[0] if support else None
            inner = Monomial(tuple(monomial.exponents[i] for i in param_indices))
            grouped.setdefault(key, {})[inner] = coeff

        def coefficient(terms: dict[Monomial, int]) -> Coefficient:
            value = Polynomial.from_terms(param_names, terms, param_names)
            return int(value) if self.is_integral else value

        constant = coefficient(grouped.pop(None, {}))
        linear = {var: coefficient(terms) for var, terms in sorted(grouped.items())}
        return AffineEntry(constant, linear)

    def affine_rows(self) -> list[list[AffineEntry]]:
        return [[self.affine_entry(r, c) for c in range(self.n)] for r in range(self.n)]

    def evaluate_at(self, point: EvalPoint) -> IntMatrix:
        return IntMatrix.from_rows([[evaluate(e, point) for e in row] for row in self])


def zero_pencil(
    names: Sequence[str], form: FormTag = "RAW", params: Sequence[str] = ()
) -> PencilMatrix:
    """The 1x1 matrix [0], the representation of the zero polynomial."""
    return PencilMatrix.from_rows(names, [[0]], form, params, (None,))


# --- determinants ------------------------------------------------------------------


def symbolic_determinant(matrix: PencilMatrix) -> Polynomial:
    """Exact determinant as a polynomial over the pencil's names.

    Cofactor expansion up to 4x4, fraction-free elimination over the
    polynomial ring above that.
    """
    rows = [[entry.element for entry in row] for row in matrix]
    ring = matrix.entries[0][0].ring
    if matrix.n <= COFACTOR_LIMIT:
        det = cofactor_determinant(rows, ring.zero, ring.one)
    else:
        det = fraction_free_determinant(rows, _exact_divide, ring.one)
    return Polynomial(det, matrix.names, matrix.params)


def cofactor_pencil_determinant(matrix: PencilMatrix) -> Polynomial:
    """Laplace expansion oracle, independent of the elimination path."""
    rows = [[entry.element for entry in row] for row in matrix]
    ring = matrix.entries[0][0].ring
    det = cofactor_determinant(rows, ring.zero, ring.one)
    return Polynomial(det, matrix.names, matrix.params)


def eval_points(size: int, trials: int, seed: int) -> list[EvalPoint]:
    """Deterministic sample points with coordinates in [-10^6, 10^6]."""
    rng = random.Random(seed)
    return [EvalPoint.random(rng, size) for _ in range(trials)]


def eval_determinant_check(
    matrix: PencilMatrix,
    p: Polynomial,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> bool:
    """Compare ``det(matrix)`` with ``p`` at random integer points.

    ``p`` is re-expressed over the pencil's names, so parameters are sampled
    like variables.
    """
    if trials < 1:
        msg = "evaluation checks need at least one trial"
        raise DetRepError.unsupported(msg)
    target = p.embed(matrix.names, matrix.params)
    for point in eval_points(len(matrix.names), trials, seed):
        if determinant(matrix.evaluate_at(point)) != evaluate(target, point):
            logger.debug("Determinant mismatch at %s", point.values)
            return False
    return True


# --- structural predicates ---------------------------------------------------------


def constant_rows(matrix: PencilMatrix) -> list[int]:
    """Rows whose entries carry no variable part."""
    return [
        r for r, row in enumerate(matrix.affine_rows()) if all(e.is_constant for e in row)
    ]


def is_affine(matrix: PencilMatrix) -> bool:
    """Every entry has degree at most one in the pencil variables."""
    try:
        matrix.affine_rows()
    except DetRepError:
        return False
    return True


def infer_column_vars(matrix: PencilMatrix) -> tuple[int | None, ...]:
    """The single variable used in each column.

    Raises:
        DetRepError: If a column mixes variables.
    """
    rows = matrix.affine_rows()
    result: list[int | None] = []
    for c in range(matrix.n):
        used = {v for r in range(matrix.n) for v in rows[r][c].variables}
        if len(used) > 1:
            msg = f"column {c} uses several variables"
            raise DetRepError.degenerate_input(msg)
        result.append(used.pop() if used else None)
    return tuple(result)


def ndr_violations(matrix: PencilMatrix) -> list[str]:
    """Columns whose entries use a variable other than the column's own."""
    try:
        rows = matrix.affine_rows()
    except DetRepError as error:
        return [str(error)]
    column_vars = matrix.column_vars
    problems: list[str] = []
    for c in range(matrix.n):
        used = {v for r in range(matrix.n) for v in rows[r][c].variables}
        declared = column_vars[c] if column_vars is not None else None
        allowed = {declared} if declared is not None else set()
        if column_vars is None and len(used) <= 1:
            continue
        if not used <= allowed:
            problems.append(f"column {c} uses variables {sorted(used)}")
    return problems


def is_ndr(matrix: PencilMatrix) -> bool:
    return not ndr_violations(matrix)


def variable_coefficients(matrix: PencilMatrix) -> list[list[int]]:
    """Coefficient of each column's variable, entry by entry (integer NDR pencils)."""
    column_vars = matrix.column_vars or infer_column_vars(matrix)
    rows = matrix.affine_rows()
    return [
        [
            0 if column_vars[c] is None else int(rows[r][c].coefficient(column_vars[c]))
            for c in range(matrix.n)
        ]
        for r in range(matrix.n)
    ]


def tdr_violations(matrix: PencilMatrix) -> list[str]:
    """Triangular-form conditions that fail.

    With ``k`` the number of rows up to the last non-constant one:
    the diagonal coefficients of the first ``k`` columns are non-zero, rows
    from ``k`` on are constant, those columns have constants below the
    diagonal, and their coefficients above the diagonal are smaller in
    absolute value than the diagonal one.
    """
    if problems := ndr_violations(matrix):
        return problems
    if not matrix.is_integral:
        return ["triangular form needs integer coefficients"]
    b = variable_coefficients(matrix)
    constant = set(constant_rows(matrix))
    k = max((r + 1 for r in range(matrix.n) if r not in constant), default=0)
    for i in range(k):
        if not b[i][i]:
            problems.append(f"diagonal coefficient {i} is zero")
            continue
        problems.extend(
            f"entry ({j}, {i}) below the diagonal is not constant"
            for j in range(i + 1, matrix.n)
            if b[j][i]
        )
        problems.extend(
            f"entry ({j}, {i}) is not reduced modulo the diagonal"
            for j in range(i)
            if abs(b[j][i]) >= abs(b[i][i])
        )
    return problems


def is_tdr(matrix: PencilMatrix) -> bool:
    return not tdr_violations(matrix)
