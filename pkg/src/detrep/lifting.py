"""Coefficient lifting and uniform determinantal representations.

Every coefficient other than 1 becomes a fresh variable: the term ``c * m``
of ``p`` is rewritten as ``t * (m / x_v)`` with ``t = c * x_v`` for a chosen
carrier variable ``x_v`` of ``m``, or as ``t`` alone with ``t = c`` for the
constant term. The lifted polynomial has unit coefficients, so the integer
pipeline applies to it; substituting the bindings back into the resulting
pencil keeps every entry affine in the original variables.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import re
from typing import TYPE_CHECKING, Literal

from detrep.chains import chain_form, improved_chain_form
from detrep.exceptions import DetRepError
from detrep.pencil import PencilMatrix
from detrep.poly import Binding, Monomial, Polynomial, substitute_linear
from detrep.represent import ndr, rdr, tdr


if TYPE_CHECKING:
    from collections.abc import Sequence

    from detrep.chains import ChainForm, ChainKind, Strategy
    from detrep.pencil import FormTag


logger = logging.getLogger(__name__)

Carrier = Literal["shared", "lowest", "factor"]

_NUMBERED = re.compile(r"([A-Za-z_]+?)(\d+)")


@dataclass(frozen=True, slots=True)
class LiftedBinding:
    """Lifted variable ``name`` stands for ``coefficient * carrier``.

    A ``carrier`` of ``None`` binds the variable to the bare coefficient.
    """

    name: str
    coefficient: int | Polynomial
    carrier: str | None = None


@dataclass(frozen=True, slots=True)
class LiftingRecord:
    """Correspondence between lifted variables and the coefficients they replace."""

    names: tuple[str, ...]
    params: frozenset[str]
    bindings: tuple[LiftedBinding, ...]

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(n for n in self.names if n not in self.params)

    @property
    def lifted_names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.bindings)

    @property
    def extended_names(self) -> tuple[str, ...]:
        """Original names followed by the lifted ones."""
        return (*self.names, *self.lifted_names)

    def substitution(self) -> dict[int, Binding]:
        """Bindings keyed by generator index in ``extended_names``."""
        index = {name: i for i, name in enumerate(self.extended_names)}
        return {
            index[b.name]: Binding(
                b.coefficient, None if b.carrier is None else index[b.carrier]
            )
            for b in self.bindings
        }


def _fresh_names(taken: Sequence[str], variables: Sequence[str], count: int) -> list[str]:
    """Names for lifted variables.

    Variables sharing a prefix with trailing numbers (``x1, x2, x3``) continue
    their numbering (``x4, x5, ...``); anything else gets ``t1, t2, ...``.
    """
    prefix, start = "t", 1
    matches = [_NUMBERED.fullmatch(v) for v in variables]
    if matches and all(matches) and len({m.group(1) for m in matches if m}) == 1:
        prefix = matches[0].group(1) if matches[0] else prefix
        start = max(int(m.group(2)) for m in matches if m) + 1
    used = set(taken)
    names: list[str] = []
    number = start
    while len(names) < count:
        candidate = f"{prefix}{number}"
        if candidate not in used:
            names.append(candidate)
            used.add(candidate)
        number += 1
    return names


def _carriers(monomials: Sequence[Monomial], mode: Carrier) -> dict[Monomial, int | None]:
    """Carrier variable of every lifted monomial, ``None`` for none.

    ``shared`` settles single-variable monomials first, then lets every other
    monomial pick the carrier whose remaining part is already in use, falling
    back to its lowest-index variable.
    """
    carriers: dict[Monomial, int | None] = {}
    for m in monomials:
        if mode == "factor" or m.is_constant:
            carriers[m] = None
        elif mode == "lowest" or len(m.support) == 1:
            carriers[m] = m.support[0]
    if mode != "shared":
        return carriers
    in_use = {m.divide(v) for m, v in carriers.items() if v is not None}
    for m in monomials:
        if m in carriers:
            continue
        var = next((v for v in m.support if m.divide(v) in in_use), m.support[0])
        carriers[m] = var
        in_use.add(m.divide(var))
    return carriers


def lift_coefficients(
    p: Polynomial, carrier: Carrier = "shared"
) -> tuple[Polynomial, LiftingRecord]:
    """Replace every non-unit coefficient of ``p`` by a fresh variable.

    Args:
        p: Non-zero polynomial, with integer or parameter coefficients.
        carrier: How the lifted variable attaches to its monomial.
            ``"lowest"`` rides on the lowest-index variable, ``"shared"``
            prefers a variable whose remaining part another term already uses,
            and ``"factor"`` multiplies the whole monomial and binds to the
            bare coefficient.

    Returns:
        The lifted polynomial over ``(*variables, *lifted)`` with all
        coefficients 1, and the record of the bindings in canonical term order.
    """
    if p.is_zero:
        msg = "the zero polynomial has no coefficients to lift"
        raise DetRepError.degenerate_input(msg)
    variables = p.variable_names
    grouped = p.variable_terms()
    lifted_terms = [(m, c) for m, c in grouped if c != 1]
    carriers = _carriers([m for m, _ in lifted_terms], carrier)
    fresh = _fresh_names(p.names, variables, len(lifted_terms))
    lifted_names = (*variables, *fresh)
    size = len(lifted_names)
    terms: dict[Monomial, int] = {}
    bindings: list[LiftedBinding] = []
    for m, _ in grouped:
        if m in carriers:
            continue
        terms[Monomial((*m.exponents, *(0,) * len(fresh)))] = 1
    for k, (m, coeff) in enumerate(lifted_terms):
        var = carriers[m]
        rest = m if var is None else m.divide(var)
        exponents = list(rest.exponents) + [0] * len(fresh)
        exponents[len(variables) + k] = 1
        terms[Monomial(tuple(exponents))] = 1
        value: int | Polynomial = int(coeff) if coeff.is_constant else coeff
        bindings.append(
            LiftedBinding(fresh[k], value, None if var is None else variables[var])
        )
    lifted = Polynomial.from_terms(lifted_names, terms)
    record = LiftingRecord(p.names, p.params, tuple(bindings))
    logger.debug(
        "Lifted %d coefficients (%s carriers) into %d variables",
        len(bindings),
        carrier,
        size,
    )
    return lifted, record


def back_substitute(
    matrix: PencilMatrix, record: LiftingRecord, form: FormTag = "UDR"
) -> PencilMatrix:
    """Replace the lifted variables of ``matrix`` by their bindings.

    The result is a pencil over the original names and parameters.
    """
    extended = record.extended_names
    substitution = record.substitution()
    rows = tuple(
        tuple(
            substitute_linear(entry.embed(extended, record.params), substitution)
            .restrict(record.names)
            for entry in row
        )
        for row in matrix
    )
    column_vars = None
    if matrix.column_vars is not None:
        carrier_of = {b.name: b.carrier for b in record.bindings}
        column_vars = []
        for var in matrix.column_vars:
            name = None if var is None else matrix.names[var]
            name = carrier_of.get(name, name) if name is not None else None
            column_vars.append(None if name is None else record.names.index(name))
    return PencilMatrix(
        record.names,
        rows,
        form,
        record.params,
        None if column_vars is None else tuple(column_vars),
        matrix.parity,
    )


def lifted_representation(
    p: Polynomial,
    form: FormTag = "UDR",
    chain: ChainKind = "improved",
    strategy: Strategy = "lookahead",
    carrier: Carrier = "shared",
) -> tuple[PencilMatrix, ChainForm, LiftingRecord]:
    """Run the integer pipeline on the lifted polynomial and substitute back.

    ``form`` selects the last stage: ``NDR`` and ``TDR`` stop early, ``RDR``
    and ``UDR`` run the reduction.
    """
    lifted, record = lift_coefficients(p, carrier)
    originals = list(range(len(record.variable_names)))
    extra = list(range(len(originals), lifted.varcount))
    priority = [*originals, *extra] if carrier == "factor" else [*extra, *originals]
    if chain == "improved":
        cf = improved_chain_form(lifted, strategy, priority)
    else:
        cf = chain_form(lifted, priority)
    matrix = ndr(cf)
    if form != "NDR":
        matrix = tdr(matrix)
    if form in {"RDR", "UDR"}:
        matrix = rdr(matrix)
    pencil = back_substitute(matrix, record, form)
    logger.debug("Lifted %s of dimension %d", form, pencil.n)
    return pencil, cf, record


def udr(
    p: Polynomial,
    carrier: Carrier = "shared",
    strategy: Strategy = "lookahead",
    chain: ChainKind = "improved",
) -> PencilMatrix:
    """Uniform determinantal representation ``A_0 + sum(x_i A_i)`` of ``p``.

    Coefficients are lifted, the lifted polynomial goes through the chain-form,
    NDR, TDR and RDR stages, and the lifted variables are substituted back.
    Parameter coefficients end up as parameter entries of the pencil, integer
    coefficients as integers.
    """
    pencil, _, _ = lifted_representation(p, "UDR", chain, strategy, carrier)
    return pencil
