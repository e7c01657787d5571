"""JSON documents for polynomials, pencils and chain-forms.

Integers travel as decimal strings so that no consumer truncates them to 64
bits. Coefficients of parametric pencils are written in the input grammar,
for example ``"2*[c1] - [c2]"``.
"""

from __future__ import annotations

import re
from typing import Annotated, Literal

from pydantic import Field

from detrep.base import Schema
from detrep.chains import ChainEntry, ChainForm, Successor
from detrep.exceptions import DetRepError
from detrep.parsing import parse_polynomial
from detrep.pencil import PencilMatrix
from detrep.poly import Monomial, Polynomial


_INTEGER = re.compile(r"-?\d+")


def _coefficient(text: str, names: tuple[str, ...], params: frozenset[str]) -> Polynomial:
    if _INTEGER.fullmatch(text):
        return Polynomial.constant(int(text), names, params)
    value = parse_polynomial(text, var_order=())
    if unknown := set(value.names) - params:
        msg = f"coefficient {text!r} uses undeclared parameters {sorted(unknown)}"
        raise DetRepError.degenerate_input(msg)
    return value.embed(names, params)


class TermDocument(Schema):
    coeff: Annotated[str, Field(pattern=r"^-?\d+$", description="Decimal coefficient")]
    exps: Annotated[list[Annotated[int, Field(ge=0)]], Field(description="Exponents")]


class PolynomialDocument(Schema):
    """``{"vars": [...], "terms": [{"coeff": "...", "exps": [...]}]}``.

    Exponent vectors run over the variables followed by the parameters.
    """

    variables: Annotated[list[str], Field(alias="vars")]
    params: list[str] = Field(default_factory=list)
    terms: list[TermDocument] = Field(default_factory=list)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> PolynomialDocument:
        variables = list(p.variable_names)
        params = list(p.parameter_names)
        canonical = p.embed((*variables, *params))
        terms = [
            TermDocument(coeff=str(coeff), exps=list(m.exponents))
            for m, coeff in canonical.terms()
        ]
        return cls(variables=variables, params=params, terms=terms)

    def to_polynomial(self) -> Polynomial:
        names = (*self.variables, *self.params)
        if len(set(names)) != len(names):
            msg = "variable and parameter names must be distinct"
            raise DetRepError.degenerate_input(msg)
        totals: dict[Monomial, int] = {}
        for term in self.terms:
            if len(term.exps) != len(names):
                raise DetRepError.dimension_mismatch(len(names), len(term.exps))
            monomial = Monomial(tuple(term.exps))
            totals[monomial] = totals.get(monomial, 0) + int(term.coeff)
        return Polynomial.from_terms(names, totals, self.params)


class EntryDocument(Schema):
    """Affine entry: constant ``c`` plus ``lin[variable index] * variable``."""

    c: str = "0"
    lin: dict[str, str] = Field(default_factory=dict)


class PencilDocument(Schema):
    form: Literal["NDR", "TDR", "RDR", "UDR", "RAW"] = "RAW"
    n: Annotated[int, Field(ge=1)]
    variables: Annotated[list[str], Field(alias="vars")]
    params: list[str] = Field(default_factory=list)
    entries: list[list[EntryDocument]]
    column_vars: list[int | None] | None = None

    @classmethod
    def from_pencil(cls, matrix: PencilMatrix) -> PencilDocument:
        variables = list(matrix.variables)
        position = {var: k for k, var in enumerate(variables)}
        entries = [
            [
                EntryDocument(
                    c=str(entry.constant),
                    lin={
                        str(position[var]): str(coeff)
                        for var, coeff in entry.linear.items()
                    },
                )
                for entry in row
            ]
            for row in matrix.affine_rows()
        ]
        column_vars = None
        if matrix.column_vars is not None:
            column_vars = [None if v is None else position[v] for v in matrix.column_vars]
        return cls(
            form=matrix.form,
            n=matrix.n,
            variables=[matrix.names[v] for v in variables],
            params=[name for name in matrix.names if name in matrix.params],
            entries=entries,
            column_vars=column_vars,
        )

    def to_pencil(self) -> PencilMatrix:
        """Rebuild the pencil over ``(*vars, *params)``.

        Raises:
            DetRepError: If the entry grid is not ``n x n`` or refers to an
                unknown variable or parameter.
        """
        names = (*self.variables, *self.params)
        params = frozenset(self.params)
        if len(self.entries) != self.n:
            raise DetRepError.not_square(len(self.entries), self.n)
        gens = [Polynomial.generator(name, names, params) for name in self.variables]
        rows = []
        for row in self.entries:
            if len(row) != self.n:
                raise DetRepError.not_square(self.n, len(row))
            values = []
            for entry in row:
                value = _coefficient(entry.c, names, params)
                for key, coeff in entry.lin.items():
                    var = int(key)
                    if not 0 <= var < len(gens):
                        raise DetRepError.dimension_mismatch(len(gens), var + 1)
                    value += _coefficient(coeff, names, params) * gens[var]
                values.append(value)
            rows.append(tuple(values))
        column_vars = None if self.column_vars is None else tuple(self.column_vars)
        return PencilMatrix(names, tuple(rows), self.form, params, column_vars)


class ChainEntryDocument(Schema):
    coeff: Annotated[str, Field(pattern=r"^-?\d+$")]
    exps: list[Annotated[int, Field(ge=0)]]
    successor: int | None = None
    var: int | None = None


class ChainFormDocument(Schema):
    """Chain-form entries in order, with successor positions and variables."""

    kind: Literal["plain", "improved"] = "improved"
    variables: Annotated[list[str], Field(alias="vars")]
    entries: list[ChainEntryDocument]

    @classmethod
    def from_chain_form(cls, cf: ChainForm) -> ChainFormDocument:
        entries = [
            ChainEntryDocument(
                coeff=str(entry.coefficient),
                exps=list(entry.monomial.exponents),
                successor=None if entry.successor is None else entry.successor.position,
                var=None if entry.successor is None else entry.successor.var,
            )
            for entry in cf
        ]
        return cls(kind=cf.kind, variables=list(cf.names), entries=entries)

    def to_chain_form(self) -> ChainForm:
        """Rebuild and validate the chain-form.

        Raises:
            DetRepError: If an entry has the wrong length or the links are
                inconsistent.
        """
        names = tuple(self.variables)
        entries = []
        for doc in self.entries:
            if len(doc.exps) != len(names):
                raise DetRepError.dimension_mismatch(len(names), len(doc.exps))
            link = None
            if doc.successor is not None:
                if doc.var is None:
                    msg = "a successor needs its variable"
                    raise DetRepError.degenerate_input(msg)
                link = Successor(doc.successor, doc.var)
            entries.append(ChainEntry(int(doc.coeff), Monomial(tuple(doc.exps)), link))
        cf = ChainForm(names, tuple(entries), self.kind)
        if problems := cf.violations():
            raise DetRepError.degenerate_input("; ".join(problems))
        return cf


def dump_json(document: Schema) -> str:
    return document.model_dump_json(by_alias=True, indent=2)
