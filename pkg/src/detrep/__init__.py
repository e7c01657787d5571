"""Determinantal representations of multivariate polynomials."""

from detrep.poly import (
    Binding,
    EvalPoint,
    Monomial,
    Polynomial,
    evaluate,
    format_polynomial,
    format_polynomial_latex,
    substitute_linear,
)
from detrep.parsing import parse_polynomial
from detrep.linalg import (
    IntMatrix,
    UnimodularWitness,
    determinant,
    gcd_row_reduce,
    invert_unimodular,
    linear_form_matrix,
    solve_unit_determinant,
)
from detrep.chains import (
    Chain,
    ChainEntry,
    ChainForm,
    Successor,
    chain_form,
    chain_form_from_entries,
    chain_of_monomial,
    improved_chain_form,
)
from detrep.pencil import (
    AffineEntry,
    PencilMatrix,
    cofactor_pencil_determinant,
    eval_determinant_check,
    is_affine,
    is_ndr,
    is_tdr,
    ndr_violations,
    symbolic_determinant,
    tdr_violations,
)
from detrep.represent import SplitPencil, ndr, rdr, tdr
from detrep.lifting import LiftedBinding, LiftingRecord, lift_coefficients, udr
from detrep.pipeline import Representation, Verification, represent, verify
from detrep.schema import ChainFormDocument, PencilDocument, PolynomialDocument, dump_json
from detrep.render import render
from detrep.config import RunConfig
from detrep.exceptions import DetRepError

__version__ = "0.1.0"

__all__ = [  # noqa: RUF022
    # polynomials
    "Monomial",
    "Polynomial",
    "EvalPoint",
    "Binding",
    "parse_polynomial",
    "evaluate",
    "substitute_linear",
    "format_polynomial",
    "format_polynomial_latex",
    # integer linear algebra
    "IntMatrix",
    "UnimodularWitness",
    "gcd_row_reduce",
    "determinant",
    "invert_unimodular",
    "solve_unit_determinant",
    "linear_form_matrix",
    # chain-forms
    "Chain",
    "ChainEntry",
    "ChainForm",
    "Successor",
    "chain_of_monomial",
    "chain_form",
    "improved_chain_form",
    "chain_form_from_entries",
    # pencils
    "AffineEntry",
    "PencilMatrix",
    "symbolic_determinant",
    "cofactor_pencil_determinant",
    "eval_determinant_check",
    "is_affine",
    "is_ndr",
    "is_tdr",
    "ndr_violations",
    "tdr_violations",
    # representations
    "SplitPencil",
    "ndr",
    "tdr",
    "rdr",
    "LiftedBinding",
    "LiftingRecord",
    "lift_coefficients",
    "udr",
    "Representation",
    "Verification",
    "represent",
    "verify",
    # documents and rendering
    "PolynomialDocument",
    "PencilDocument",
    "ChainFormDocument",
    "dump_json",
    "render",
    # configuration and errors
    "RunConfig",
    "DetRepError",
]
