"""End-to-end driver: polynomial in, verified determinantal representation out."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import TYPE_CHECKING, Literal

from detrep.chains import chain_form, improved_chain_form
from detrep.exceptions import DetRepError
from detrep.lifting import lifted_representation
from detrep.pencil import (
    DEFAULT_TRIALS,
    eval_determinant_check,
    symbolic_determinant,
    zero_pencil,
)
from detrep.represent import ndr, rdr, tdr


if TYPE_CHECKING:
    from detrep.chains import ChainForm, ChainKind, Strategy
    from detrep.lifting import Carrier, LiftingRecord
    from detrep.pencil import FormTag, PencilMatrix
    from detrep.poly import Polynomial


logger = logging.getLogger(__name__)

Form = Literal["ndr", "tdr", "rdr", "udr"]
VerifyMode = Literal["auto", "symbolic", "eval", "none"]

SYMBOLIC_LIMIT = 9

_TAGS: dict[Form, FormTag] = {"ndr": "NDR", "tdr": "TDR", "rdr": "RDR", "udr": "UDR"}


@dataclass(frozen=True, slots=True)
class Representation:
    """A pencil together with the intermediate data that produced it."""

    source: Polynomial
    pencil: PencilMatrix
    chain_form: ChainForm | None = None
    lifting: LiftingRecord | None = None

    @property
    def dimension(self) -> int:
        return self.pencil.n


@dataclass(frozen=True, slots=True)
class Verification:
    """Outcome of a determinant check."""

    mode: Literal["symbolic", "eval", "none"]
    passed: bool | None
    trials: int = 0

    def describe(self) -> str:
        if self.passed is None:
            return "skipped"
        verdict = "yes" if self.passed else "no"
        if self.mode == "eval":
            return f"{verdict} (eval, {self.trials} trials)"
        return f"{verdict} ({self.mode})"


def represent(
    p: Polynomial,
    form: Form = "rdr",
    chain: ChainKind = "improved",
    strategy: Strategy = "lookahead",
    carrier: Carrier = "shared",
) -> Representation:
    """Build the requested representation of ``p``.

    The zero polynomial maps to the 1x1 matrix ``[0]``. Polynomials with
    parameter coefficients go through coefficient lifting for every form;
    ``ndr``, ``tdr`` and ``rdr`` then lift with ``"factor"`` carriers, ``udr``
    with ``carrier``. Integer polynomials are lifted only for ``udr``.
    """
    tag = _TAGS[form]
    if p.is_zero:
        return Representation(p, zero_pencil(p.names, tag, sorted(p.params)))
    if form == "udr" or p.params:
        mode: Carrier = carrier if form == "udr" else "factor"
        pencil, cf, record = lifted_representation(p, tag, chain, strategy, mode)
        return Representation(p, pencil, cf, record)
    cf = improved_chain_form(p, strategy) if chain == "improved" else chain_form(p)
    matrix = ndr(cf)
    if form != "ndr":
        matrix = tdr(matrix)
    if form == "rdr":
        matrix = rdr(matrix)
    return Representation(p, matrix, cf)


def verify(
    pencil: PencilMatrix,
    p: Polynomial,
    mode: VerifyMode = "auto",
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> Verification:
    """Check ``det(pencil) == p``.

    ``auto`` compares symbolically up to dimension 9 and at ``trials`` random
    points above.
    """
    if mode == "none":
        return Verification("none", None)
    if mode == "auto":
        mode = "symbolic" if pencil.n <= SYMBOLIC_LIMIT else "eval"
    if mode == "symbolic":
        logger.info("Symbolic determinant check of a %dx%d pencil", pencil.n, pencil.n)
        passed = symbolic_determinant(pencil) == p.embed(pencil.names, pencil.params)
        return Verification("symbolic", passed)
    logger.info(
        "Evaluation check of a %dx%d pencil, %d trials", pencil.n, pencil.n, trials
    )
    passed = eval_determinant_check(pencil, p, trials, seed)
    return Verification("eval", passed, trials)


def represent_verified(
    p: Polynomial,
    form: Form = "rdr",
    *,
    chain: ChainKind = "improved",
    strategy: Strategy = "lookahead",
    carrier: Carrier = "shared",
    mode: VerifyMode = "auto",
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> tuple[Representation, Verification]:
    """``represent`` followed by ``verify``.

    Raises:
        DetRepError: With the verification-failed code when the check fails.
    """
    result = represent(p, form, chain, strategy, carrier)
    check = verify(result.pencil, p, mode, trials, seed)
    if check.passed is False:
        data = {"form": form, "dimension": result.dimension, "mode": check.mode}
        raise DetRepError.verification_failed(data)
    return result, check
