"""Run configuration shared by the command line and library callers."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import ConfigDict, Field, model_validator

from detrep.base import Schema
from detrep.exceptions import DetRepError


class RunConfig(Schema):
    """Everything one invocation needs: input, pipeline stage, checks and output."""

    model_config = ConfigDict(frozen=True)

    source: Path | None = None
    """Polynomial file; ``None`` or ``-`` reads standard input."""

    form: Literal["ndr", "tdr", "rdr", "udr"] = "rdr"
    chain: Literal["plain", "improved"] = "improved"
    strategy: Literal["lookahead", "lowest"] = "lookahead"
    carrier: Literal["shared", "lowest", "factor"] = "shared"
    output: Literal["text", "json", "latex"] = "text"
    verify: Literal["auto", "symbolic", "eval", "none"] = "auto"
    trials: int = 20
    seed: int = 0
    dump_chain: bool = False
    var_order: list[str] | None = Field(default=None)
    verbose: bool = False

    @model_validator(mode="after")
    def _check_trials(self) -> RunConfig:
        if self.trials < 1 and self.verify in {"eval", "auto"}:
            msg = f"evaluation checks need at least one trial, got {self.trials}"
            raise DetRepError.unsupported(msg)
        return self

    @property
    def reads_stdin(self) -> bool:
        return self.source is None or str(self.source) == "-"
