from __future__ import annotations

from typing import TYPE_CHECKING, Any


if TYPE_CHECKING:
    from typing import Self


INPUT_ERROR = 1
VERIFICATION_FAILED = 2
UNSUPPORTED = 3


class DetRepError(Exception):
    """Raised when a representation cannot be built, parsed or verified.

    The ``code`` doubles as the exit status of the command line front end.
    """

    def __init__(self, code: int, message: str, data: Any | None = None) -> None:
        super().__init__(message)
        self.code = code
        self.data = data

    @classmethod
    def syntax_error(cls, position: int, detail: str) -> Self:
        msg = f"Syntax error at position {position}: {detail}"
        return cls(INPUT_ERROR, msg, {"position": position, "detail": detail})

    @classmethod
    def unknown_variable(cls, name: str) -> Self:
        return cls(INPUT_ERROR, f"Unknown variable {name!r}", {"name": name})

    @classmethod
    def invalid_exponent(cls, position: int, text: str) -> Self:
        msg = f"Exponent at position {position} is not a non-negative integer: {text!r}"
        return cls(INPUT_ERROR, msg, {"position": position, "text": text})

    @classmethod
    def degenerate_input(cls, detail: str) -> Self:
        return cls(INPUT_ERROR, f"Degenerate input: {detail}", {"detail": detail})

    @classmethod
    def not_square(cls, rows: int, cols: int) -> Self:
        msg = f"Expected a square matrix, got {rows}x{cols}"
        return cls(INPUT_ERROR, msg, {"rows": rows, "cols": cols})

    @classmethod
    def dimension_mismatch(cls, expected: int, actual: int) -> Self:
        msg = f"Dimension mismatch: expected {expected}, got {actual}"
        return cls(INPUT_ERROR, msg, {"expected": expected, "actual": actual})

    @classmethod
    def not_unimodular(cls, det: int) -> Self:
        msg = f"Matrix is not unimodular (determinant {det})"
        return cls(INPUT_ERROR, msg, {"determinant": str(det)})

    @classmethod
    def wrong_form(cls, expected: str, actual: str) -> Self:
        msg = f"Expected a {expected} pencil, got {actual}"
        return cls(INPUT_ERROR, msg, {"expected": expected, "actual": actual})

    @classmethod
    def non_affine(cls, row: int, col: int) -> Self:
        msg = f"Entry ({row}, {col}) is not affine in the pencil variables"
        return cls(INPUT_ERROR, msg, {"row": row, "col": col})

    @classmethod
    def verification_failed(cls, data: dict[str, Any] | None = None) -> Self:
        return cls(VERIFICATION_FAILED, "Verification failed", data)

    @classmethod
    def internal_error(cls, error: Exception) -> Self:
        msg = f"Internal error: {error!r}"
        return cls(INPUT_ERROR, msg, {"type": type(error).__name__})

    @classmethod
    def unsupported(cls, detail: str) -> Self:
        return cls(UNSUPPORTED, f"Unsupported: {detail}", {"detail": detail})

    def to_error_obj(self) -> dict[str, Any]:
        return {"code": self.code, "message": str(self), "data": self.data}
