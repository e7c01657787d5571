"""Text, JSON and LaTeX renderings of pencils."""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal

from detrep.poly import format_polynomial, format_polynomial_latex
from detrep.schema import PencilDocument, dump_json


if TYPE_CHECKING:
    from detrep.pencil import PencilMatrix


OutputFormat = Literal["text", "json", "latex"]


def render_text(matrix: PencilMatrix) -> str:
    """One bracketed row per line, columns right-aligned."""
    cells = [[format_polynomial(entry) for entry in row] for row in matrix]
    widths = [max(len(row[c]) for row in cells) for c in range(matrix.n)]
    lines = [
        "[ " + "  ".join(text.rjust(width) for text, width in zip(row, widths)) + " ]"
        for row in cells
    ]
    return "\n".join(lines)


def render_latex(matrix: PencilMatrix) -> str:
    rows = [" & ".join(format_polynomial_latex(entry) for entry in row) for row in matrix]
    body = " \\\\\n".join(f"  {row}" for row in rows)
    return f"\\begin{{bmatrix}}\n{body}\n\\end{{bmatrix}}"


def render(matrix: PencilMatrix, output: OutputFormat = "text") -> str:
    if output == "json":
        return dump_json(PencilDocument.from_pencil(matrix))
    if output == "latex":
        return render_latex(matrix)
    return render_text(matrix)
