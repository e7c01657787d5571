"""Recursive-descent parser for the polynomial input language.

Grammar (whitespace is insignificant)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := [integer] ('*'? factor)*
    factor := (var | '[' var ']') ('^' integer)?
    var    := [A-Za-z_][A-Za-z0-9_]*

Bracketed names are coefficient parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
import re
from typing import TYPE_CHECKING

from detrep.exceptions import DetRepError
from detrep.poly import Monomial, Polynomial


if TYPE_CHECKING:
    from collections.abc import Sequence


_TOKENS = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^\[\]])"
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKENS.match(text, position)
        if match is None:
            msg = f"unexpected character {text[position]!r}"
            raise DetRepError.syntax_error(position, msg)
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, var_order: Sequence[str] | None) -> None:
        self._tokens = tokenize(text)
        self._index = 0
        self._fixed = var_order is not None
        self._variables: list[str] = list(var_order or ())
        self._params: list[str] = []
        self._terms: list[tuple[int, dict[str, int]]] = []

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _at(self, kind: str, text: str | None = None) -> bool:
        token = self._current
        return token.kind == kind and (text is None or token.text == text)

    def parse(self) -> Polynomial:
        sign = 1
        if self._at("op", "+") or self._at("op", "-"):
            sign = -1 if self._advance().text == "-" else 1
        self._term(sign)
        while self._at("op", "+") or self._at("op", "-"):
            sign = -1 if self._advance().text == "-" else 1
            self._term(sign)
        if not self._at("end"):
            token = self._current
            raise DetRepError.syntax_error(token.position, f"unexpected {token.text!r}")
        return self._build()

    def _term(self, sign: int) -> None:
        coeff = 1
        powers: dict[str, int] = {}
        seen = False
        if self._at("int"):
            coeff = int(self._advance().text)
            seen = True
        while True:
            if self._at("op", "*"):
                self._advance()
                if not (self._at("name") or self._at("op", "[")):
                    token = self._current
                    msg = f"expected a variable after '*', got {token.text or 'end'!r}"
                    raise DetRepError.syntax_error(token.position, msg)
            elif not (self._at("name") or self._at("op", "[")):
                break
            name, exponent = self._factor()
            powers[name] = powers.get(name, 0) + exponent
            seen = True
        if not seen:
            token = self._current
            msg = f"expected a term, got {token.text or 'end of input'!r}"
            raise DetRepError.syntax_error(token.position, msg)
        self._terms.append((sign * coeff, powers))

    def _factor(self) -> tuple[str, int]:
        if self._at("op", "["):
            self._advance()
            if not self._at("name"):
                token = self._current
                msg = "expected a coefficient name"
                raise DetRepError.syntax_error(token.position, msg)
            name = self._advance()
            if not self._at("op", "]"):
                raise DetRepError.syntax_error(self._current.position, "expected ']'")
            self._advance()
            self._declare_param(name)
        else:
            name = self._advance()
            self._declare_variable(name)
        exponent = 1
        if self._at("op", "^"):
            self._advance()
            token = self._current
            if token.kind != "int":
                raise DetRepError.invalid_exponent(token.position, token.text)
            exponent = int(self._advance().text)
        return name.text, exponent

    def _declare_variable(self, token: Token) -> None:
        if token.text in self._params:
            msg = f"{token.text!r} is used both as a variable and a coefficient"
            raise DetRepError.syntax_error(token.position, msg)
        if token.text in self._variables:
            return
        if self._fixed:
            raise DetRepError.unknown_variable(token.text)
        self._variables.append(token.text)

    def _declare_param(self, token: Token) -> None:
        if token.text in self._variables:
            msg = f"{token.text!r} is used both as a variable and a coefficient"
            raise DetRepError.syntax_error(token.position, msg)
        if token.text not in self._params:
            self._params.append(token.text)

    def _build(self) -> Polynomial:
        names = (*self._variables, *self._params)
        position = {name: i for i, name in enumerate(names)}
        terms: dict[Monomial, int] = {}
        for coeff, powers in self._terms:
            exps = [0] * len(names)
            for name, exponent in powers.items():
                exps[position[name]] = exponent
            monomial = Monomial(tuple(exps))
            terms[monomial] = terms.get(monomial, 0) + coeff
        return Polynomial.from_terms(names, terms, self._params)


def parse_polynomial(text: str, var_order: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial.

    Args:
        text: Expression in the input grammar.
        var_order: Variable names in index order. Without it, variables are
            indexed by first appearance. Coefficient parameters always follow
            the variables, in first-appearance order.

    Returns:
        The parsed polynomial with like terms combined.

    Raises:
        DetRepError: On a syntax error, an exponent that is not a non-negative
            integer, or a variable missing from ``var_order``.
    """
    return _Parser(text, var_order).parse()
