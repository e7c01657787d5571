"""Exact multivariate integer polynomials.

Polynomials wrap elements of a sympy ``PolyRing`` over ``ZZ`` in graded
lexicographic order. Each polynomial knows the names of its generators; names
flagged in ``params`` are coefficient parameters rather than variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
import re
from typing import TYPE_CHECKING, Any

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from detrep.exceptions import DetRepError


if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence
    import random
    from typing import Self


EVAL_BOUND = 10**6


@cache
def polynomial_ring(names: tuple[str, ...]) -> PolyRing:
    """Integer polynomial ring over ``names`` in graded-lex order."""
    return PolyRing(names, ZZ, grlex)


@dataclass(frozen=True, slots=True)
class Monomial:
    """Dense exponent vector over a fixed list of generators."""

    exponents: tuple[int, ...]

    @classmethod
    def one(cls, size: int) -> Self:
        return cls((0,) * size)

    @classmethod
    def variable(cls, size: int, index: int) -> Self:
        exps = [0] * size
        exps[index] = 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the generators with a positive exponent."""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    @property
    def is_constant(self) -> bool:
        return not any(self.exponents)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Graded-lex key: larger keys come first in canonical order."""
        return (self.degree, self.exponents)

    def as_dict(self) -> dict[int, int]:
        """Sparse view: generator index to exponent, zeros omitted."""
        return {i: e for i, e in enumerate(self.exponents) if e}

    def contains(self, index: int) -> bool:
        return self.exponents[index] > 0

    def divide(self, index: int) -> Monomial:
        """Divide by the generator ``index``."""
        if not self.exponents[index]:
            msg = f"generator {index} does not divide the monomial"
            raise DetRepError.degenerate_input(msg)
        exps = list(self.exponents)
        exps[index] -= 1
        return Monomial(tuple(exps))

    def multiply(self, index: int) -> Monomial:
        exps = list(self.exponents)
        exps[index] += 1
        return Monomial(tuple(exps))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient_variable(self, smaller: Monomial) -> int | None:
        """Index ``v`` with ``self == x_v * smaller``, if there is one."""
        if self.degree != smaller.degree + 1 or not smaller.divides(self):
            return None
        for i, (a, b) in enumerate(zip(self.exponents, smaller.exponents)):
            if a != b:
                return i
        return None

    def format(self, names: Sequence[str]) -> str:
        if self.is_constant:
            return "1"
        return "*".join(_power(names[i], e) for i, e in enumerate(self.exponents) if e)


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


class Polynomial:
    """Immutable polynomial with integer coefficients over named generators."""

    __slots__ = ("_element", "_names", "_params")

    def __init__(
        self,
        element: PolyElement,
        names: Sequence[str],
        params: Iterable[str] = (),
    ) -> None:
        self._names = tuple(names)
        self._params = frozenset(params)
        if element.ring != polynomial_ring(self._names):
            element = polynomial_ring(self._names).from_dict(dict(element))
        self._element = element
        if unknown := self._params.difference(self._names):
            msg = f"parameters {sorted(unknown)} are not generators"
            raise DetRepError.degenerate_input(msg)

    # --- construction ------------------------------------------------------------

    @classmethod
    def zero(cls, names: Sequence[str], params: Iterable[str] = ()) -> Self:
        return cls(polynomial_ring(tuple(names)).zero, names, params)

    @classmethod
    def constant(
        cls, value: int, names: Sequence[str], params: Iterable[str] = ()
    ) -> Self:
        return cls(polynomial_ring(tuple(names)).ground_new(value), names, params)

    @classmethod
    def generator(
        cls, name: str, names: Sequence[str], params: Iterable[str] = ()
    ) -> Self:
        ring = polynomial_ring(tuple(names))
        return cls(ring.gens[tuple(names).index(name)], names, params)

    @classmethod
    def from_terms(
        cls,
        names: Sequence[str],
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]],
        params: Iterable[str] = (),
    ) -> Self:
        ring = polynomial_ring(tuple(names))
        pairs = terms.items() if isinstance(terms, dict) else terms
        element = ring.zero
        for monomial, coeff in pairs:
            if len(monomial.exponents) != ring.ngens:
                raise DetRepError.dimension_mismatch(ring.ngens, len(monomial.exponents))
            if coeff:
                element += ring.term_new(monomial.exponents, coeff)
        return cls(element, names, params)

    # --- views ---------------------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        return self._element

    @property
    def ring(self) -> PolyRing:
        return self._element.ring

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def params(self) -> frozenset[str]:
        return self._params

    @property
    def varcount(self) -> int:
        return len(self._names)

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(n for n in self._names if n not in self._params)

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(n for n in self._names if n in self._params)

    @property
    def variable_indices(self) -> tuple[int, ...]:
        return tuple(i for i, n in enumerate(self._names) if n not in self._params)

    @property
    def is_zero(self) -> bool:
        return not self._element

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._element)

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(exps) for exps in self._element), default=0)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: descending degree, then descending lex."""
        items = [(Monomial(tuple(exps)), int(c)) for exps, c in self._element.items()]
        return sorted(items, key=lambda item: item[0].sort_key, reverse=True)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, monomial: Monomial) -> int:
        return int(self._element.get(monomial.exponents, 0))

    def __len__(self) -> int:
        return len(self._element)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __int__(self) -> int:
        if not self.is_constant:
            msg = f"{self} is not a constant"
            raise DetRepError.degenerate_input(msg)
        return int(self._element.get(self.ring.zero_monom, 0))

    # --- re-embedding --------------------------------------------------------------

    def embed(
        self, names: Sequence[str], params: Iterable[str] | None = None
    ) -> Polynomial:
        """Re-express over ``names``, which must contain every used generator."""
        names = tuple(names)
        params = self._params if params is None else frozenset(params)
        if names == self._names:
            return Polynomial(self._element, names, params & set(names))
        position = {name: i for i, name in enumerate(names)}
        terms: dict[Monomial, int] = {}
        for monomial, coeff in self.terms():
            exps = [0] * len(names)
            for i, e in monomial.as_dict().items():
                name = self._names[i]
                if name not in position:
                    raise DetRepError.unknown_variable(name)
                exps[position[name]] = e
            terms[Monomial(tuple(exps))] = coeff
        return Polynomial.from_terms(names, terms, params & set(names))

    def restrict(self, names: Sequence[str]) -> Polynomial:
        """Drop generators; the dropped ones must not occur in any term."""
        return self.embed(names)

    def used_names(self) -> tuple[str, ...]:
        used = {i for m, _ in self.terms() for i in m.support}
        return tuple(n for i, n in enumerate(self._names) if i in used)

    def variable_terms(self) -> list[tuple[Monomial, Polynomial]]:
        """Group terms by their variable part.

        Returns:
            ``(monomial over the variables, coefficient over the parameters)``
            pairs in canonical order of the variable monomials.
        """
        variables = self.variable_indices
        parameters = [i for i in range(self.varcount) if i not in variables]
        param_names = tuple(self._names[i] for i in parameters)
        groups: dict[Monomial, dict[Monomial, int]] = {}
        for monomial, coeff in self.terms():
            key = Monomial(tuple(monomial.exponents[i] for i in variables))
            inner = Monomial(tuple(monomial.exponents[i] for i in parameters))
            groups.setdefault(key, {})[inner] = coeff
        ordered = sorted(groups, key=lambda m: m.sort_key, reverse=True)
        return [
            (key, Polynomial.from_terms(param_names, groups[key], param_names))
            for key in ordered
        ]

    # --- arithmetic ----------------------------------------------------------------

    def _coerce(self, other: Any) -> PolyElement | None:
        if isinstance(other, Polynomial):
            if other._names != self._names:
                raise DetRepError.dimension_mismatch(len(self._names), len(other._names))
            return other._element
        if isinstance(other, int):
            return self.ring.ground_new(other)
        return None

    def _wrap(self, element: PolyElement, other: Any = None) -> Polynomial:
        params = self._params
        if isinstance(other, Polynomial):
            params = params | other._params
        return Polynomial(element, self._names, params)

    def __add__(self, other: Any) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._wrap(self._element + rhs, other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._wrap(self._element - rhs, other)

    def __rsub__(self, other: Any) -> Polynomial:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return self._wrap(lhs - self._element, other)

    def __mul__(self, other: Any) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._wrap(self._element * rhs, other)

    __rmul__ = __mul__

    def __neg__(self) -> Polynomial:
        return self._wrap(-self._element)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent == 0:
            return self._wrap(self.ring.one)
        return self._wrap(self._element**exponent)

    def exquo(self, other: Polynomial) -> Polynomial:
        """Exact division; raises if ``other`` does not divide ``self``."""
        rhs = self._coerce(other)
        return self._wrap(self._element.exquo(rhs), other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._names == other._names and dict.__eq__(
                self._element, other._element
            )
        if isinstance(other, int):
            return self._element == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._names, frozenset(self._element.items())))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, names={self._names!r})"


@dataclass(frozen=True, slots=True)
class EvalPoint:
    """One integer value per generator."""

    values: tuple[int, ...]

    @classmethod
    def random(cls, rng: random.Random, size: int, bound: int = EVAL_BOUND) -> Self:
        return cls(tuple(rng.randint(-bound, bound) for _ in range(size)))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, slots=True)
class Binding:
    """Replacement ``scalar * x_var``, or the constant ``scalar`` when var is None."""

    scalar: int | Polynomial
    var: int | None = None


def evaluate(p: Polynomial, pt: EvalPoint | Sequence[int]) -> int:
    """Exact value of ``p`` at ``pt``."""
    values = pt.values if isinstance(pt, EvalPoint) else tuple(pt)
    if len(values) != p.varcount:
        raise DetRepError.dimension_mismatch(p.varcount, len(values))
    total = 0
    for exps, coeff in p.element.items():
        term = int(coeff)
        for value, e in zip(values, exps):
            if e:
                term *= value**e
        total += term
    return total


def substitute_linear(p: Polynomial, bindings: Mapping[int, Binding]) -> Polynomial:
    """Replace bound generators simultaneously and recombine like terms.

    Args:
        p: Polynomial to rewrite.
        bindings: Generator index to replacement. Polynomial scalars are
            re-embedded over ``p.names``.

    Returns:
        The substituted polynomial over the same names.
    """
    ring = p.ring
    replacements = []
    for index, binding in sorted(bindings.items()):
        if not 0 <= index < p.varcount:
            raise DetRepError.dimension_mismatch(p.varcount, index + 1)
        if isinstance(binding.scalar, Polynomial):
            scalar = binding.scalar.embed(p.names, p.params).element
        else:
            scalar = ring.ground_new(binding.scalar)
        if binding.var is not None:
            if not 0 <= binding.var < p.varcount:
                raise DetRepError.dimension_mismatch(p.varcount, binding.var + 1)
            scalar *= ring.gens[binding.var]
        replacements.append((ring.gens[index], scalar))
    if not replacements:
        return p
    return Polynomial(p.element.compose(replacements), p.names, p.params)


# --- formatting -----------------------------------------------------------------

_TRAILING_DIGITS = re.compile(r"^(.*?)(\d+)$")


def _term_text(
    monomial: Monomial, coeff: int, names: Sequence[str], params: frozenset[str]
) -> str:
    factors = [
        f"[{name}]" if e == 1 else f"[{name}]^{e}"
        for name, e in zip(names, monomial.exponents)
        if e and name in params
    ]
    factors += [
        _power(name, e)
        for name, e in zip(names, monomial.exponents)
        if e and name not in params
    ]
    magnitude = abs(coeff)
    if not factors:
        return str(magnitude)
    body = "*".join(factors)
    return body if magnitude == 1 else f"{magnitude}*{body}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text in the input grammar, terms in canonical order."""
    terms = p.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for k, (monomial, coeff) in enumerate(terms):
        text = _term_text(monomial, coeff, p.names, p.params)
        if k == 0:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {text}")
    return " ".join(parts)


def latex_name(name: str) -> str:
    """``x12`` renders as ``x_{12}``; underscores are escaped."""
    if match := _TRAILING_DIGITS.match(name):
        base, digits = match.groups()
        if base:
            base = base.rstrip("_").replace("_", r"\_")
            return f"{base}_{{{digits}}}"
    return name.replace("_", r"\_")


def format_polynomial_latex(p: Polynomial) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for k, (monomial, coeff) in enumerate(terms):
        factors = [
            latex_name(name) if e == 1 else f"{latex_name(name)}^{{{e}}}"
            for name, e in zip(p.names, monomial.exponents)
            if e
        ]
        magnitude = abs(coeff)
        if not factors:
            text = str(magnitude)
        elif magnitude == 1:
            text = " ".join(factors)
        else:
            text = f"{magnitude} " + " ".join(factors)
        if k == 0:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {text}")
    return " ".join(parts)
