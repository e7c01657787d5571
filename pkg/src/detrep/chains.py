"""Chains of monomials and chain-forms of polynomials."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import TYPE_CHECKING, Literal

from detrep.exceptions import DetRepError
from detrep.poly import Monomial, Polynomial


if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence


logger = logging.getLogger(__name__)

ChainKind = Literal["plain", "improved"]
Strategy = Literal["lookahead", "lowest"]


@dataclass(frozen=True, slots=True)
class Chain:
    """Monomials descending one variable at a time down to degree one."""

    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not self.monomials:
            msg = "a chain needs at least one monomial"
            raise DetRepError.degenerate_input(msg)
        for upper, lower in zip(self.monomials, self.monomials[1:]):
            if upper.quotient_variable(lower) is None:
                msg = f"{lower.exponents} is not one division below {upper.exponents}"
                raise DetRepError.degenerate_input(msg)
        last = self.monomials[-1]
        if last.degree != 1 and not (len(self.monomials) == 1 and last.is_constant):
            msg = "a chain must end on a single variable"
            raise DetRepError.degenerate_input(msg)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    @property
    def end_variable(self) -> int | None:
        last = self.monomials[-1]
        return None if last.is_constant else last.support[0]


@dataclass(frozen=True, slots=True)
class Successor:
    """Later position ``position`` holding this monomial divided by ``var``."""

    position: int
    var: int


@dataclass(frozen=True, slots=True)
class ChainEntry:
    coefficient: int
    monomial: Monomial
    successor: Successor | None = None


@dataclass(frozen=True, slots=True)
class ChainForm:
    """Ordered coefficient/monomial pairs covering a polynomial."""

    names: tuple[str, ...]
    entries: tuple[ChainEntry, ...]
    kind: ChainKind = "improved"

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ChainEntry]:
        return iter(self.entries)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(e.coefficient for e in self.entries)

    @property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(e.monomial for e in self.entries)

    @property
    def successors(self) -> tuple[Successor | None, ...]:
        return tuple(e.successor for e in self.entries)

    @property
    def constant_positions(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.entries) if e.monomial.is_constant)

    def reconstruct(self) -> Polynomial:
        """Sum of coefficient times monomial over all entries."""
        totals: dict[Monomial, int] = {}
        for entry in self.entries:
            totals[entry.monomial] = totals.get(entry.monomial, 0) + entry.coefficient
        return Polynomial.from_terms(self.names, totals)

    def violations(self, source: Polynomial | None = None) -> list[str]:
        """Broken invariants, empty when the chain-form is valid."""
        problems: list[str] = []
        if source is not None and self.reconstruct() != source:
            problems.append("entries do not sum to the source polynomial")
        if self.kind == "improved" and len(set(self.monomials)) != len(self.entries):
            problems.append("a monomial appears twice")
        for i, entry in enumerate(self.entries):
            link = entry.successor
            if link is None:
                if entry.monomial.degree >= 2:  # noqa: PLR2004
                    problems.append(f"entry {i} has degree >= 2 but no successor")
                continue
            if link.position <= i or link.position >= len(self.entries):
                problems.append(f"entry {i} links to position {link.position}")
                continue
            target = self.entries[link.position].monomial
            if entry.monomial.quotient_variable(target) != link.var:
                problems.append(
                    f"entry {i} is not x{link.var} times entry {link.position}"
                )
        return problems


def _priority(varcount: int, priority: Sequence[int] | None) -> tuple[int, ...]:
    if priority is None:
        return tuple(range(varcount))
    order = tuple(priority)
    if sorted(order) != list(range(varcount)):
        msg = f"priority {order} is not a permutation of {varcount} variables"
        raise DetRepError.degenerate_input(msg)
    return order


def _check_integral(p: Polynomial) -> None:
    if p.is_zero:
        msg = "the zero polynomial has no chain-form"
        raise DetRepError.degenerate_input(msg)
    if p.params:
        msg = "chain-forms need integer coefficients; lift the coefficients first"
        raise DetRepError.unsupported(msg)


def chain_of_monomial(
    m: Monomial,
    end_var: int | None = None,
    priority: Sequence[int] | None = None,
) -> Chain:
    """Divide ``m`` down to a single variable.

    Each step divides by the first variable in ``priority`` (default: lowest
    index) that keeps ``end_var`` available for the last position.
    """
    order = _priority(len(m.exponents), priority)
    if m.is_constant:
        return Chain((m,))
    if end_var is not None and not m.contains(end_var):
        msg = f"variable {end_var} does not occur in the monomial"
        raise DetRepError.degenerate_input(msg)
    monomials = [m]
    current = m
    while current.degree > 1:
        var = next(
            v
            for v in order
            if current.contains(v) and (v != end_var or current.exponents[v] > 1)
        )
        current = current.divide(var)
        monomials.append(current)
    return Chain(tuple(monomials))


def _link(position: int, upper: Monomial, lower: Monomial) -> Successor:
    var = upper.quotient_variable(lower)
    assert var is not None
    return Successor(position, var)


def chain_form(p: Polynomial, priority: Sequence[int] | None = None) -> ChainForm:
    """Plain chain-form: one full chain per not yet covered term.

    Terms are visited in canonical order. Every chain contributes all its
    monomials; a monomial carries its coefficient the first time it is met and
    0 afterwards.
    """
    _check_integral(p)
    coefficients = dict(p.terms())
    pending = set(coefficients)
    entries: list[ChainEntry] = []
    for head in coefficients:
        if head not in pending:
            continue
        chain = chain_of_monomial(head, priority=priority)
        start = len(entries)
        for k, monomial in enumerate(chain):
            coeff = coefficients[monomial] if monomial in pending else 0
            pending.discard(monomial)
            link = None
            if k + 1 < len(chain):
                link = _link(start + k + 1, monomial, chain.monomials[k + 1])
            entries.append(ChainEntry(coeff, monomial, link))
    logger.debug("Plain chain-form with %d entries for %d terms", len(entries), len(p))
    return ChainForm(p.names, tuple(entries), "plain")


class _ImprovedBuilder:
    """Merge-greedy construction of an improved chain-form."""

    def __init__(self, p: Polynomial, strategy: Strategy, order: tuple[int, ...]) -> None:
        self.coefficients = dict(p.terms())
        self.strategy = strategy
        self.order = order
        self.pending = {m for m in self.coefficients if not m.is_constant}
        self.chains: list[list[Monomial]] = []
        self.located: dict[Monomial, int] = {}
        self.successor: dict[Monomial, Monomial] = {}

    def _steps(self, current: Monomial) -> list[Monomial]:
        return [current.divide(v) for v in self.order if current.contains(v)]

    def _choose(self, current: Monomial) -> Monomial:
        steps = self._steps(current)
        if self.strategy == "lowest":
            return steps[0]
        best = steps[0]
        best_key = (-1, -1)
        for step in steps:
            hits = sum(1 for term in self.pending if step.divides(term))
            key = (int(step in self.pending), hits)
            if key > best_key:
                best, best_key = step, key
        return best

    def add(self, head: Monomial) -> None:
        self.pending.discard(head)
        sequence = [head]
        current = head
        while current.degree > 1:
            target = next((s for s in self._steps(current) if s in self.located), None)
            if target is not None:
                self.successor[current] = target
                self._splice(sequence, target)
                return
            step = self._choose(current)
            self.successor[current] = step
            self.pending.discard(step)
            sequence.append(step)
            current = step
        self._place(sequence, len(self.chains))
        self.chains.append(sequence)

    def _splice(self, sequence: list[Monomial], target: Monomial) -> None:
        index = self.located[target]
        chain = self.chains[index]
        k = chain.index(target)
        self.chains[index] = [*chain[:k], *sequence, *chain[k:]]
        self._place(sequence, index)

    def _place(self, sequence: list[Monomial], index: int) -> None:
        for monomial in sequence:
            self.located[monomial] = index

    def build(self, names: tuple[str, ...]) -> ChainForm:
        for head in self.coefficients:
            if not head.is_constant and head not in self.located:
                self.add(head)
        flat = [m for chain in self.chains for m in chain]
        flat += [m for m in self.coefficients if m.is_constant]
        position = {m: i for i, m in enumerate(flat)}
        entries = []
        for monomial in flat:
            link = None
            if monomial in self.successor:
                lower = self.successor[monomial]
                link = _link(position[lower], monomial, lower)
            entries.append(ChainEntry(self.coefficients.get(monomial, 0), monomial, link))
        return ChainForm(names, tuple(entries), "improved")


def improved_chain_form(
    p: Polynomial,
    strategy: Strategy = "lookahead",
    priority: Sequence[int] | None = None,
) -> ChainForm:
    """Chain-form whose chains merge at shared monomials.

    Terms are visited in canonical order; a term already placed in some chain
    is skipped. While descending, a step that lands on a monomial of an
    existing chain ends the descent and splices the new monomials into that
    chain just before the shared one.

    Args:
        p: Non-zero integer polynomial.
        strategy: Descent rule when no merge is possible. ``"lowest"`` divides
            by the first variable in ``priority``; ``"lookahead"`` prefers
            landing on a pending term, then on the monomial dividing the most
            pending terms, then ``priority``.
        priority: Variable indices in preference order (default ascending).
    """
    _check_integral(p)
    order = _priority(p.varcount, priority)
    form = _ImprovedBuilder(p, strategy, order).build(p.names)
    logger.debug("Improved chain-form (%s) with %d entries", strategy, len(form))
    return form


def chain_form_from_entries(
    p: Polynomial, entries: Sequence[tuple[int, Monomial]]
) -> ChainForm:
    """Validate a hand-written chain-form and link its successors.

    Every entry of degree two or more is linked to the nearest later entry
    obtained by dividing it by one variable.

    Raises:
        DetRepError: On duplicates, missing successors, or entries that do not
            sum to ``p``.
    """
    monomials = [m for _, m in entries]
    if len(set(monomials)) != len(monomials):
        msg = "a monomial appears twice"
        raise DetRepError.degenerate_input(msg)
    linked: list[ChainEntry] = []
    for i, (coeff, monomial) in enumerate(entries):
        link = None
        if monomial.degree >= 2:  # noqa: PLR2004
            j = next(
                (j for j in range(i + 1, len(monomials))
                 if monomial.quotient_variable(monomials[j]) is not None),
                None,
            )
            if j is None:
                msg = f"entry {i} has no later successor"
                raise DetRepError.degenerate_input(msg)
            link = _link(j, monomial, monomials[j])
        linked.append(ChainEntry(coeff, monomial, link))
    form = ChainForm(p.names, tuple(linked), "improved")
    if problems := form.violations(p):
        raise DetRepError.degenerate_input("; ".join(problems))
    return form
