from __future__ import annotations

import pytest

from detrep import (
    Chain,
    DetRepError,
    Monomial,
    Polynomial,
    Successor,
    chain_form,
    chain_form_from_entries,
    chain_of_monomial,
    improved_chain_form,
    parse_polynomial,
)


def M(*exponents: int) -> Monomial:
    return Monomial(exponents)


def test_chain_of_monomial_divides_lowest_first() -> None:
    chain = chain_of_monomial(M(3, 2))
    assert chain.monomials == (M(3, 2), M(2, 2), M(1, 2), M(0, 2), M(0, 1))
    assert chain.end_variable == 1


def test_chain_of_monomial_keeps_end_variable() -> None:
    chain = chain_of_monomial(M(3, 2), end_var=0)
    assert len(chain) == 5  # noqa: PLR2004
    assert chain.monomials[-1] == M(1, 0)
    assert chain.end_variable == 0


def test_chain_of_monomial_priority() -> None:
    chain = chain_of_monomial(M(1, 1, 1), priority=[2, 0, 1])
    assert chain.monomials == (M(1, 1, 1), M(1, 1, 0), M(0, 1, 0))


def test_chain_of_constant() -> None:
    chain = chain_of_monomial(M(0, 0))
    assert len(chain) == 1
    assert chain.end_variable is None


def test_chain_of_monomial_rejects_missing_end_variable() -> None:
    with pytest.raises(DetRepError):
        chain_of_monomial(M(2, 0), end_var=1)


@pytest.mark.parametrize(
    "monomials",
    [
        (M(2, 0), M(0, 1)),
        (M(2, 0),),
        (M(2, 0), M(1, 0), M(1, 0)),
    ],
)
def test_invalid_chains(monomials: tuple[Monomial, ...]) -> None:
    with pytest.raises(DetRepError):
        Chain(monomials)


def test_plain_chain_form_of_square(square: Polynomial) -> None:
    cf = chain_form(square)
    assert cf.kind == "plain"
    assert cf.monomials == (M(2, 0), M(1, 0), M(1, 1), M(0, 1), M(0, 2), M(0, 1))
    assert cf.coefficients == (1, 0, 2, 0, 1, 0)
    assert cf.reconstruct() == square
    assert cf.violations(square) == []


def test_plain_chain_form_priority(square: Polynomial) -> None:
    cf = chain_form(square, priority=[1, 0])
    assert cf.monomials[2:4] == (M(1, 1), M(1, 0))


def test_plain_chain_form_length(quintic_plus_two: Polynomial) -> None:
    cf = chain_form(quintic_plus_two)
    assert len(cf) == 16  # noqa: PLR2004
    assert cf.constant_positions == (15,)
    assert cf.violations(quintic_plus_two) == []


def test_improved_chain_form_of_square(square: Polynomial) -> None:
    cf = improved_chain_form(square)
    assert cf.monomials == (M(2, 0), M(1, 1), M(1, 0), M(0, 2), M(0, 1))
    assert cf.coefficients == (1, 2, 0, 1, 0)
    assert cf.successors == (
        Successor(2, 0),
        Successor(2, 1),
        None,
        Successor(4, 1),
        None,
    )


def test_improved_chain_form_of_quintic(quintic: Polynomial) -> None:
    cf = improved_chain_form(quintic)
    assert cf.monomials == (
        M(3, 2),
        M(2, 3),
        M(2, 2),
        M(1, 2),
        M(1, 1),
        M(3, 0),
        M(2, 0),
        M(1, 0),
    )
    assert cf.coefficients == (3, -4, 1, -5, 2, 2, 0, 0)
    targets = {link.position for link in cf.successors if link is not None}
    assert targets == {2, 3, 4, 6, 7}
    assert cf.violations(quintic) == []


def test_improved_chain_form_is_shorter(quintic_plus_two: Polynomial) -> None:
    cf = improved_chain_form(quintic_plus_two)
    assert len(cf) <= 11  # noqa: PLR2004
    assert cf.monomials[-1] == M(0, 0)
    assert cf.coefficients[-1] == 2  # noqa: PLR2004
    assert len(improved_chain_form(quintic_plus_two, "lowest")) == 11  # noqa: PLR2004


def test_chain_forms_over_corpus(corpus: list[Polynomial]) -> None:
    for p in corpus:
        plain = chain_form(p)
        assert plain.violations(p) == []
        lowest = improved_chain_form(p, "lowest")
        assert lowest.violations(p) == []
        assert len(lowest) <= len(plain)
        lookahead = improved_chain_form(p, "lookahead")
        assert lookahead.violations(p) == []
        assert len(lookahead) <= len(plain)
        assert len(set(lookahead.monomials)) == len(lookahead)


def test_chain_form_rejects_zero_and_parameters() -> None:
    with pytest.raises(DetRepError):
        chain_form(Polynomial.zero(("x1",)))
    with pytest.raises(DetRepError):
        improved_chain_form(parse_polynomial("[a]*x1^2 + x2"))


def test_chain_form_rejects_bad_priority(square: Polynomial) -> None:
    with pytest.raises(DetRepError):
        improved_chain_form(square, priority=[0, 0])


def test_chain_form_from_entries(square: Polynomial) -> None:
    entries = [(1, M(2, 0)), (2, M(1, 1)), (0, M(1, 0)), (1, M(0, 2)), (0, M(0, 1))]
    cf = chain_form_from_entries(square, entries)
    assert cf == improved_chain_form(square)


@pytest.mark.parametrize(
    "entries",
    [
        [(1, M(2, 0)), (2, M(1, 1)), (0, M(1, 0)), (1, M(0, 2))],
        [(1, M(2, 0)), (2, M(1, 1)), (0, M(1, 0)), (0, M(1, 0)), (1, M(0, 2))],
        [(1, M(2, 0)), (3, M(1, 1)), (0, M(1, 0)), (1, M(0, 2)), (0, M(0, 1))],
    ],
    ids=["missing-successor", "duplicate", "wrong-sum"],
)
def test_chain_form_from_entries_rejects(
    square: Polynomial, entries: list[tuple[int, Monomial]]
) -> None:
    with pytest.raises(DetRepError):
        chain_form_from_entries(square, entries)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
