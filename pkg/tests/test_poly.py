from __future__ import annotations

import random

import pytest

from detrep import (
    Binding,
    DetRepError,
    EvalPoint,
    Monomial,
    Polynomial,
    evaluate,
    format_polynomial,
    format_polynomial_latex,
    parse_polynomial,
    substitute_linear,
)
from detrep.exceptions import INPUT_ERROR

from .conftest import random_polynomial


def test_parse_linear_form() -> None:
    p = parse_polynomial("2*x1 - 7*x2 + 4*x3")
    assert p.names == ("x1", "x2", "x3")
    assert dict(p.terms()) == {
        Monomial((1, 0, 0)): 2,
        Monomial((0, 1, 0)): -7,
        Monomial((0, 0, 1)): 4,
    }


def test_parse_zero() -> None:
    p = parse_polynomial("0")
    assert p.is_zero
    assert p.terms() == []


def test_parse_powers() -> None:
    p = parse_polynomial("x1^2")
    assert p.names == ("x1",)
    assert p.terms() == [(Monomial((2,)), 1)]
    p = parse_polynomial("x1^2*x2^3")
    assert p.names == ("x1", "x2")
    assert p.terms() == [(Monomial((2, 3)), 1)]
    p = parse_polynomial("x1^2*x1*x2")
    assert p.terms() == [(Monomial((3, 1)), 1)]
    p = parse_polynomial("[a]^2*x1")
    assert p.names == ("x1", "a")
    assert p.terms() == [(Monomial((1, 2)), 1)]


def test_parse_square_combines_terms() -> None:
    p = parse_polynomial("x1^2 + x1*x2 + x2^2 + x2*x1")
    assert len(p) == 3  # noqa: PLR2004
    assert p.degree == 2  # noqa: PLR2004
    assert p.coefficient(Monomial((1, 1))) == 2  # noqa: PLR2004


def test_parse_implicit_products_and_signs() -> None:
    p = parse_polynomial("-3x1 x2^2 + x1^0 - 1")
    assert p == parse_polynomial("-3*x1*x2^2")


def test_parse_respects_var_order() -> None:
    p = parse_polynomial("y + x", var_order=["x", "y"])
    assert p.names == ("x", "y")
    with pytest.raises(DetRepError) as info:
        parse_polynomial("x + z", var_order=["x", "y"])
    assert info.value.code == INPUT_ERROR


def test_parse_parameters_follow_variables() -> None:
    p = parse_polynomial("[a]*x2 + [b]*x1^2")
    assert p.names == ("x2", "x1", "a", "b")
    assert p.params == frozenset({"a", "b"})
    assert p.variable_names == ("x2", "x1")


@pytest.mark.parametrize(
    "text",
    ["x1 +", "2 ** x1", "x1^-2", "x1^y", "3 x1 )", "[a", "x1 + [x1]"],
)
def test_parse_errors(text: str) -> None:
    with pytest.raises(DetRepError) as info:
        parse_polynomial(text)
    assert info.value.code == INPUT_ERROR


def test_syntax_error_reports_position() -> None:
    with pytest.raises(DetRepError) as info:
        parse_polynomial("x1 + $")
    assert info.value.data == {"position": 5, "detail": "unexpected character '$'"}


def test_evaluate() -> None:
    square = parse_polynomial("x1^2 + 2*x1*x2 + x2^2")
    assert evaluate(square, EvalPoint((1, 1))) == 4  # noqa: PLR2004
    linear = parse_polynomial("2*x1 - 7*x2 + 4*x3")
    assert evaluate(linear, (3, 1, 1)) == 3  # noqa: PLR2004
    zero = Polynomial.zero(("x1", "x2"))
    assert evaluate(zero, (5, -9)) == 0


def test_evaluate_length_mismatch() -> None:
    with pytest.raises(DetRepError):
        evaluate(parse_polynomial("x1 + x2"), (1,))


def test_evaluate_is_a_ring_homomorphism() -> None:
    rng = random.Random(7)
    names = ("x1", "x2", "x3", "x4")
    for _ in range(25):
        p = random_polynomial(rng).embed(names)
        q = random_polynomial(rng).embed(names)
        point = EvalPoint.random(rng, len(names))
        assert evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point)
        assert evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point)


def test_substitute_carrier_binding() -> None:
    p = parse_polynomial("x4*x1", var_order=["x1", "x4", "c"])
    result = substitute_linear(p, {1: Binding(3, 0)})
    assert result == parse_polynomial("3*x1^2", var_order=["x1", "x4", "c"])


def test_substitute_parameter_binding() -> None:
    names = ("x1", "x4", "c")
    p = parse_polynomial("x4*x1", var_order=list(names))
    c = Polynomial.generator("c", ["c"], ["c"])
    result = substitute_linear(p.embed(names, ["c"]), {1: Binding(c, 0)})
    assert result == parse_polynomial("[c]*x1^2", var_order=["x1", "x4"]).embed(names)


def test_substitute_constants() -> None:
    p = parse_polynomial("x10 + x11")
    assert substitute_linear(p, {0: Binding(3), 1: Binding(4)}) == 7  # noqa: PLR2004


def test_substitute_identity() -> None:
    p = parse_polynomial("x1^2 - x2")
    assert substitute_linear(p, {}) == p
    assert substitute_linear(p, {0: Binding(1, 0)}) == p


def test_substitute_rejects_out_of_range() -> None:
    with pytest.raises(DetRepError):
        substitute_linear(parse_polynomial("x1"), {3: Binding(1)})


def test_substitution_commutes_with_evaluation() -> None:
    rng = random.Random(11)
    for _ in range(20):
        p = random_polynomial(rng)
        if p.varcount < 2:  # noqa: PLR2004
            continue
        scalar = rng.randint(-5, 5)
        result = substitute_linear(p, {0: Binding(scalar, 1)})
        point = list(EvalPoint.random(rng, p.varcount, bound=50).values)
        bound_point = [scalar * point[1], *point[1:]]
        assert evaluate(result, point) == evaluate(p, bound_point)


def test_format_round_trip() -> None:
    rng = random.Random(3)
    for _ in range(50):
        p = random_polynomial(rng)
        assert parse_polynomial(format_polynomial(p), var_order=p.names) == p


def test_format_canonical_order() -> None:
    p = parse_polynomial("2 + x2^3 - 4*x1^2*x2^3 + 3*x1^3*x2^2", var_order=["x1", "x2"])
    assert str(p) == "3*x1^3*x2^2 - 4*x1^2*x2^3 + x2^3 + 2"


def test_format_parameters() -> None:
    p = parse_polynomial("[c200]*x1^2 - [c1]")
    assert str(p) == "[c200]*x1^2 - [c1]"


def test_format_latex() -> None:
    p = parse_polynomial("x1^2 - 3*x12*x2 + 1")
    assert format_polynomial_latex(p) == "x_{1}^{2} - 3 x_{12} x_{2} + 1"


if __name__ == "__main__":
    pytest.main(["-v", __file__])
