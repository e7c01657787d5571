"""Shared polynomials, matrices and a seeded random corpus."""

from __future__ import annotations

import random

import pytest

from detrep import IntMatrix, Monomial, PencilMatrix, Polynomial, parse_polynomial


QUINTIC = "3*x1^3*x2^2 - 4*x1^2*x2^3 + x1^2*x2^2 - 5*x1*x2^2 + 2*x1^3 + 2*x1*x2"
SQUARE = "x1^2 + 2*x1*x2 + x2^2"
FIVE_VARIABLE = (
    "3*x1^2*x2*x3 + 4*x1*x2*x3 + 5*x2^2*x4 + 6*x2*x3*x4 + 7*x3*x4 + 8*x5^4 + 2"
)

GENERAL_QUADRATIC = (
    "[c200]*x1^2 + [c110]*x1*x2 + [c101]*x1*x3 + [c020]*x2^2 + [c011]*x2*x3"
    " + [c002]*x3^2 + [c100]*x1 + [c010]*x2 + [c001]*x3 + [c000]"
)

GENERAL_QUARTIC = " + ".join(
    f"[c{i}{j}]" + "".join(
        f"*x{k}" + (f"^{e}" if e > 1 else "") for k, e in ((1, i), (2, j)) if e
    )
    for degree in range(4, -1, -1)
    for i in range(degree, -1, -1)
    for j in (degree - i,)
)

CORPUS_SIZE = 200


@pytest.fixture
def square() -> Polynomial:
    """``x1^2 + 2 x1 x2 + x2^2``, the perfect square with a 6x6 and a 5x5 NDR."""
    return parse_polynomial(SQUARE)


@pytest.fixture
def quintic() -> Polynomial:
    """The bivariate quintic whose TDR has two constant rows."""
    return parse_polynomial(QUINTIC)


@pytest.fixture
def quintic_plus_two() -> Polynomial:
    return parse_polynomial(QUINTIC + " + 2")


@pytest.fixture
def five_variable() -> Polynomial:
    return parse_polynomial(FIVE_VARIABLE)


@pytest.fixture
def general_quadratic() -> Polynomial:
    """Trivariate quadratic with one named coefficient per monomial."""
    return parse_polynomial(GENERAL_QUADRATIC)


@pytest.fixture
def general_quartic() -> Polynomial:
    """Bivariate quartic with one named coefficient per monomial."""
    return parse_polynomial(GENERAL_QUARTIC)


@pytest.fixture
def linear_form_completion() -> IntMatrix:
    """Unimodular completion of (2, -7, 4) worked out by hand."""
    return IntMatrix.from_rows([[-12, 7, -3], [-4, 2, -1], [-1, 0, 0]])


@pytest.fixture
def linear_form_rows() -> IntMatrix:
    """Rows A with det [A; (x1, x2, x3)] = 2 x1 - 7 x2 + 4 x3."""
    return IntMatrix.from_rows([[-12, -4, -1], [7, 2, 0]])


@pytest.fixture
def square_plain_ndr() -> PencilMatrix:
    names = ("x1", "x2")
    rows = [
        ["-1", "0", "0", "0", "1", "0"],
        ["-x1", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "-2", "0"],
        ["0", "0", "-x1", "1", "0", "0"],
        ["0", "0", "0", "0", "-x2", "1"],
        ["0", "x1", "0", "x2", "0", "x2"],
    ]
    return PencilMatrix.from_rows(names, rows, "NDR")


@pytest.fixture
def square_improved_ndr() -> PencilMatrix:
    names = ("x1", "x2")
    rows = [
        ["1", "0", "0", "-1", "0"],
        ["0", "0", "1", "-2", "0"],
        ["-x1", "1", "-x2", "0", "0"],
        ["0", "0", "0", "-x2", "1"],
        ["0", "x1", "0", "0", "x2"],
    ]
    return PencilMatrix.from_rows(names, rows, "NDR")


@pytest.fixture
def quintic_tdr() -> PencilMatrix:
    """Reference 8x8 triangular matrix for the quintic.

    It has the expected shape, but its determinant is off: it is 2 in absolute
    value at the origin, where the quintic vanishes.
    """
    names = ("x1", "x2")
    rows = [
        ["-x1 - 1", "1", "1", "0", "0", "0", "-x2", "0"],
        ["-5", "x1", "5", "0", "0", "-1", "0", "0"],
        ["0", "0", "x1", "-1", "0", "0", "0", "0"],
        ["0", "0", "0", "x1", "-1", "0", "0", "x2"],
        ["0", "0", "0", "0", "x1", "0", "0", "1"],
        ["2", "0", "-2", "0", "0", "x2", "0", "-1"],
        ["-2", "0", "3", "0", "0", "0", "0", "0"],
        ["-4", "0", "4", "0", "0", "0", "-1", "0"],
    ]
    return PencilMatrix.from_rows(names, rows, "TDR")


@pytest.fixture
def quintic_rdr() -> PencilMatrix:
    """Hand-built 6x6 reduced representation of the quintic."""
    names = ("x1", "x2")
    rows = [
        ["3*x1 - 4*x2 + 1", "1", "0", "0", "0", "0"],
        ["5", "x1", "0", "0", "0", "1"],
        ["-2*x1", "0", "0", "-1", "0", "0"],
        ["0", "0", "-x2", "x1", "-1", "0"],
        ["0", "0", "0", "0", "x1", "0"],
        ["-2", "0", "1", "0", "0", "-x2"],
    ]
    return PencilMatrix.from_rows(names, rows, "RDR")


@pytest.fixture
def quadratic_udr() -> PencilMatrix:
    """Hand-built 4x4 uniform representation of the general trivariate quadratic."""
    names = ("x1", "x2", "x3", "c200", "c110", "c020", "c101", "c011", "c002")
    names = (*names, "c100", "c010", "c001", "c000")
    params = names[3:]
    rows = [
        ["0", "[c200]*x1", "0", "-1"],
        ["-1", "[c110]*x1 + [c020]*x2", "0", "0"],
        ["0", "[c101]*x1 + [c011]*x2 + [c002]*x3", "1", "0"],
        ["x2", "[c100]*x1 + [c010]*x2 + [c001]*x3 + [c000]", "-x3", "x1"],
    ]
    return PencilMatrix.from_rows(names, rows, "UDR", params)


def random_polynomial(rng: random.Random) -> Polynomial:
    """1-4 variables, degree <= 4, at most 8 terms, coefficients in [-20, 20]."""
    while True:
        varcount = rng.randint(1, 4)
        names = tuple(f"x{i + 1}" for i in range(varcount))
        terms: dict[Monomial, int] = {}
        for _ in range(rng.randint(1, 8)):
            degree = rng.randint(0, 4)
            exponents = [0] * varcount
            for _ in range(degree):
                exponents[rng.randrange(varcount)] += 1
            terms[Monomial(tuple(exponents))] = rng.randint(-20, 20)
        p = Polynomial.from_terms(names, terms)
        if not p.is_zero:
            return p


@pytest.fixture(scope="session")
def corpus() -> list[Polynomial]:
    """Seeded random integer polynomials for the property checks."""
    rng = random.Random(20240917)
    return [random_polynomial(rng) for _ in range(CORPUS_SIZE)]
