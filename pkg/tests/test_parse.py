"""Expression grammar for polynomials over a chosen field."""

import pytest

from unipoly.errors import ConfigError
from unipoly.field import field_create
from unipoly.parse import parse_poly
from unipoly.poly import Polynomial, poly_gen

F7 = field_create(7)
F9 = field_create(3, 2)
X7 = poly_gen(F7)
X9 = poly_gen(F9)
U9 = Polynomial.from_packed(F9, (F9.gen().val,))


@pytest.mark.parametrize("text,expected", [
    ("X", X7),
    ("x", X7),
    ("5", Polynomial.from_packed(F7, (5,))),
    ("12", Polynomial.from_packed(F7, (5,))),          # reduced mod 7
    ("-X", -X7),
    ("+X", X7),
    ("X^4 - 2X + 1", X7 ** 4 - 2 * X7 + 1),
    ("X ^ 4", X7 ** 4),
    ("2*X^2", 2 * X7 * X7),
    ("2X^2", 2 * X7 * X7),                             # adjacency binds the power
    ("X(X+1)", X7 * (X7 + 1)),
    ("(X+1)(X+2)", (X7 + 1) * (X7 + 2)),
    ("X^2(X+1)", X7 * X7 * (X7 + 1)),
    ("2 3", Polynomial.from_packed(F7, (6,))),         # adjacency of literals
    ("-(X+1)^2", -((X7 + 1) ** 2)),
    ("- - X", X7),                                     # unary minus nests
    ("X - -1", X7 + 1),
    ("X^0", Polynomial.from_packed(F7, (1,))),
    ("7X", Polynomial.from_packed(F7, ())),            # 0 * X = 0
    ("X^7 + X^2", X7 ** 7 + X7 * X7),
])
def test_prime_field_expressions(text, expected):
    assert parse_poly(text, F7) == expected


@pytest.mark.parametrize("text,expected", [
    ("u", U9),
    ("u*X^2 + (u+1)", U9 * X9 * X9 + U9 + 1),
    ("uX", U9 * X9),
    ("u^2", U9 * U9),
    ("X^9 + X^2", X9 ** 9 + X9 * X9),
])
def test_extension_field_expressions(text, expected):
    assert parse_poly(text, F9) == expected


@pytest.mark.parametrize("text", [
    "",
    "   ",
    "X +",
    "X^",
    "X^X",
    "X^(2)",
    "(X+1",
    "X+1)",
    "X & 1",
    "y + 1",
    "^2",
    "*X",
    "2^-1",
])
def test_syntax_errors(text):
    with pytest.raises(ConfigError):
        parse_poly(text, F7)


def test_generator_requires_extension_field():
    with pytest.raises(ConfigError, match="extension"):
        parse_poly("u*X", F7)
    assert parse_poly("u*X", F9) == U9 * X9


def test_error_messages_carry_position():
    with pytest.raises(ConfigError, match="position 2"):
        parse_poly("X $ 1", F7)
    with pytest.raises(ConfigError, match="position 4"):
        parse_poly("X^2 ) X", F7)


def test_coefficients_reduce_mod_p():
    assert parse_poly("10X^2 + 21X + 7", F7) == 3 * X7 * X7
    assert parse_poly("100", F9) == Polynomial.from_packed(F9, (1,))


def test_whitespace_is_insignificant():
    a = parse_poly("X^4-2X+1", F7)
    b = parse_poly("  X ^ 4   -  2 X  +  1 ", F7)
    assert a == b
