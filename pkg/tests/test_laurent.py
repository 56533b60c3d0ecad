import pytest

from gelfand_bd.laurent import ONE, X, X_INV, ZERO, LaurentPoly


def test_arithmetic():
    assert X * X_INV == ONE
    assert (X + X_INV) ** 2 == X ** 2 + 2 + X_INV ** 2
    assert X - X == ZERO and not ZERO
    assert (X + 3).bar() == X_INV + 3


def test_string_format_descending():
    f = LaurentPoly.parse("x^-2 + 3 - x")
    assert f == X_INV ** 2 + 3 - X
    assert str(f) == "x^-2 + 3 - x"
    assert str(ZERO) == "0"


@pytest.mark.parametrize("text", ["0", "1", "-x", "x^2 - 2*x^-1", "3*x^-4 + x^-1"])
def test_parse_round_trip(text):
    f = LaurentPoly.parse(text)
    assert LaurentPoly.parse(str(f)) == f


def test_negative_part_and_degrees():
    f = X + 2 + 5 * X_INV
    assert f.negative_part() == 5 * X_INV
    assert f.degrees() == (-1, 1)
    assert f[-1] == 5 and f[3] == 0
