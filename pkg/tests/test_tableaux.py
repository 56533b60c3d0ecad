from collections import Counter

import pytest

from gelfand_bd.tableaux import (
    Bitableau, DominoTableau, Partition, StandardTableau, domino_descents, lies_below, staircase,
    standard_domino_tableaux, two_core,
)


def test_two_core():
    assert two_core(Partition((2, 2))) == Partition(())
    assert two_core(Partition((2, 1))) == Partition((2, 1))
    assert two_core(Partition((4, 2, 1))) == staircase(1) or two_core(Partition((4, 2, 1))).is_staircase()


def test_row_reading_word():
    assert StandardTableau([[1, 2, 5], [3, 4]]).row_reading_word() == (3, 4, 1, 2, 5)


def test_vertical_domino_is_descent():
    assert domino_descents(DominoTableau.from_rows([[1], [1]])) == frozenset({0})
    assert domino_descents(DominoTableau.from_rows([[1, 1]])) == frozenset()


def test_lies_below_is_strict():
    upper = ((1, 1), (1, 2))
    assert lies_below(upper, ((2, 1), (2, 2)))
    assert not lies_below(upper, ((1, 3), (1, 4)))


@pytest.mark.parametrize("r", [0, 1, 2])
def test_domino_tableaux_count(r):
    # sum of squares of shape counts is the group order 2^n n!
    for n, order in ((1, 2), (2, 8), (3, 48), (4, 384)):
        c = Counter(T.shape for T in standard_domino_tableaux(n, r))
        assert sum(v * v for v in c.values()) == order


def test_domino_json_round_trip():
    T = DominoTableau.from_rows([[0, 0, 1, 1], [0, 2, 2], [3], [3]], 2)
    assert DominoTableau.from_json(T.to_json()) == T
    assert T.to_rows() == [[0, 0, 1, 1], [0, 2, 2], [3], [3]]


def test_bitableau_json_round_trip():
    B = Bitableau(StandardTableau([[1, 3]]), StandardTableau([[2], [4]]))
    assert Bitableau.from_json(B.to_json()) == B
    assert StandardTableau.from_json(B.plus.to_json()) == B.plus


def test_invalid_domino_tableau_rejected():
    with pytest.raises(ValueError):
        DominoTableau.from_rows([[1, 2], [2, 1]])
