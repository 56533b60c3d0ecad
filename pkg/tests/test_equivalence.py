import pytest

from gelfand_bd.equivalence import (
    MoveLabel, adm_prime_relation, admissible_closure, admissible_moves, d4_length, d5_length,
    dual_equiv, dual_equiv_bi, dual_knuth_move, knuth_move, plactic_candidates, plactic_closure,
    plactic_moves, predict_recording, substitute_t00, vogan_tableau,
)
from gelfand_bd.insertion import P_B, P_Bprime, P_D, Q_D
from gelfand_bd.signed import SignedPerm, elements, involutions
from gelfand_bd.tableaux import DominoTableau, StandardTableau

# r = 2, k = 2 recording tableaux before and after a D4 / D5 move (0 marks the core)
D4_W = [[0, 0, 1, 1, 5, 5, 11, 11], [0, 2, 2, 6, 6, 12, 12], [3, 3, 7, 7, 13, 13], [4, 8, 8, 14, 14],
        [4, 10, 15], [9, 10, 15], [9]]
D4_V = [[0, 0, 1, 1, 5, 5, 11, 11], [0, 2, 2, 6, 6, 12, 12], [3, 3, 7, 7, 13, 13], [4, 8, 8, 14, 14],
        [4, 9, 9], [10, 15, 15], [10]]
D5_W = [[0, 0, 1, 1, 5, 5, 11, 11], [0, 2, 2, 6, 6, 12, 12], [3, 3, 7, 7, 13, 13], [4, 8, 8, 14, 14],
        [4, 10, 15, 15], [9, 10, 18, 18], [9, 17], [16, 17], [16]]
D5_V = [[0, 0, 1, 1, 5, 5, 12, 12], [0, 2, 2, 6, 6, 13, 13], [3, 3, 7, 7, 14, 14], [4, 8, 8, 15, 15],
        [4, 10, 11, 18], [9, 10, 11, 18], [9, 17], [16, 17], [16]]

D4_WORD = (3, 2, 1, -11, 12, 6, 5, 4, -15, -14, 13, 10, 9, 8, 7)
D4_MOVED = (3, 2, 1, -11, 15, 12, 6, 5, 4, -14, 13, 10, 9, 8, 7)
D5_WORD = (3, 2, 1, -11, 12, 6, 5, 4, -16, -14, 17, 13, 9, 8, 7, -18, -15, -10)
D5_MOVED = (3, 2, 1, -11, 12, 6, 5, 4, -17, -16, -14, 13, 9, 8, 7, -18, -15, -10)


def test_knuth_examples():
    assert list(knuth_move([5, 6, 4, 3, 1, 2], 2)) == [5, 4, 6, 3, 1, 2]
    assert list(knuth_move([5, 4, 6, 3, 1, 2], 3)) == [5, 4, 3, 6, 1, 2]
    assert list(dual_knuth_move([4, 3, 2, 6, 1, 5], 4)) == [5, 3, 2, 6, 1, 4]
    assert list(dual_knuth_move([5, 3, 2, 6, 1, 4], 3)) == [5, 4, 2, 6, 1, 3]


def test_dual_equivalence_examples():
    T = StandardTableau([[1, 2, 5], [3, 4]])
    assert dual_equiv(T, 2) == dual_equiv(T, 3) == StandardTableau([[1, 3, 5], [2, 4]])
    assert dual_equiv(StandardTableau([[1, 3, 5], [2, 4]]), 4) == StandardTableau([[1, 3, 4], [2, 5]])


def test_vogan_tableau_example():
    T1 = DominoTableau.from_rows([[1, 2, 5], [1, 2, 5], [3, 3, 7], [4, 6, 7], [4, 6]])
    T2 = DominoTableau.from_rows([[1, 2, 6], [1, 2, 6], [3, 3, 7], [4, 5, 7], [4, 5]])
    T3 = DominoTableau.from_rows([[1, 2, 6], [1, 2, 6], [3, 4, 7], [3, 4, 7], [5, 5]])
    T4 = DominoTableau.from_rows([[1, 2, 5], [1, 2, 5], [3, 4, 7], [3, 4, 7], [6, 6]])
    assert vogan_tableau(T1, 5, 6) == T2
    assert vogan_tableau(T2, 3, 4) == T3
    assert vogan_tableau(T3, 4, 5) == T4
    assert vogan_tableau(T3, 6, 5) == T4


def test_d3_neighbour_at_core_zero():
    moves = plactic_moves(SignedPerm((2, 1)), 0)
    assert (MoveLabel("D3"), SignedPerm((-2, 1))) in moves
    assert P_D((2, 1), 0) == P_D((-2, 1), 0)


@pytest.mark.parametrize("r", [0, 1])
def test_plactic_closures_are_fibres(r):
    fibres = {}
    for w in elements(3):
        fibres.setdefault(P_D(w, r), set()).add(w)
    for fibre in fibres.values():
        assert plactic_closure(min(fibre), r) == fibre


def test_candidates_preserve_insertion_tableau():
    for r in (0, 1, 2):
        for w in elements(3):
            P = P_D(w, r)
            for label, v in plactic_candidates(w, r):
                assert P_D(v, r) == P, (label, w, v)


def test_long_relation_lengths():
    assert d4_length(0, 1) == 4 and d5_length(0, 1) == 6
    assert d4_length(2, 2) == len(D4_WORD) and d5_length(2, 2) == len(D5_WORD)


@pytest.mark.parametrize("family,w,v,W,V", [
    ("D4", D4_WORD, D4_MOVED, D4_W, D4_V),
    ("D5", D5_WORD, D5_MOVED, D5_W, D5_V),
])
def test_long_relation_recording_displays(family, w, v, W, V):
    moves = [(label, u) for label, u in plactic_moves(w, 2) if label.family == family and label.index[0] == 2]
    assert any(u == SignedPerm(v) for _, u in moves)
    label = next(label for label, u in moves if u == SignedPerm(v))
    assert P_D(w, 2) == P_D(v, 2)
    assert Q_D(w, 2) == DominoTableau.from_rows(W, 2)
    assert Q_D(v, 2) == DominoTableau.from_rows(V, 2)
    assert predict_recording(w, label, 2) == Q_D(v, 2)


def test_t00_substitution_is_an_involution():
    T = Q_D((2, 1), 0)
    S = substitute_t00(T)
    assert S == DominoTableau.from_rows([[1, 2], [1, 2]])
    assert substitute_t00(S) == T
    assert substitute_t00(Q_D((1, 2), 0)) is None


def test_admissible_moves_keep_bitableau():
    for w in elements(3):
        for _, v in admissible_moves(w):
            assert P_B(v) == P_B(w)
    assert admissible_closure(SignedPerm((2, -1, 3))) == {
        SignedPerm((-1, 2, 3)), SignedPerm((2, -1, 3)), SignedPerm((2, 3, -1))}


def test_adm_prime_relation():
    for y in involutions(4):
        for i in (2, 3):
            assert P_Bprime(adm_prime_relation(y, i)) == dual_equiv_bi(P_Bprime(y), i)
