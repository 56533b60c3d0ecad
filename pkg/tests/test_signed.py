import math

import pytest

from gelfand_bd.signed import (
    CoxType, GenClass, SignedPerm, bfs_lengths, classify_generator, classify_generator_explicit,
    elements, fpf_involutions, from_cycles, gelfand_set, generators, identity, involutions, iota_asc,
    iota_des, left_descents, length, negative_pairs, satisfies_gelfand_inequalities, to_cycles,
)


def test_parse_one_line_and_cycles():
    w = SignedPerm.parse("-3,4,-1,2")
    assert w == SignedPerm((-3, 4, -1, 2))
    assert str(w) == "-3,4,-1,2"
    assert from_cycles("(1,3)", 4) == SignedPerm((3, 2, 1, 4))
    assert SignedPerm.parse(to_cycles(w), 4) == w


def test_length_small():
    assert length(SignedPerm((-2, 1)), "B") == 2
    assert length(identity(3), "B") == 0
    assert length(SignedPerm((-2, -1)), "D") == 1
    assert length(SignedPerm((-1, -2)), "D") == 2


@pytest.mark.parametrize("t,n", [("B", 1), ("B", 2), ("B", 3), ("D", 2), ("D", 3)])
def test_length_matches_bfs(t, n):
    dist = bfs_lengths(n, t)
    els = list(elements(n, t))
    assert len(els) == (2 ** n * math.factorial(n)) // (2 if t == "D" else 1)
    assert all(dist[w] == length(w, t) for w in els)


def test_left_descents_are_length_drops():
    for w in elements(3):
        for s in generators(3, "B"):
            from gelfand_bd.signed import left_mul
            assert (s in left_descents(w, "B")) == (length(left_mul(s, w), "B") < length(w, "B"))


def test_iota_examples():
    w = from_cycles("(1,3)", 4)
    assert to_cycles(iota_asc(w)) == "(1,3)(2,5)(4,6)(7,8)"
    assert to_cycles(iota_des(w)) == "(1,3)(2,6)(4,5)(7,8)"
    assert to_cycles(iota_asc(identity(1))) == "(1,2)"


def test_gelfand_inequalities_on_example():
    z = from_cycles("(1,3)(2,5)(4,6)(7,8)", 8)
    assert satisfies_gelfand_inequalities(z, 4, "m")


@pytest.mark.parametrize("model", ["m", "n"])
def test_gelfand_set_is_characterised_by_inequalities(model):
    for n in (1, 2, 3):
        G = set(gelfand_set(n, "B", model))
        assert len(G) == len(involutions(n))
        fp = {z for z in fpf_involutions(2 * n) if satisfies_gelfand_inequalities(z, n, model)}
        assert fp == G


def test_gelfand_set_rank_one():
    assert gelfand_set(1, "B", "m") == (SignedPerm((2, 1)), SignedPerm((-2, -1)))


def test_type_d_vertices_have_even_negated_pairs():
    for n in (2, 3):
        GD = gelfand_set(n, "D", "m")
        assert set(GD) <= set(gelfand_set(n, "B", "m"))
        assert all(negative_pairs(z) % 2 == 0 for z in GD)
        assert set(GD) == {z for z in gelfand_set(n, "B", "m") if sum(1 for i in range(1, 2 * n + 1) if z(i) < -i) % 2 == 0}


@pytest.mark.parametrize("t,n", [("B", 2), ("B", 3), ("B", 4), ("D", 3), ("D", 4)])
def test_generator_classes_agree(t, n):
    for model in "mn":
        for z in gelfand_set(n, t, model):
            for s in generators(n, t):
                assert classify_generator(z, s, t) == classify_generator_explicit(z, s, t)


def test_cox_type_parse():
    assert CoxType.parse("b") is CoxType.B
    assert CoxType.parse(CoxType.D) is CoxType.D
    assert GenClass
