import json

import pytest

from gelfand_bd.hecke import (
    CanonicalBasis, GelfandModule, bar_failures, braid_failures, canonical_basis, inverse_failures,
    quadratic_failures, solve_canonical_basis,
)
from gelfand_bd.laurent import ONE, LaurentPoly
from gelfand_bd.signed import gelfand_set

CASES = [("B", 1), ("B", 2), ("B", 3), ("D", 2), ("D", 3)]


@pytest.mark.parametrize("t,n", CASES)
@pytest.mark.parametrize("model", ["m", "n"])
def test_module_axioms(t, n, model):
    module = GelfandModule(n, t, model)
    assert module.vertices == gelfand_set(n, t, model)
    assert quadratic_failures(module) == []
    assert braid_failures(module) == []
    assert inverse_failures(module) == []


@pytest.mark.parametrize("t,n", [("B", 2), ("B", 3), ("D", 3)])
@pytest.mark.parametrize("model", ["m", "n"])
def test_canonical_basis(t, n, model):
    cb = canonical_basis(n, t, model)
    assert bar_failures(cb) == []
    oracle = solve_canonical_basis(GelfandModule(n, t, model))
    other = canonical_basis(n, t, model, choose=max)
    for z in cb.module.vertices:
        col = cb.columns[z]
        assert col.coefficient(z) == ONE
        for y, c in col.terms.items():
            if y != z:
                assert c.degrees()[1] < 0
                assert cb.module.order_key(y) < cb.module.order_key(z)
        assert col.terms == oracle.columns[z].terms == other.columns[z].terms


def test_canonical_basis_json_round_trip():
    cb = canonical_basis(3, "B", "m")
    text = json.dumps(cb.to_json(), sort_keys=True)
    back = CanonicalBasis.from_json(json.loads(text))
    assert json.dumps(back.to_json(), sort_keys=True) == text
    for col in cb.to_json()["columns"].values():
        for c in col.values():
            assert str(LaurentPoly.parse(c)) == c


def test_mu_is_integer_and_omega_symmetric():
    cb = canonical_basis(2, "B", "m")
    verts = cb.module.vertices
    for y in verts:
        for z in verts:
            assert isinstance(cb.mu(y, z), int)
            assert cb.omega(y, z) == cb.omega(z, y)
