import json

import pytest

from gelfand_bd.signed import SignedPerm
from gelfand_bd.wgraph import (
    WGraph, bidirected_edges, build_graph, cells, edges, molecules, to_dot,
    verify_edge_tableau_theorems, z_classify,
)

# (vertices, bidirected edges, molecules, cells) of Gamma^row, frozen from exhaustive runs
COUNTS = {("B", 2): (6, 2, 4, 4), ("B", 3): (20, 12, 8, 8), ("B", 4): (76, 66, 15, 15),
          ("D", 2): (3, 0, 3, 3), ("D", 3): (10, 5, 5, 5)}


@pytest.mark.parametrize("key", sorted(COUNTS))
@pytest.mark.parametrize("model", ["row", "col"])
def test_graph_counts(key, model):
    t, n = key
    g = build_graph(n, t, model)
    got = (len(g.vertices), len(bidirected_edges(g)), len(molecules(g)), len(cells(g)))
    assert got == COUNTS[key]


def test_edges_respect_tau():
    g = build_graph(3, "B")
    for v, w in edges(g):
        assert g.weight(v, w) != 0
        assert not g.tau[v] <= g.tau[w]


def test_cells_refine_nothing_finer_than_molecules():
    # every molecule lies inside one cell
    g = build_graph(3, "B")
    where = {v: k for k, c in enumerate(cells(g)) for v in c}
    for mol in molecules(g):
        assert len({where[v] for v in mol}) == 1


@pytest.mark.parametrize("t,n", [("B", 2), ("B", 3), ("D", 3)])
def test_bidirected_edges_are_z_relations(t, n):
    g = build_graph(n, t)
    verts = g.vertices
    classified = {frozenset((y, z)) for k, y in enumerate(verts) for z in verts[k + 1:]
                  if z_classify(y, z, t) is not None}
    assert classified == bidirected_edges(g)


def test_literal_z_minus_one_second_reading_adds_a_pair():
    # comparing y(3) > y(2) without absolute values admits one non-edge in D3
    y = SignedPerm.parse("-3,-4,-1,-2,6,5")
    z = SignedPerm.parse("-2,-1,-4,-3,6,5")
    assert z_classify(y, z, "D", literal=True) == z_classify(z, y, "D", literal=True)
    assert z_classify(y, z, "D", literal=True).kind == "Z-1''"
    assert z_classify(y, z, "D") is None
    assert frozenset((y, z)) not in bidirected_edges(build_graph(3, "D"))


def test_json_round_trip_is_exact():
    g = build_graph(3, "B", "col")
    text = g.dumps()
    assert WGraph.from_json(json.loads(text)).dumps() == text


def test_dot_export():
    g = build_graph(2, "B")
    dot = to_dot(g)
    assert dot.startswith('digraph "Gamma_B2_row" {')
    assert dot.count("dir=none") == len(bidirected_edges(g))
    assert dot == to_dot(build_graph(2, "B"))


def test_edge_tableau_report_b2_passes():
    rep = verify_edge_tableau_theorems(2, "B")
    assert rep.ok


def test_edge_tableau_known_counterexamples():
    # the D_i identity fails on these mixed-sign edges with s = s_{i-1};
    # P_B'(z) is then P_B'(y) with the labels i-1, i exchanged
    rep = verify_edge_tableau_theorems(3, "B")
    assert len(rep.violations) == rep.explained_by_s == 2
    assert any("y=-5,6,-4,-3,-1,2" in v for v in rep.violations)
    rep = verify_edge_tableau_theorems(3, "D")
    assert len(rep.violations) == rep.explained_by_s == 1
