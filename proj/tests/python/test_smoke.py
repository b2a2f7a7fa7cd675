import itertools

import networkx as nx
import pytest

import indcx


def brute_z(g):
    h = nx.Graph()
    h.add_nodes_from(v for v in range(g.vertex_count()) if g.usable(v))
    h.add_edges_from((u, v) for u, v in g.edges() if g.usable(u) and g.usable(v))
    nodes = list(h.nodes)
    z = 0
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if not any(h.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                z += (-1) ** k
    return z


@pytest.mark.parametrize("family,m,n", [("square_cyl", 3, 4), ("square_rect", 3, 4), ("hex_cyl", 1, 3), ("hex_torus", 2, 2)])
def test_z_matches_brute_force(family, m, n):
    g = indcx.build(family, m, n)
    assert indcx.alternating_sum(g) == brute_z(g)


def test_transfer_and_frontier_agree():
    for m in range(1, 5):
        for n in range(1, 9):
            assert indcx.z_cylinder(m, n) == indcx.alternating_sum(indcx.build("square_cyl", m, n))


def test_big_values_are_python_ints():
    z = indcx.z_cylinder(11, 24)
    assert isinstance(z, int)


def test_homology():
    g = indcx.build("square_cyl", 3, 4)
    assert indcx.homology_entry(g) == "(2,3)"
    assert indcx.homology(g) == {2: (3, [])}


def test_budget_raises():
    with pytest.raises(indcx.BudgetExceeded):
        indcx.homology(indcx.build("square_rect", 6, 6), max_faces=1000)


def test_morse_tree():
    graph, crit, acyclic = indcx.morse_tree("C4", 4)
    assert acyclic
    assert len(crit) == 5
    assert all(len(f) == 4 for f in crit)


def test_generating_function():
    s = indcx.g_series(4, [], [4], 8)
    assert s[:5] == [(0, 0), (0, 1), (0, 0), (0, 0), (0, -1)]
    assert indcx.g_fit(4, [], [], 40) is not None


def test_class_sums():
    r = indcx.class_sums(2, 6)
    assert r["ok"]
    assert r["total"] == indcx.z_cylinder(2, 6)


def test_json_round_trip():
    g = indcx.build("hex_cyl", 2, 3)
    h = indcx.Graph.from_json(g.to_json())
    assert h.edges() == g.edges()
