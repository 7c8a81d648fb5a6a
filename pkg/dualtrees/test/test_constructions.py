import networkx as nx
import numpy as np
import pytest

from dualtrees.constructions import (
    KTooSmall,
    LevelMismatch,
    assemble_delta,
    boundary_length_formula,
    fatten,
    max_degrees,
    pentagon_annulus,
    trivalent_tree,
)
from dualtrees.constructions.fattened_tree import junction_region
from dualtrees.constructions.pentagon_annulus import merged_cells, ring_exponent


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_trivalent_tree_shape(n):

    t = trivalent_tree(n)

    assert t.n_edges == 3 ** n
    assert t.n_vertices == 3 ** n + 1
    assert t.graph.is_tree()
    assert t.degrees.max() <= 3
    assert len(t.leaves) == (3 ** n + 3) // 2
    assert sorted(t.rotation) == t.trivalent_vertices

    for v, rot in t.rotation.items():

        assert len(rot) == 3
        assert all(v in t.edges[e] for e in rot)


def test_trivalent_tree_half_open_ownership():

    t = trivalent_tree(2)

    assert len(t.owned_vertices(t.distinguished_edge)) == 2

    for e in range(1, t.n_edges):

        assert len(t.owned_vertices(e)) == 1


def test_trivalent_tree_seeded_choice():

    a = trivalent_tree(2, choice_seed=5)
    b = trivalent_tree(2, choice_seed=5)

    assert a.edges == b.edges
    assert a.graph.is_tree()
    assert a.degrees.max() <= 3


def test_ring_profile():

    assert ring_exponent(5) == 3
    assert ring_exponent(8) == 3
    assert ring_exponent(9) == 4
    assert merged_cells(8, 3) == [0, 2, 5]

    with pytest.raises(KTooSmall):

        pentagon_annulus(4)


def test_annulus_k8():

    a = pentagon_annulus(8)

    assert a.ring_count == 1
    assert len(a.polygons) == 4
    assert all(len(p) == 5 for p in a.polygons)
    assert len(a.outer_circuit) == 8
    assert len(a.inner_circuit) == 4


def test_annulus_k16():

    a = pentagon_annulus(16)

    assert a.ring_count == 2
    assert len(a.polygons) == 12
    assert [len(c) for c in a.circles] == [16, 8, 4]


@pytest.mark.parametrize("k", [5, 6, 7, 9, 13, 48])
def test_annulus_general_k(k):

    a = pentagon_annulus(k, first_vertex_id=100)

    assert a.outer_circuit == list(range(100, 100 + k))
    assert len(a.inner_circuit) == 4

    sizes = [len(p) for p in a.polygons]

    assert sizes.count(4) == a.n_merges
    assert max(sizes) == 5

    cycles = a.patch().boundary_cycles()

    assert sorted(len(c) for c in cycles) == [4, k]

    # Euler characteristic of the annulus, counting the outer face and the hole
    n_vertices = len({v for p in a.polygons for v in p})
    n_edges = len({frozenset(e) for p in a.polygons for e in zip(p, p[1:] + p[:1])})

    assert n_vertices - n_edges + len(a.polygons) + 2 == 2


def test_junction_regions():

    # the three corners of a side-1 patch go to different sides
    assert {junction_region(1, 0, 0, 0), junction_region(1, 1, 0, 0), junction_region(1, 0, 1, 0)} == {0, 1, 2}

    # the centre of a side-3 patch goes to the owner's side
    assert junction_region(3, 1, 1, 2) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_boundary_formula(n):

    a = fatten(trivalent_tree(n), n)

    assert len(a.boundary_circuit()) == boundary_length_formula(n)


def test_boundary_formula_values():

    assert boundary_length_formula(1) == 9
    assert boundary_length_formula(2) == 48
    assert boundary_length_formula(3) == 207
    assert boundary_length_formula(4) == 816
    assert boundary_length_formula(5) == 3045


def test_level_mismatch():

    with pytest.raises(LevelMismatch):

        fatten(trivalent_tree(1), 2)


def test_fattened_tree_cells():

    a = fatten(trivalent_tree(1), 1)

    assert a.n_vertices == 9
    assert a.grid_cells == 3
    assert a.triangle_cells == 1


@pytest.mark.parametrize("n", [2, 3])
def test_territories(n, as_networkx):

    a = fatten(trivalent_tree(n), n)
    d, _ = a.patch.to_diagram()

    inscribed = a.inscribed
    tree = inscribed.tree
    g = nx.Graph(as_networkx(d))

    assert (inscribed.vertex_owner >= 0).all()

    for e in range(tree.n_edges):

        territory = inscribed.territory(e)

        assert nx.is_connected(g.subgraph(territory)), e

        line = inscribed.center_line[e]

        assert line
        assert set(line) <= territory

    # territories only touch along the line graph of the tree
    distance = tree.edge_distance()

    for a_, b_ in g.edges():

        oa, ob = inscribed.vertex_owner[a_], inscribed.vertex_owner[b_]

        if oa != ob:

            assert distance[oa, ob] == 1, (oa, ob)


def test_delta_1(delta_1):

    meta = delta_1.metadata

    assert meta.p_n == 9
    assert meta.interface_length == len(delta_1.interface) == 9
    assert meta.boundary_length == 4
    assert meta.max_face_degree == 5
    assert delta_1.diagram.base in delta_1.skirt.inner_circuit
    assert delta_1.inscribed.n_vertices == delta_1.diagram.complex.n_vertices


def test_delta_2_metadata(delta_2):

    data = delta_2.metadata.to_dict()

    assert data["p_n"] == 48
    assert data["lambda"] == 5
    assert data["boundary_length"] == 4
    assert data["version"] == 1


def test_degree_bound(delta_1, delta_2, delta_3):

    for construction in (delta_1, delta_2, delta_3):

        primal, dual = max_degrees(construction.diagram)

        assert primal <= 6
        assert dual <= 6


@pytest.mark.slow
@pytest.mark.parametrize("level", [4, 5])
def test_degree_bound_of_larger_deltas(level, request):

    construction = request.getfixturevalue(f"delta_{level}")

    primal, dual = max_degrees(construction.diagram)

    assert primal <= 6
    assert dual <= 6
    assert construction.metadata.p_n == boundary_length_formula(level)
    assert construction.metadata.interface_length == boundary_length_formula(level)


def test_assemble_delta_is_deterministic():

    d1, _, m1 = assemble_delta(1)
    d2, _, m2 = assemble_delta(1)

    assert d1.to_dict() == d2.to_dict()
    assert m1 == m2


def test_line_graph_distances():

    star = trivalent_tree(1).edge_distance()

    assert star.shape == (3, 3)
    assert (star == 1 - np.eye(3, dtype=int)).all()

    t = trivalent_tree(2)
    distance = t.edge_distance()

    assert (distance == distance.T).all()
    assert distance.max() >= 2
