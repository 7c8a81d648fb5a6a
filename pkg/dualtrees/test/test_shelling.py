import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualtrees.constructions.corpus import (
    grid_diagram,
    lone_edge,
    random_lattice_diagram,
    single_vertex,
    square,
    square_with_pendant,
    triangle,
)
from dualtrees.duality import (
    SpanningTreePair,
    dual_tree,
    enumerate_spanning_trees,
    tree_diameter,
)
from dualtrees.complex import UnsupportedSchemaVersion
from dualtrees.metrics import diameter
from dualtrees.shelling import (
    CellCollapse,
    IllegalMove,
    IncompleteShelling,
    InvalidPair,
    PendantRemoval,
    RootedTree,
    ShellingRecord,
    ShellingState,
    TooLargeForExactSearch,
    apply_move,
    exact_filling_length,
    geodesic_spanning_tree,
    legal_moves,
    logarithmic_shelling,
    replay,
    rooted_dual_tree,
    subtree_weight,
    tunnelling_bound,
    tunnelling_shelling,
)
from dualtrees.verification import wilson_random_spanning_tree


def _check_record(d, record):

    again = replay(d, record.moves)

    assert again.trace == record.trace
    assert record.trace[-1] == 0
    assert record.trace[0] == d.boundary_length

    for move, delta in zip(record.moves, record.deltas()):

        if isinstance(move, PendantRemoval):

            assert delta == -2

        else:

            assert delta == len(d.complex.faces[move.face]) - 2


@pytest.mark.parametrize(
    "factory, fl",
    [(lone_edge, 2), (triangle, 4), (square, 6), (square_with_pendant, 8), (single_vertex, 0)],
)
def test_exact_filling_length(factory, fl):

    d = factory()

    value, record = exact_filling_length(d)

    assert value == fl
    assert record.max_boundary == fl
    assert record.strategy == "exact"

    _check_record(d, record)


def test_square_grows_before_it_shrinks():

    _, record = exact_filling_length(square())

    assert record.trace == [4, 6, 4, 2, 0]


def test_exact_search_is_capped():

    with pytest.raises(TooLargeForExactSearch):

        exact_filling_length(grid_diagram(3, 3))

    with pytest.raises(TooLargeForExactSearch):

        exact_filling_length(grid_diagram(2, 2), cap=100, state_limit=3)


def test_legal_moves():

    assert legal_moves(ShellingState(square())) == [
        CellCollapse(edge=e, face=square().bounded_faces[0]) for e in range(4)
    ]

    assert legal_moves(ShellingState(lone_edge())) == [PendantRemoval(edge=0, vertex=1)]

    # the leaf of the pendant is the base, so only the square can go
    moves = legal_moves(ShellingState(square_with_pendant()))

    assert moves
    assert all(isinstance(m, CellCollapse) for m in moves)


def test_illegal_moves_raise():

    state = ShellingState(square())

    with pytest.raises(IllegalMove):

        state.apply(PendantRemoval(edge=0, vertex=1))

    with pytest.raises(IllegalMove):

        state.apply(CellCollapse(edge=0, face=square().outer_face))


def test_apply_move_copies():

    state = ShellingState(triangle())
    move = legal_moves(state)[0]

    after = apply_move(state, move)

    assert state.area == 1
    assert after.area == 0
    assert after.boundary_length == 4
    assert after.boundary_length == after.recount_boundary()


def test_record_round_trip():

    d = grid_diagram(1, 2)
    _, record = exact_filling_length(d)

    again = ShellingRecord.from_dict(record.to_dict(), diagram=d)

    assert again.moves == record.moves
    assert again.trace == record.trace

    data = record.to_dict()
    data["version"] = 2

    with pytest.raises(UnsupportedSchemaVersion):

        ShellingRecord.from_dict(data)


def test_replay_needs_a_finished_shelling():

    with pytest.raises(IncompleteShelling):

        replay(square(), [])


def test_incremental_boundary_matches_recount():

    d = grid_diagram(2, 2)
    record = logarithmic_shelling(d)

    for state in record.states(d):

        assert state.boundary_length == state.recount_boundary()


def test_rooted_tree():

    t = RootedTree.from_edges([(0, 1), (0, 2), (0, 3), (3, 4)], root=0)

    assert t.children[0] == [1, 2, 3]
    assert list(t.preorder()) == [0, 1, 2, 3, 4]
    assert t.path_to(4) == [0, 3, 4]
    assert t.leaves() == [1, 2, 4]
    assert subtree_weight(t, 0) == 1
    assert t.heavy_below()[0] == 0

    s = RootedTree.from_edges([(0, 1), (1, 2), (1, 3), (1, 4)], root=0)

    assert s.degree(1) == 4
    assert s.branch_weights()[1] == 1
    assert s.heavy_below()[0] == 1


def test_rooted_dual_tree_of_square():

    d = square()
    pair = dual_tree(d, [0, 1, 2])
    rooted = rooted_dual_tree(d, pair)

    cell = d.bounded_faces[0]

    assert rooted.root == d.outer_face
    assert rooted.children[d.outer_face] == [cell]
    assert rooted.entry_edge[cell] == 3


def test_invalid_pair():

    d = square()

    with pytest.raises(InvalidPair):

        tunnelling_shelling(d, SpanningTreePair(tree=frozenset({0}), dual_tree=frozenset({1, 2, 3})))

    with pytest.raises(InvalidPair):

        tunnelling_shelling(d, SpanningTreePair(tree=frozenset({0, 1, 2}), dual_tree=frozenset()))


def test_tunnelling_on_every_tree(corpus):

    for name, d in corpus.items():

        for t in enumerate_spanning_trees(d.complex.skeleton()):

            pair = dual_tree(d, t)
            record = tunnelling_shelling(d, pair, audit=True)

            _check_record(d, record)

            assert record.max_boundary <= tunnelling_bound(d, pair), name


def test_filling_length_chain_exhaustively(corpus, small_random_corpus):
    """
    FL <= Diam T + 2 lambda Diam T* + boundary length for every spanning tree
    """

    diagrams = list(corpus.values()) + list(small_random_corpus)

    for d in diagrams:

        assert d.complex.n_edges <= 14

        fl, _ = exact_filling_length(d, cap=20)

        for t in enumerate_spanning_trees(d.complex.skeleton()):

            assert fl <= tunnelling_bound(d, dual_tree(d, t))


def test_shellings_of_random_diagrams(small_random_corpus):

    for d in small_random_corpus:

        t = next(iter(enumerate_spanning_trees(d.complex.skeleton())))

        _check_record(d, tunnelling_shelling(d, dual_tree(d, t), audit=True))
        _check_record(d, logarithmic_shelling(d, audit=True))


@pytest.mark.parametrize(
    "level",
    [1, 2, pytest.param(3, marks=pytest.mark.slow), pytest.param(4, marks=pytest.mark.slow)],
)
def test_shellings_of_deltas(level, request):

    construction = request.getfixturevalue(f"delta_{level}")

    d = construction.diagram

    _check_record(d, logarithmic_shelling(d))

    pair = dual_tree(d, geodesic_spanning_tree(d))
    _check_record(d, tunnelling_shelling(d, pair))


def test_geodesic_tree(corpus, small_random_corpus, as_networkx):

    for d in itertools.chain(corpus.values(), small_random_corpus):

        tree = geodesic_spanning_tree(d)
        skeleton = d.complex.skeleton()

        g = as_networkx(d)
        sub = skeleton.edge_subgraph(tree)

        assert sub.is_tree()
        assert list(sub.bfs(d.base)) == [
            nx.shortest_path_length(g, d.base, v) for v in range(d.complex.n_vertices)
        ]

        assert tree_diameter(skeleton, tree) <= 2 * diameter(skeleton)


@given(st.integers(0, 2 ** 31 - 1), st.sampled_from(["square", "triangular"]))
@settings(max_examples=25, deadline=None)
def test_random_wilson_tree_shellings_replay(seed, lattice):

    d = random_lattice_diagram(np.random.default_rng(seed), 16, lattice=lattice)

    tree = wilson_random_spanning_tree(d.complex.skeleton(), seed)
    pair = dual_tree(d, tree)

    assert pair.tree_graph(d).is_tree()

    record = tunnelling_shelling(d, pair, audit=True)

    _check_record(d, record)
