import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualtrees.complex import (
    BaseNotOnBoundary,
    BrokenRotation,
    Diagram,
    Disconnected,
    InconsistentOrientation,
    NonInvolutiveOpposite,
    NonPlanarEuler,
    OuterFaceQueried,
    PinchedVertex,
    PolygonPatch,
    UnsupportedSchemaVersion,
    boundary_walk,
    build_complex,
    face_degree,
)
from dualtrees.constructions.corpus import (
    grid_diagram,
    lone_edge,
    random_lattice_diagram,
    single_vertex,
    square,
    triangle,
)


def test_square_counts():

    d = square()

    assert d.complex.n_vertices == 4
    assert d.complex.n_edges == 4
    assert d.complex.n_faces == 2
    assert d.area == 1
    assert d.boundary_length == 4
    assert d.max_face_degree == 4

    cell = d.bounded_faces[0]

    assert face_degree(d, cell) == 4

    with pytest.raises(OuterFaceQueried):

        face_degree(d, d.outer_face)

    print(d)


def test_one_dimensional_parts_count_twice():

    d = lone_edge()

    walk = boundary_walk(d)

    assert d.area == 0
    assert walk.length == 2
    assert walk.vertices == (0, 1, 0)


def test_single_vertex():

    d = single_vertex()

    walk = boundary_walk(d)

    assert d.complex.n_faces == 1
    assert walk.length == 0
    assert walk.vertices == (0,)
    assert d.max_face_degree == 0


def test_walk_starts_and_ends_at_base():

    d = grid_diagram(2, 2)

    walk = boundary_walk(d)

    assert walk.length == 8
    assert walk.vertices[0] == walk.vertices[-1] == d.base


def test_bad_opposite():

    with pytest.raises(NonInvolutiveOpposite):

        build_complex([0], [0], [0])

    with pytest.raises(NonInvolutiveOpposite):

        build_complex([1, 1], [0, 1], [0, 1])


def test_bad_rotation():

    with pytest.raises(BrokenRotation):

        build_complex([1, 0], [1, 0], [0, 1])


def test_torus_is_rejected():

    # two loops at one vertex interleaved in the rotation
    with pytest.raises(NonPlanarEuler):

        build_complex([1, 0, 3, 2], [2, 3, 1, 0], [0, 0, 0, 0])


def test_disconnected_is_rejected():

    with pytest.raises(Disconnected):

        build_complex([1, 0, 3, 2], [0, 1, 2, 3], [0, 1, 2, 3])


def test_base_must_be_on_boundary():

    d = grid_diagram(2, 2)

    with pytest.raises(BaseNotOnBoundary):

        Diagram(d.complex, d.outer_face, 4)

    assert d.rebased(8).base == 8


def test_dict_round_trip(corpus):

    for name, d in corpus.items():

        e = Diagram.from_dict(d.to_dict())

        assert np.array_equal(e.complex.opposite, d.complex.opposite), name
        assert np.array_equal(e.complex.next_dart, d.complex.next_dart), name
        assert np.array_equal(e.complex.origin, d.complex.origin), name
        assert e.outer_face == d.outer_face
        assert e.base == d.base


def test_schema_version_is_checked():

    data = triangle().to_dict()
    data["version"] = 99

    with pytest.raises(UnsupportedSchemaVersion):

        Diagram.from_dict(data)


def test_patch_gluing():

    patch = PolygonPatch(6, [(0, 1, 4, 3), (1, 2, 5, 4)])

    assert patch.boundary_cycles() == [[0, 1, 2, 5, 4, 3]]

    d, cells = patch.to_diagram()

    assert d.complex.n_edges == 7
    assert d.area == 2
    assert d.outer_face not in cells
    assert d.base == 0


def test_patch_orientation_clash():

    with pytest.raises(InconsistentOrientation):

        PolygonPatch(4, [(0, 1, 2), (0, 1, 3)])


def test_patch_pinched_vertex():

    patch = PolygonPatch(5, [(0, 1, 2), (0, 3, 4)])

    with pytest.raises(PinchedVertex):

        patch.boundary_cycles()


@given(st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=16, deadline=None)
def test_grid_counts(rows, columns):

    d = grid_diagram(rows, columns)

    assert d.complex.n_vertices == (rows + 1) * (columns + 1)
    assert d.complex.n_edges == rows * (columns + 1) + columns * (rows + 1)
    assert d.area == rows * columns
    assert d.boundary_length == 2 * (rows + columns)
    assert d.max_face_degree == 4


@given(st.integers(0, 2 ** 31 - 1), st.sampled_from(["square", "triangular"]))
@settings(max_examples=40, deadline=None)
def test_random_lattice_diagrams_are_discs(seed, lattice):

    d = random_lattice_diagram(np.random.default_rng(seed), 12, lattice=lattice)

    complex = d.complex

    assert complex.n_vertices - complex.n_edges + complex.n_faces == 2

    # every dart lies on exactly one face orbit
    assert sum(len(f) for f in complex.faces) == complex.n_darts

    walk = boundary_walk(d)

    assert d.base in set(walk.vertices)
    assert walk.length == d.boundary_length
