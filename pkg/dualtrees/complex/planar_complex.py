from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from dualtrees.utils.edge_graph import Disconnected, EdgeGraph
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)

SCHEMA_VERSION = 1


class NonInvolutiveOpposite(ValueError):
    pass


class BrokenRotation(ValueError):
    pass


class NonPlanarEuler(ValueError):
    pass


class BaseNotOnBoundary(ValueError):
    pass


class OuterFaceQueried(ValueError):
    pass


class UnsupportedSchemaVersion(ValueError):
    pass


def _frozen(values, dtype=np.int64) -> np.ndarray:

    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)

    return arr


class PlanarComplex(object):
    def __init__(
        self,
        opposite: Sequence[int],
        next_dart: Sequence[int],
        origin: Sequence[int],
        n_vertices: Optional[int] = None,
    ):
        """
        A planar multigraph stored as a rotation system. Dart d starts at
        origin[d], opposite[d] is the reversed dart and next_dart[d] is the
        next dart counterclockwise around origin[d].

        Faces are the orbits of d -> next_dart[opposite[d]]; each orbit keeps
        its face on the right, so bounded faces run clockwise and the outer
        face runs counterclockwise around the diagram.

        :param opposite: fixed-point-free involution on darts
        :param next_dart: counterclockwise successor at the origin
        :param origin: origin vertex of each dart
        :param n_vertices: number of vertices, needed for the dartless vertex
        :returns:
        :rtype:

        """

        self._opposite = _frozen(opposite)
        self._next = _frozen(next_dart)
        self._origin = _frozen(origin)

        n_darts = self._opposite.size

        if not (self._next.size == n_darts and self._origin.size == n_darts):

            raise BrokenRotation(
                "opposite, next and origin tables must have the same length"
            )

        if n_vertices is None:

            n_vertices = int(self._origin.max()) + 1 if n_darts > 0 else 1

        self._n_vertices: int = int(n_vertices)

        self._check_involution()
        self._check_rotation()

        self._derive_edges()
        self._derive_faces()

        self.skeleton().require_connected()

        euler = self.n_vertices - self.n_edges + self.n_faces

        if euler != 2:

            raise NonPlanarEuler(
                f"V - E + F = {self.n_vertices} - {self.n_edges} + {self.n_faces} = {euler} != 2"
            )

        logger.debug(
            f"built complex V={self.n_vertices} E={self.n_edges} F={self.n_faces}"
        )

    # construction checks

    def _check_involution(self) -> None:

        n = self._opposite.size

        if n % 2 != 0:

            raise NonInvolutiveOpposite(f"odd number of darts: {n}")

        if n == 0:
            return

        if self._opposite.min() < 0 or self._opposite.max() >= n:

            raise NonInvolutiveOpposite("opposite refers to a missing dart")

        darts = np.arange(n)

        if np.any(self._opposite == darts):

            raise NonInvolutiveOpposite("opposite has a fixed point")

        if np.any(self._opposite[self._opposite] != darts):

            raise NonInvolutiveOpposite("opposite is not self-inverse")

    def _check_rotation(self) -> None:

        n = self._next.size

        if n == 0:

            if self._n_vertices != 1:

                raise Disconnected("a dartless complex has a single vertex")

            return

        if self._next.min() < 0 or self._next.max() >= n:

            raise BrokenRotation("next refers to a missing dart")

        if np.unique(self._next).size != n:

            raise BrokenRotation("next is not a permutation")

        if self._origin.min() < 0 or self._origin.max() >= self._n_vertices:

            raise BrokenRotation("origin refers to a missing vertex")

        if np.any(self._origin[self._next] != self._origin):

            raise BrokenRotation("next leaves the origin vertex")

        # each vertex carries a single rotation cycle
        seen = np.zeros(n, dtype=bool)
        cycles_at = np.zeros(self._n_vertices, dtype=np.int64)

        for d in range(n):

            if seen[d]:
                continue

            cycles_at[self._origin[d]] += 1

            x = d

            while not seen[x]:

                seen[x] = True
                x = self._next[x]

        bad = np.flatnonzero(cycles_at > 1)

        if bad.size > 0:

            raise BrokenRotation(
                f"vertex {int(bad[0])} carries {int(cycles_at[bad[0]])} rotation cycles"
            )

    def _derive_edges(self) -> None:

        n = self._opposite.size

        edge_of_dart = -np.ones(n, dtype=np.int64)
        edge_darts: List[Tuple[int, int]] = []

        for d in range(n):

            if edge_of_dart[d] >= 0:
                continue

            e = len(edge_darts)
            edge_of_dart[d] = e
            edge_of_dart[self._opposite[d]] = e
            edge_darts.append((d, int(self._opposite[d])))

        self._edge_of_dart = _frozen(edge_of_dart)
        self._edge_darts = _frozen(edge_darts).reshape(-1, 2)

    def _derive_faces(self) -> None:

        n = self._opposite.size

        face_of_dart = -np.ones(n, dtype=np.int64)
        faces: List[Tuple[int, ...]] = []

        for d in range(n):

            if face_of_dart[d] >= 0:
                continue

            orbit = []
            x = d

            while face_of_dart[x] < 0:

                face_of_dart[x] = len(faces)
                orbit.append(x)
                x = int(self._next[self._opposite[x]])

            faces.append(tuple(orbit))

        if n == 0:

            # the lone vertex still has its outer face
            faces.append(tuple())

        self._face_of_dart = _frozen(face_of_dart)
        self._faces: Tuple[Tuple[int, ...], ...] = tuple(faces)

    # tables

    @property
    def n_darts(self) -> int:
        return self._opposite.size

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def n_edges(self) -> int:
        return self._edge_darts.shape[0]

    @property
    def n_faces(self) -> int:
        return len(self._faces)

    @property
    def opposite(self) -> np.ndarray:
        return self._opposite

    @property
    def next_dart(self) -> np.ndarray:
        return self._next

    @property
    def origin(self) -> np.ndarray:
        return self._origin

    @property
    def edge_of_dart(self) -> np.ndarray:
        return self._edge_of_dart

    @property
    def edge_darts(self) -> np.ndarray:
        return self._edge_darts

    @property
    def face_of_dart(self) -> np.ndarray:
        return self._face_of_dart

    @property
    def faces(self) -> Tuple[Tuple[int, ...], ...]:
        return self._faces

    def head(self, d: int) -> int:

        return int(self._origin[self._opposite[d]])

    def edge_endpoints(self) -> np.ndarray:

        if self.n_edges == 0:
            return np.zeros((0, 2), dtype=np.int64)

        return np.stack(
            [
                self._origin[self._edge_darts[:, 0]],
                self._origin[self._edge_darts[:, 1]],
            ],
            axis=1,
        )

    def skeleton(self) -> EdgeGraph:
        """
        the 1-skeleton, with edge ids equal to the complex edge ids
        """

        return EdgeGraph(self._n_vertices, self.edge_endpoints())

    def face_degree_table(self) -> np.ndarray:

        return np.array([len(f) for f in self._faces], dtype=np.int64)

    def darts_at(self, v: int) -> List[int]:
        """
        darts leaving v in counterclockwise order
        """

        start = np.flatnonzero(self._origin == v)

        if start.size == 0:
            return []

        out = [int(start[0])]
        x = int(self._next[start[0]])

        while x != out[0]:

            out.append(x)
            x = int(self._next[x])

        return out

    def vertex_degrees(self) -> np.ndarray:

        return np.bincount(self._origin, minlength=self._n_vertices).astype(
            np.int64
        )

    # serialization

    def dart_table(self) -> List[Dict[str, int]]:

        return [
            dict(
                opposite=int(self._opposite[d]),
                next=int(self._next[d]),
                origin=int(self._origin[d]),
            )
            for d in range(self.n_darts)
        ]

    @classmethod
    def from_dart_table(
        cls, darts: Sequence[Dict[str, int]], n_vertices: Optional[int] = None
    ) -> "PlanarComplex":

        return cls(
            [d["opposite"] for d in darts],
            [d["next"] for d in darts],
            [d["origin"] for d in darts],
            n_vertices=n_vertices,
        )

    @classmethod
    def from_embedding(
        cls, positions: np.ndarray, edges: Sequence[Tuple[int, int]]
    ) -> "PlanarComplex":
        """
        build the rotation system of a straight-line plane graph by sorting
        the darts at each vertex by angle. edge i becomes darts 2i (a -> b)
        and 2i + 1 (b -> a)

        :param positions: (V, 2) vertex coordinates
        :param edges: simple edges (a, b)
        :returns:
        :rtype:

        """

        positions = np.asarray(positions, dtype=float)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)

        n_darts = 2 * edges.shape[0]

        origin = edges.ravel()
        heads = edges[:, ::-1].ravel()
        opposite = np.arange(n_darts) ^ 1

        delta = positions[heads] - positions[origin]
        angle = np.arctan2(delta[:, 1], delta[:, 0])

        next_dart = np.empty(n_darts, dtype=np.int64)

        for v in np.unique(origin):

            darts = np.flatnonzero(origin == v)
            darts = darts[np.argsort(angle[darts], kind="stable")]

            assert np.unique(angle[darts]).size == darts.size, (
                f"vertex {v} has overlapping edges"
            )

            next_dart[darts] = np.roll(darts, -1)

        return cls(opposite, next_dart, origin, n_vertices=len(positions))

    def __repr__(self):

        return f"PlanarComplex(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"


def build_complex(
    opposite: Sequence[int],
    next_dart: Sequence[int],
    origin: Sequence[int],
    n_vertices: Optional[int] = None,
) -> PlanarComplex:
    """
    build and validate a complex from its dart table
    """

    return PlanarComplex(opposite, next_dart, origin, n_vertices=n_vertices)


@dataclass(frozen=True)
class Walk:

    darts: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def __len__(self):
        return len(self.darts)


class Diagram(object):
    def __init__(self, complex: PlanarComplex, outer_face: int, base: int):
        """
        A planar disc diagram: a complex with a designated outer face and a
        base vertex on its boundary. Every other face is a 2-cell.

        :param complex: the underlying planar complex
        :param outer_face: id of the unbounded face
        :param base: the base vertex
        :returns:
        :rtype:

        """

        assert (
            0 <= outer_face < complex.n_faces
        ), f"outer face {outer_face} is not a face of {complex}"

        assert (
            0 <= base < complex.n_vertices
        ), f"base {base} is not a vertex of {complex}"

        self._complex: PlanarComplex = complex
        self._outer_face: int = int(outer_face)
        self._base: int = int(base)

        if complex.n_darts > 0 and not any(
            complex.origin[d] == base for d in complex.faces[outer_face]
        ):

            raise BaseNotOnBoundary(
                f"base vertex {base} is not on the outer face {outer_face}"
            )

    @property
    def complex(self) -> PlanarComplex:
        return self._complex

    @property
    def outer_face(self) -> int:
        return self._outer_face

    @property
    def base(self) -> int:
        return self._base

    @property
    def bounded_faces(self) -> List[int]:

        return [f for f in range(self._complex.n_faces) if f != self._outer_face]

    @property
    def area(self) -> int:

        return self._complex.n_faces - 1

    @property
    def max_face_degree(self) -> int:
        """
        lambda, the largest degree of a 2-cell (0 without cells)
        """

        degrees = [len(self._complex.faces[f]) for f in self.bounded_faces]

        return max(degrees) if degrees else 0

    @property
    def boundary_length(self) -> int:

        return len(self._complex.faces[self._outer_face])

    def rebased(self, base: int) -> "Diagram":

        return Diagram(self._complex, self._outer_face, base)

    def to_dict(self) -> dict:

        return dict(
            version=SCHEMA_VERSION,
            n_vertices=self._complex.n_vertices,
            darts=self._complex.dart_table(),
            outer_face=self._outer_face,
            base=self._base,
        )

    @classmethod
    def from_dict(cls, data: dict) -> "Diagram":

        if data.get("version") != SCHEMA_VERSION:

            raise UnsupportedSchemaVersion(
                f"diagram schema version {data.get('version')} is not {SCHEMA_VERSION}"
            )

        complex = PlanarComplex.from_dart_table(
            data["darts"], n_vertices=data.get("n_vertices")
        )

        return cls(complex, data["outer_face"], data["base"])

    def __repr__(self):

        return (
            f"Diagram(V={self._complex.n_vertices}, E={self._complex.n_edges}, "
            f"area={self.area}, base={self._base})"
        )


def boundary_walk(d: Diagram) -> Walk:
    """
    the anticlockwise closed walk around the diagram starting at the base
    vertex; edges of one-dimensional parts appear twice
    """

    complex = d.complex
    orbit = complex.faces[d.outer_face]

    if len(orbit) == 0:

        return Walk(darts=tuple(), vertices=(d.base,))

    starts = [i for i, x in enumerate(orbit) if complex.origin[x] == d.base]

    if not starts:

        raise BaseNotOnBoundary(f"base vertex {d.base} is not on the boundary")

    i = starts[0]
    darts = tuple(orbit[i:] + orbit[:i])
    vertices = tuple(int(complex.origin[x]) for x in darts) + (d.base,)

    return Walk(darts=darts, vertices=vertices)


def face_degree(d: Diagram, f: int) -> int:

    if f == d.outer_face:

        raise OuterFaceQueried(
            "the outer face has no degree as a cell, use boundary_walk"
        )

    return len(d.complex.faces[f])
