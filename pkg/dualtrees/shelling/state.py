import heapq
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple, Union

import numpy as np

from dualtrees.complex.planar_complex import Diagram


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PendantRemoval:
    """
    remove a pendant edge together with its leaf, which is not the base.
    on the boundary walk this deletes a backtracking pair of darts
    """

    edge: int
    vertex: int

    kind = "pendant"

    def to_dict(self) -> dict:
        return dict(kind=self.kind, edge=self.edge, vertex=self.vertex)


@dataclass(frozen=True, order=True)
class CellCollapse:
    """
    remove a boundary edge together with the interior of a 2-cell on its
    other side. on the boundary walk the edge is replaced by the rest of
    the boundary of the cell
    """

    edge: int
    face: int

    kind = "collapse"

    def to_dict(self) -> dict:
        return dict(kind=self.kind, edge=self.edge, face=self.face)


ShellingMove = Union[PendantRemoval, CellCollapse]


def move_from_dict(data: dict) -> ShellingMove:

    if data["kind"] == PendantRemoval.kind:
        return PendantRemoval(edge=int(data["edge"]), vertex=int(data["vertex"]))

    if data["kind"] == CellCollapse.kind:
        return CellCollapse(edge=int(data["edge"]), face=int(data["face"]))

    raise ValueError(f"unknown move kind {data['kind']}")


class ShellingState(object):
    def __init__(self, diagram: Diagram):
        """
        A subdiagram met during a shelling, stored as the sets of edges and
        2-cells of the original diagram that are still present. A dart is
        on the boundary walk exactly when its edge is alive and the face on
        its right is not.

        :param diagram: the diagram being shelled
        :returns:
        :rtype:

        """

        self._diagram: Diagram = diagram
        complex = diagram.complex

        self._alive_edges: np.ndarray = np.ones(complex.n_edges, dtype=bool)
        self._alive_faces: np.ndarray = np.ones(complex.n_faces, dtype=bool)
        self._alive_faces[diagram.outer_face] = False

        self._degree: np.ndarray = complex.vertex_degrees().copy()
        self._boundary_length: int = diagram.boundary_length
        self._vertex_darts: Optional[List[np.ndarray]] = None

    @property
    def diagram(self) -> Diagram:
        return self._diagram

    @property
    def base(self) -> int:
        return self._diagram.base

    @property
    def boundary_length(self) -> int:
        return self._boundary_length

    @property
    def n_alive_edges(self) -> int:
        return int(self._alive_edges.sum())

    @property
    def area(self) -> int:
        return int(self._alive_faces.sum())

    @property
    def is_finished(self) -> bool:
        """
        only the base vertex is left
        """
        return self.n_alive_edges == 0 and self.area == 0

    def copy(self) -> "ShellingState":

        other = ShellingState.__new__(ShellingState)
        other._diagram = self._diagram
        other._alive_edges = self._alive_edges.copy()
        other._alive_faces = self._alive_faces.copy()
        other._degree = self._degree.copy()
        other._boundary_length = self._boundary_length
        other._vertex_darts = self._darts_by_vertex()

        return other

    def key(self) -> Tuple[bytes, bytes]:
        """
        hashable identity of the subdiagram
        """
        return (
            np.packbits(self._alive_edges).tobytes(),
            np.packbits(self._alive_faces).tobytes(),
        )

    def degree(self, v: int) -> int:
        return int(self._degree[v])

    def boundary_darts(self) -> List[int]:

        complex = self._diagram.complex

        on_boundary = self._alive_edges[complex.edge_of_dart] & ~self._alive_faces[
            complex.face_of_dart
        ]

        return [int(d) for d in np.flatnonzero(on_boundary)]

    def boundary_vertices(self) -> Set[int]:
        """
        vertices met by the boundary walk; the base alone once nothing else
        is left
        """

        complex = self._diagram.complex
        darts = self.boundary_darts()

        if not darts:
            return {self.base}

        return set(int(v) for v in complex.origin[darts])

    def recount_boundary(self) -> int:
        return len(self.boundary_darts())

    # legality

    def _pendant_ok(self, e: int, v: int) -> bool:

        complex = self._diagram.complex

        if not self._alive_edges[e] or v == self.base or self._degree[v] != 1:
            return False

        d0, d1 = complex.edge_darts[e]

        if v not in (complex.origin[d0], complex.origin[d1]):
            return False

        # a spike into a living cell is not pendant yet
        return not (
            self._alive_faces[complex.face_of_dart[d0]]
            or self._alive_faces[complex.face_of_dart[d1]]
        )

    def _collapse_ok(self, e: int, f: int) -> bool:

        complex = self._diagram.complex

        if not (self._alive_edges[e] and 0 <= f < len(self._alive_faces)):
            return False

        if not self._alive_faces[f]:
            return False

        d0, d1 = complex.edge_darts[e]
        f0, f1 = complex.face_of_dart[d0], complex.face_of_dart[d1]

        return (f0 == f and not self._alive_faces[f1]) or (
            f1 == f and not self._alive_faces[f0]
        )

    def is_legal(self, move: ShellingMove) -> bool:

        if isinstance(move, PendantRemoval):
            return self._pendant_ok(move.edge, move.vertex)

        if isinstance(move, CellCollapse):
            return self._collapse_ok(move.edge, move.face)

        return False

    def legal_moves(self) -> List[ShellingMove]:
        """
        every legal move, pendant removals first, each group in edge order
        """

        complex = self._diagram.complex

        pendants: List[ShellingMove] = []
        collapses: List[ShellingMove] = []

        for d in self.boundary_darts():

            e = int(complex.edge_of_dart[d])
            v = int(complex.origin[d])
            g = int(complex.face_of_dart[complex.opposite[d]])

            if self._pendant_ok(e, v):
                pendants.append(PendantRemoval(edge=e, vertex=v))

            if self._alive_faces[g]:
                collapses.append(CellCollapse(edge=e, face=g))

        return sorted(set(pendants)) + sorted(set(collapses))

    def delta(self, move: ShellingMove) -> int:
        """
        change of the boundary length made by a move
        """

        if isinstance(move, PendantRemoval):
            return -2

        return len(self._diagram.complex.faces[move.face]) - 2

    # mutation

    def apply(self, move: ShellingMove) -> int:
        """
        apply a legal move in place and return the new boundary length
        """

        if not self.is_legal(move):

            raise IllegalMove(f"{move} is not legal in the current state")

        complex = self._diagram.complex
        self._boundary_length += self.delta(move)

        self._alive_edges[move.edge] = False

        for d in complex.edge_darts[move.edge]:
            self._degree[complex.origin[d]] -= 1

        if isinstance(move, CellCollapse):
            self._alive_faces[move.face] = False

        return self._boundary_length

    def _darts_by_vertex(self) -> List[np.ndarray]:

        if self._vertex_darts is None:

            complex = self._diagram.complex
            order = np.argsort(complex.origin, kind="stable")
            counts = np.bincount(complex.origin, minlength=complex.n_vertices)

            self._vertex_darts = np.split(order, np.cumsum(counts)[:-1])

        return self._vertex_darts

    def _pendant_at(self, v: int):

        if v == self.base or self._degree[v] != 1:
            return None

        complex = self._diagram.complex

        for d in self._darts_by_vertex()[v]:

            e = int(complex.edge_of_dart[d])

            if self._alive_edges[e]:

                return PendantRemoval(edge=e, vertex=v) if self._pendant_ok(e, v) else None

        return None

    def strip_pendants(self, around: Optional[Iterable[int]] = None) -> List[PendantRemoval]:
        """
        remove pendant edges as long as there are any, lowest edge first.
        new pendants can only appear near the last change, so ``around``
        restricts the first scan to those vertices

        :param around: vertices to scan, every vertex when None
        :returns: the removals in the order they were made
        :rtype:

        """

        complex = self._diagram.complex

        vertices = range(complex.n_vertices) if around is None else set(around)

        heap = [m for m in (self._pendant_at(v) for v in vertices) if m is not None]
        heapq.heapify(heap)

        removed = []

        while heap:

            move = heapq.heappop(heap)

            if not self._pendant_ok(move.edge, move.vertex):
                continue

            self.apply(move)
            removed.append(move)

            d0, d1 = complex.edge_darts[move.edge]

            for u in (int(complex.origin[d0]), int(complex.origin[d1])):

                nxt = self._pendant_at(u)

                if nxt is not None:
                    heapq.heappush(heap, nxt)

        return removed

    def face_vertices(self, f: int) -> List[int]:

        complex = self._diagram.complex

        return [int(complex.origin[d]) for d in complex.faces[f]]

    def __repr__(self):

        return (
            f"ShellingState(edges={self.n_alive_edges}, area={self.area}, "
            f"boundary={self._boundary_length})"
        )


def legal_moves(state: ShellingState) -> List[ShellingMove]:

    return state.legal_moves()


def apply_move(state: ShellingState, move: ShellingMove) -> ShellingState:
    """
    the state after a move, leaving the given state untouched
    """

    new = state.copy()
    new.apply(move)

    return new
