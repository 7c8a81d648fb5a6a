from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from dualtrees.complex.planar_complex import Diagram, PlanarComplex
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class PinchedVertex(ValueError):
    pass


class InconsistentOrientation(ValueError):
    pass


class PolygonPatch(object):
    def __init__(self, n_vertices: int, polygons: Sequence[Sequence[int]]):
        """
        A 2-complex given by its cells, each a counterclockwise cycle of
        vertex ids. Cells sharing an edge must traverse it in opposite
        directions. The rotation at each vertex is recovered from the fan of
        cell corners around it, so every vertex may lie on the boundary at
        most once.

        :param n_vertices: number of vertices (ids 0..n_vertices-1)
        :param polygons: counterclockwise vertex cycles
        :returns:
        :rtype:

        """

        self._n_vertices: int = int(n_vertices)
        self._polygons: List[Tuple[int, ...]] = [tuple(p) for p in polygons]

        self._ccw_edges: Dict[Tuple[int, int], int] = {}

        for i, polygon in enumerate(self._polygons):

            assert len(polygon) >= 2, f"cell {i} has fewer than two sides"

            for u, v in zip(polygon, polygon[1:] + polygon[:1]):

                if (u, v) in self._ccw_edges:

                    raise InconsistentOrientation(
                        f"oriented edge {u}->{v} occurs in cells {self._ccw_edges[(u, v)]} and {i}"
                    )

                self._ccw_edges[(u, v)] = i

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def polygons(self) -> List[Tuple[int, ...]]:
        return self._polygons

    def boundary_successor(self) -> Dict[int, int]:
        """
        map u -> v for every boundary edge traversed with the cells on its
        left
        """

        succ: Dict[int, int] = {}

        for (u, v) in self._ccw_edges:

            if (v, u) in self._ccw_edges:
                continue

            if u in succ:

                raise PinchedVertex(f"boundary passes through {u} twice")

            succ[u] = v

        return succ

    def boundary_cycles(self) -> List[List[int]]:
        """
        the boundary circuits, each started at its smallest vertex
        """

        succ = self.boundary_successor()
        seen = set()
        cycles = []

        for start in sorted(succ):

            if start in seen:
                continue

            cycle = []
            u = start

            while u not in seen:

                seen.add(u)
                cycle.append(u)
                u = succ[u]

            cycles.append(cycle)

        return cycles

    def to_complex(self) -> Tuple[PlanarComplex, List[int]]:
        """
        glue the cells into a rotation system

        :returns: the complex and the face id of every cell
        :rtype:

        """

        dart_of: Dict[Tuple[int, int], int] = {}
        origin: List[int] = []

        def dart(u: int, v: int) -> int:

            if (u, v) not in dart_of:

                dart_of[(u, v)] = len(origin)
                dart_of[(v, u)] = len(origin) + 1
                origin.extend([u, v])

            return dart_of[(u, v)]

        next_dart: Dict[int, int] = {}

        for polygon in self._polygons:

            k = len(polygon)

            for i in range(k):

                v = polygon[i]
                a = polygon[(i + 1) % k]
                b = polygon[(i - 1) % k]

                # the corner at v sits between v->a and v->b counterclockwise
                next_dart[dart(v, a)] = dart(v, b)

        n_darts = len(origin)
        opposite = np.arange(n_darts) ^ 1
        origin_arr = np.array(origin, dtype=np.int64)

        darts_by_vertex: Dict[int, List[int]] = {}

        for d, v in enumerate(origin):

            darts_by_vertex.setdefault(v, []).append(d)

        # close the fan at boundary vertices
        for v, darts in darts_by_vertex.items():

            targets = set(next_dart[d] for d in darts if d in next_dart)
            sources = [d for d in darts if d not in next_dart]
            free = [d for d in darts if d not in targets]

            if len(sources) > 1:

                raise PinchedVertex(
                    f"vertex {v} has {len(sources)} boundary gaps"
                )

            if sources:

                next_dart[sources[0]] = free[0]

        next_arr = np.array([next_dart[d] for d in range(n_darts)], dtype=np.int64)

        complex = PlanarComplex(
            opposite, next_arr, origin_arr, n_vertices=self._n_vertices
        )

        # cell darts are the reversed counterclockwise edges
        cell_faces = [
            int(complex.face_of_dart[dart_of[(p[1], p[0])]])
            for p in self._polygons
        ]

        return complex, cell_faces

    def to_diagram(self, base: Optional[int] = None) -> Tuple[Diagram, List[int]]:
        """
        the disc diagram of a patch with a single boundary circuit. the base
        defaults to the smallest boundary vertex
        """

        cycles = self.boundary_cycles()

        assert len(cycles) == 1, f"patch has {len(cycles)} boundary circuits"

        complex, cell_faces = self.to_complex()

        u, v = cycles[0][0], cycles[0][1 % len(cycles[0])]
        outer_dart = _find_dart(complex, u, v)
        outer_face = int(complex.face_of_dart[outer_dart])

        assert outer_face not in cell_faces, "outer face coincides with a cell"

        base = cycles[0][0] if base is None else base

        return Diagram(complex, outer_face, base), cell_faces


def _find_dart(complex: PlanarComplex, u: int, v: int) -> int:

    for d in complex.darts_at(u):

        if complex.head(d) == v:
            return d

    raise KeyError(f"no dart {u}->{v}")


def outer_face_from_positions(complex: PlanarComplex, positions: np.ndarray) -> int:
    """
    the face whose traversal has the largest signed area; bounded faces run
    clockwise and so have negative area
    """

    positions = np.asarray(positions, dtype=float)

    best, best_area = 0, -np.inf

    for f, orbit in enumerate(complex.faces):

        if not orbit:
            continue

        xy = positions[complex.origin[list(orbit)]]
        x, y = xy[:, 0], xy[:, 1]
        area = 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)

        if area > best_area:

            best, best_area = f, area

    return best
