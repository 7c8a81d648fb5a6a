from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

import numpy as np

from dualtrees.complex.polygon_patch import PolygonPatch
from dualtrees.constructions.trivalent_tree import AbstractTrivalentTree
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class LevelMismatch(ValueError):
    pass


def boundary_length_formula(n: int) -> int:
    """
    length of the boundary circuit of the fattened tree A_n
    """

    assert n >= 1, f"level {n} must be at least 1"

    return (5 * 3 ** n + 3) * n // 2


@dataclass
class InscribedTreeMap:
    """
    The copy of T_n inscribed in the fattened tree.

    ``vertex_owner`` partitions the fattened tree into one connected
    territory per tree edge (-1 marks vertices outside it): the grid of the
    edge together with the third of each junction patch facing that grid.
    The centre of a junction patch goes to the edge owning the junction
    vertex. Territories of edges sharing a tree vertex touch, all others
    are disjoint and apart.

    ``center_line`` holds, per tree edge, the middle row of its grid.
    """

    tree: AbstractTrivalentTree
    vertex_owner: np.ndarray
    center_line: Dict[int, List[int]]

    @property
    def n_tree_edges(self) -> int:
        return self.tree.n_edges

    @property
    def n_vertices(self) -> int:
        return self.vertex_owner.size

    def territory(self, e: int) -> FrozenSet[int]:

        return frozenset(int(v) for v in np.flatnonzero(self.vertex_owner == e))

    def edges_met(self, vertices: Iterable[int]) -> FrozenSet[int]:
        """
        the tree edges whose territory contains one of the given vertices
        """

        idx = np.fromiter(vertices, dtype=np.int64)

        if idx.size == 0:
            return frozenset()

        owners = self.vertex_owner[idx]

        return frozenset(int(o) for o in np.unique(owners[owners >= 0]))

    def extended(self, n_vertices: int) -> "InscribedTreeMap":
        """
        pad the owner table with unowned vertices
        """

        assert n_vertices >= self.n_vertices

        owner = -np.ones(n_vertices, dtype=np.int64)
        owner[: self.n_vertices] = self.vertex_owner

        return InscribedTreeMap(
            tree=self.tree, vertex_owner=owner, center_line=dict(self.center_line)
        )

    def to_dict(self) -> dict:

        return dict(
            level=self.tree.level,
            tree_edges=[list(e) for e in self.tree.edges],
            territory={
                str(e): sorted(self.territory(e)) for e in range(self.n_tree_edges)
            },
            center_line={str(e): list(v) for e, v in self.center_line.items()},
        )


@dataclass
class FattenedTree:

    n: int
    tree: AbstractTrivalentTree
    patch: PolygonPatch
    inscribed: InscribedTreeMap
    grid_cells: int
    triangle_cells: int

    @property
    def n_vertices(self) -> int:
        return self.patch.n_vertices

    def boundary_circuit(self) -> List[int]:
        """
        the counterclockwise boundary circuit started at its smallest vertex
        """

        cycles = self.patch.boundary_cycles()

        assert len(cycles) == 1, "a fattened tree has one boundary circuit"

        return cycles[0]


def _triangle_sides(n: int, ids: Dict[Tuple[int, int], int]) -> List[List[int]]:

    # the three sides in counterclockwise order, each from start to end corner
    return [
        [ids[(i, 0)] for i in range(n + 1)],
        [ids[(n - i, i)] for i in range(n + 1)],
        [ids[(0, n - i)] for i in range(n + 1)],
    ]


def junction_region(n: int, i: int, j: int, owner_side: int) -> int:
    """
    the side of a side-n triangle patch that vertex (i, j) is assigned to:
    the nearest side, ties between consecutive sides going to the earlier
    one and the centre going to ``owner_side``
    """

    distance = (j, n - i - j, i)
    nearest = min(distance)
    sides = [t for t in range(3) if distance[t] == nearest]

    if len(sides) == 3:
        return owner_side

    if len(sides) == 2:

        # {t, t + 1} -> t, and {2, 0} -> 2
        return 2 if sides == [0, 2] else sides[0]

    return sides[0]


def fatten(t: AbstractTrivalentTree, n: int) -> FattenedTree:
    """
    replace every edge of T_n by an n x n grid of squares and every
    trivalent vertex by a side-n patch of the triangular lattice

    :param t: the tree
    :param n: grid width, equal to the level of the tree
    :returns:
    :rtype:

    """

    if t.level != n:

        raise LevelMismatch(f"tree has level {t.level}, not {n}")

    assert n >= 1, f"level {n} must be at least 1"

    owner: List[int] = []
    polygons: List[Tuple[int, ...]] = []

    def new_vertex(o: int) -> int:
        owner.append(o)
        return len(owner) - 1

    sides: Dict[int, List[List[int]]] = {}
    triangle_cells = 0

    for junction in sorted(t.rotation):

        rotation = t.rotation[junction]
        owner_side = rotation.index(t.owner[junction])

        ids = {
            (i, j): new_vertex(rotation[junction_region(n, i, j, owner_side)])
            for j in range(n + 1)
            for i in range(n + 1 - j)
        }

        for j in range(n):
            for i in range(n - j):

                polygons.append((ids[(i, j)], ids[(i + 1, j)], ids[(i, j + 1)]))
                triangle_cells += 1

                if i + j <= n - 2:

                    polygons.append(
                        (ids[(i + 1, j)], ids[(i + 1, j + 1)], ids[(i, j + 1)])
                    )
                    triangle_cells += 1

        sides[junction] = _triangle_sides(n, ids)

    grid_cells = 0
    center_line: Dict[int, List[int]] = {}
    middle = n // 2

    for e, (x, y) in enumerate(t.edges):

        grid: Dict[Tuple[int, int], int] = {}

        # ends glued to junction patches reuse the side vertices
        if x in sides:

            side = sides[x][t.rotation[x].index(e)]

            for k in range(n + 1):
                grid[(0, k)] = side[k]

        if y in sides:

            side = sides[y][t.rotation[y].index(e)]

            for k in range(n + 1):
                grid[(n, k)] = side[n - k]

        for s in range(n + 1):
            for k in range(n + 1):

                if (s, k) not in grid:
                    grid[(s, k)] = new_vertex(e)

        for s in range(n):
            for k in range(n):

                polygons.append(
                    (
                        grid[(s, k)],
                        grid[(s + 1, k)],
                        grid[(s + 1, k + 1)],
                        grid[(s, k + 1)],
                    )
                )
                grid_cells += 1

        center_line[e] = [
            grid[(s, middle)] for s in range(n + 1) if owner[grid[(s, middle)]] == e
        ]

    patch = PolygonPatch(len(owner), polygons)

    inscribed = InscribedTreeMap(
        tree=t,
        vertex_owner=np.array(owner, dtype=np.int64),
        center_line=center_line,
    )

    logger.debug(
        f"A_{n}: {len(owner)} vertices, {grid_cells} squares, {triangle_cells} triangles"
    )

    return FattenedTree(
        n=n,
        tree=t,
        patch=patch,
        inscribed=inscribed,
        grid_cells=grid_cells,
        triangle_cells=triangle_cells,
    )
