from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from dualtrees.utils.edge_graph import EdgeGraph
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass
class AbstractTrivalentTree:
    """
    The tree T_n: T_0 is a lone edge and T_n wedges three copies of
    T_(n-1) at a leaf of each. ``rotation`` lists the edges around every
    trivalent vertex in counterclockwise order and ``owner`` gives, for each
    vertex, the single edge whose half-open copy contains it.
    """

    level: int
    n_vertices: int
    edges: List[Tuple[int, int]]
    rotation: Dict[int, List[int]]
    wedges: List[int]
    owner: List[int] = field(default_factory=list)
    distinguished_edge: int = 0

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def graph(self) -> EdgeGraph:
        return EdgeGraph(self.n_vertices, np.array(self.edges, dtype=np.int64))

    @property
    def degrees(self) -> np.ndarray:
        return self.graph.degrees()

    @property
    def leaves(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.degrees == 1)]

    @property
    def trivalent_vertices(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.degrees == 3)]

    def owned_vertices(self, e: int) -> List[int]:

        return [v for v, o in enumerate(self.owner) if o == e]

    def edge_distance(self) -> np.ndarray:
        """
        distances between edges in the line graph
        """

        n = self.n_edges
        incident: Dict[int, List[int]] = {}

        for e, (a, b) in enumerate(self.edges):

            incident.setdefault(a, []).append(e)
            incident.setdefault(b, []).append(e)

        line_edges = []

        for es in incident.values():

            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    line_edges.append((es[i], es[j]))

        line = EdgeGraph(n, np.array(line_edges, dtype=np.int64).reshape(-1, 2))

        return np.stack([line.bfs(e) for e in range(n)])


def _level(n: int, rng: Optional[np.random.Generator]):

    if n == 0:

        return 2, [(0, 1)], {}, []

    copies = [_level(n - 1, rng) for _ in range(3)] if rng is not None else [
        _level(n - 1, None)
    ] * 3

    new_id: Dict[Tuple[int, int], int] = {}
    edges: List[Tuple[int, int]] = []
    rotation: Dict[int, List[int]] = {}
    wedges: List[int] = []
    wedge_edges: List[int] = []
    counter = 0
    wedge = None

    for c, (nv, sub_edges, sub_rotation, sub_wedges) in enumerate(copies):

        degree = np.bincount(np.array(sub_edges).ravel(), minlength=nv)
        leaves = np.flatnonzero(degree == 1)

        if rng is None:

            # canonical: the first-indexed leaf
            chosen = int(leaves[0])

        else:

            chosen = int(rng.choice(leaves))

        for v in range(nv):

            if v == chosen and wedge is not None:

                new_id[(c, v)] = wedge

            else:

                new_id[(c, v)] = counter
                counter += 1

        if wedge is None:

            wedge = new_id[(c, chosen)]

        offset = len(edges)

        for a, b in sub_edges:

            edges.append((new_id[(c, a)], new_id[(c, b)]))

        for v, rot in sub_rotation.items():

            rotation[new_id[(c, v)]] = [offset + e for e in rot]

        wedges.extend(new_id[(c, v)] for v in sub_wedges)

        leaf_edge = [
            e for e, (a, b) in enumerate(sub_edges) if chosen in (a, b)
        ][0]
        wedge_edges.append(offset + leaf_edge)

    rotation[wedge] = wedge_edges
    wedges.append(wedge)

    return counter, edges, rotation, wedges


def _half_open_owner(n_vertices: int, edges: List[Tuple[int, int]], root_edge: int) -> List[int]:

    owner = [-1] * n_vertices
    a, b = edges[root_edge]
    owner[a] = root_edge
    owner[b] = root_edge

    graph = EdgeGraph(n_vertices, np.array(edges, dtype=np.int64))
    stack = [a, b]

    while stack:

        u = stack.pop()

        for w, e in graph.neighbors(u):

            if owner[w] < 0:

                # every other edge owns its endpoint away from the root edge
                owner[w] = e
                stack.append(w)

    return owner


def trivalent_tree(n: int, choice_seed: Optional[int] = None) -> AbstractTrivalentTree:
    """
    build T_n. without a seed the first-indexed leaf of each copy is used
    for the wedge; with a seed the leaves are drawn at random

    :param n: the level
    :param choice_seed: seed for the leaf choices
    :returns:
    :rtype:

    """

    assert n >= 0, f"level {n} must be non-negative"

    rng = None if choice_seed is None else np.random.default_rng(choice_seed)

    n_vertices, edges, rotation, wedges = _level(n, rng)

    tree = AbstractTrivalentTree(
        level=n,
        n_vertices=n_vertices,
        edges=edges,
        rotation=rotation,
        wedges=wedges,
        owner=_half_open_owner(n_vertices, edges, 0),
        distinguished_edge=0,
    )

    logger.debug(
        f"T_{n}: {tree.n_edges} edges, {len(tree.leaves)} leaves, {len(wedges)} wedges"
    )

    return tree
