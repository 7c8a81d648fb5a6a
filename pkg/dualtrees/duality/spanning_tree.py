import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Optional

import numpy as np

from dualtrees.complex.planar_complex import Diagram
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.utils.edge_graph import EdgeGraph, union_find_is_acyclic
from dualtrees.utils.graph_kernels import bfs_distances, bfs_parents


class NotSpanning(ValueError):
    pass


class NotAcyclic(ValueError):
    pass


class NotATree(ValueError):
    pass


@dataclass(frozen=True)
class SpanningTreePair:

    tree: FrozenSet[int]
    dual_tree: FrozenSet[int]

    def tree_graph(self, diagram: Diagram) -> EdgeGraph:

        return diagram.complex.skeleton().edge_subgraph(self.tree)

    def dual_tree_graph(self, dual: DualGraph) -> EdgeGraph:

        return dual.edge_subgraph(self.dual_tree)


def check_spanning_tree(graph: EdgeGraph, edge_ids: Iterable[int]) -> FrozenSet[int]:

    tree = frozenset(int(e) for e in edge_ids)

    if any(e < 0 or e >= graph.n_edges for e in tree):

        raise NotSpanning("edge ids outside the graph")

    if not union_find_is_acyclic(graph.n_vertices, graph.edges[sorted(tree)]):

        raise NotAcyclic(f"{len(tree)} edges contain a cycle")

    if len(tree) != graph.n_vertices - 1:

        raise NotSpanning(
            f"{len(tree)} acyclic edges cannot span {graph.n_vertices} vertices"
        )

    return tree


def dual_tree(d: Diagram, t: Iterable[int], dual: Optional[DualGraph] = None) -> SpanningTreePair:
    """
    pair a spanning tree of the 1-skeleton with the dual spanning tree made
    of the duals of the edges outside it
    """

    tree = check_spanning_tree(d.complex.skeleton(), t)

    dual = DualGraph(d) if dual is None else dual

    complement = frozenset(range(d.complex.n_edges)) - tree

    # planar duality makes the complement a spanning tree of the dual
    assert dual.edge_subgraph(complement).is_tree(), "dual complement is not a tree"

    return SpanningTreePair(tree=tree, dual_tree=complement)


def tree_of_dual(d: Diagram, s: Iterable[int], dual: Optional[DualGraph] = None) -> SpanningTreePair:
    """
    the pair whose dual tree is s: the primal tree is made of the edges
    whose duals lie outside s
    """

    dual = DualGraph(d) if dual is None else dual

    dual_ids = check_spanning_tree(dual, s)

    return dual_tree(d, frozenset(range(d.complex.n_edges)) - dual_ids, dual=dual)


def bfs_tree(graph: EdgeGraph, root: int) -> FrozenSet[int]:
    """
    the edge ids of a breadth-first spanning tree from root, which keeps
    every distance to root

    :param graph: a connected multigraph
    :param root: the start vertex
    :returns:
    :rtype:

    """

    indptr, indices, edge_ids = graph.csr

    dist, parent_edge = bfs_parents(indptr, indices, edge_ids, np.int64(root))

    if np.any(dist < 0):

        raise NotSpanning(f"{graph} is not connected")

    return frozenset(int(e) for e in parent_edge if e >= 0)


def tree_diameter(graph: EdgeGraph, edge_ids: Optional[Iterable[int]] = None) -> int:
    """
    diameter of a tree by two farthest-vertex sweeps

    :param graph: the tree, or its ambient graph when edge_ids is given
    :param edge_ids: the tree edges inside graph
    :returns:
    :rtype:

    """

    tree = graph if edge_ids is None else graph.edge_subgraph(edge_ids)

    if not tree.is_tree():

        raise NotATree(f"{tree} is not a tree")

    if tree.n_vertices == 1:
        return 0

    indptr, indices, _ = tree.csr

    first = bfs_distances(indptr, indices, np.int64(0))
    far = int(np.argmax(first))
    second = bfs_distances(indptr, indices, np.int64(far))

    return int(second.max())


def enumerate_spanning_trees(graph: EdgeGraph) -> Iterator[FrozenSet[int]]:
    """
    every spanning tree of a small multigraph, as edge id sets in
    lexicographic order
    """

    k = graph.n_vertices - 1

    for combo in itertools.combinations(range(graph.n_edges), k):

        if union_find_is_acyclic(graph.n_vertices, graph.edges[list(combo)]):

            yield frozenset(combo)


def count_spanning_trees(graph: EdgeGraph) -> int:
    """
    Matrix-Tree count: the determinant of the reduced Laplacian. parallel
    edges add multiplicity, loops are ignored
    """

    n = graph.n_vertices

    if n == 1:
        return 1

    laplacian = np.zeros((n, n))

    for a, b in graph.edges:

        if a == b:
            continue

        laplacian[a, a] += 1
        laplacian[b, b] += 1
        laplacian[a, b] -= 1
        laplacian[b, a] -= 1

    sign, logdet = np.linalg.slogdet(laplacian[1:, 1:])

    if sign <= 0:
        return 0

    return int(round(np.exp(logdet)))
