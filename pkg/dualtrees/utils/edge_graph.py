from typing import Iterable

import numpy as np

from dualtrees.utils.graph_kernels import bfs_distances, csr_from_edges


class Disconnected(ValueError):
    pass


class EdgeGraph(object):
    def __init__(self, n_vertices: int, edges: np.ndarray):
        """
        An undirected multigraph on vertices 0..n_vertices-1 whose edges
        carry stable ids (their row in ``edges``). Parallel edges and loops
        are kept.

        :param n_vertices: number of vertices
        :param edges: (E, 2) array of end vertices
        :returns:
        :rtype:

        """

        self._n_vertices: int = int(n_vertices)
        self._edges: np.ndarray = np.asarray(edges, dtype=np.int64).reshape(
            -1, 2
        )

        if self._edges.size > 0:

            assert (
                self._edges.min() >= 0 and self._edges.max() < self._n_vertices
            ), "edge end points must be vertex indices"

        self._csr = None

    @property
    def n_vertices(self) -> int:
        return self._n_vertices

    @property
    def n_edges(self) -> int:
        return self._edges.shape[0]

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    @property
    def csr(self):
        if self._csr is None:

            self._csr = csr_from_edges(self._n_vertices, self._edges)

        return self._csr

    def degrees(self) -> np.ndarray:

        # a loop counts twice
        return np.bincount(
            self._edges.ravel(), minlength=self._n_vertices
        ).astype(np.int64)

    def neighbors(self, u: int):
        """
        (neighbor, edge id) pairs at u in edge-id order
        """
        indptr, indices, edge_ids = self.csr

        return list(
            zip(
                indices[indptr[u] : indptr[u + 1]].tolist(),
                edge_ids[indptr[u] : indptr[u + 1]].tolist(),
            )
        )

    def bfs(self, source: int) -> np.ndarray:

        indptr, indices, _ = self.csr

        return bfs_distances(indptr, indices, np.int64(source))

    def is_connected(self) -> bool:

        if self._n_vertices <= 1:
            return True

        return bool(np.all(self.bfs(0) >= 0))

    def require_connected(self) -> None:

        if not self.is_connected():

            raise Disconnected(
                f"graph with {self._n_vertices} vertices and {self.n_edges} edges is not connected"
            )

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "EdgeGraph":
        """
        the spanning subgraph keeping only the given edges. edge ids of the
        result are positions in the sorted id list
        """
        ids = np.array(sorted(set(int(e) for e in edge_ids)), dtype=np.int64)

        return EdgeGraph(self._n_vertices, self._edges[ids])

    def is_tree(self) -> bool:

        return self.n_edges == self._n_vertices - 1 and self.is_connected()

    def __repr__(self):

        return f"EdgeGraph(V={self._n_vertices}, E={self.n_edges})"


def union_find_is_acyclic(n_vertices: int, edges: np.ndarray) -> bool:
    """
    True when the edge list has no cycle (loops and repeated parallel edges
    count as cycles)
    """

    parent = list(range(n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:

        ra, rb = find(int(a)), find(int(b))

        if ra == rb:
            return False

        parent[ra] = rb

    return True
