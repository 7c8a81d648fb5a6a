import numpy as np

from dualtrees.complex.planar_complex import SCHEMA_VERSION, Diagram
from dualtrees.utils.edge_graph import EdgeGraph


class DualGraph(EdgeGraph):
    def __init__(self, diagram: Diagram):
        """
        The dual of a diagram: one vertex per face (the outer face
        included) and one edge per primal edge, joining the faces on its two
        sides. Dual edge i is dual to primal edge i. Bridges give loops and
        edges sharing two faces give parallel edges; both are kept.

        :param diagram:
        :returns:
        :rtype:

        """

        complex = diagram.complex

        if complex.n_edges > 0:

            edges = complex.face_of_dart[complex.edge_darts]

        else:

            edges = np.zeros((0, 2), dtype=np.int64)

        super(DualGraph, self).__init__(complex.n_faces, edges)

        self._root: int = diagram.outer_face

    @property
    def root(self) -> int:
        """
        the dual vertex of the outer face
        """
        return self._root

    def to_dict(self) -> dict:

        return dict(
            version=SCHEMA_VERSION,
            n_vertices=self.n_vertices,
            root=self._root,
            edges=self.edges.tolist(),
            dual_of=list(range(self.n_edges)),
        )


def dual_graph(d: Diagram) -> DualGraph:

    return DualGraph(d)
