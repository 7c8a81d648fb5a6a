from typing import FrozenSet

import numpy as np

from dualtrees.complex.planar_complex import Diagram
from dualtrees.duality.spanning_tree import dual_tree
from dualtrees.shelling.record import ShellingRecord
from dualtrees.shelling.rooted_tree import rooted_dual_tree
from dualtrees.shelling.tunnelling import shell_along
from dualtrees.utils.graph_kernels import bfs_distances, bfs_parents
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


def geodesic_spanning_tree(d: Diagram) -> FrozenSet[int]:
    """
    a BFS tree of the 1-skeleton from the base vertex; distances to the
    base in the tree equal those in the graph

    :param d: the diagram
    :returns: tree edge ids
    :rtype:

    """

    skeleton = d.complex.skeleton()
    indptr, indices, edge_ids = skeleton.csr

    dist, parent_edge = bfs_parents(indptr, indices, edge_ids, np.int64(d.base))

    tree = frozenset(int(e) for e in parent_edge if e >= 0)

    t_indptr, t_indices, _ = skeleton.edge_subgraph(tree).csr
    tree_dist = bfs_distances(t_indptr, t_indices, np.int64(d.base))

    assert np.array_equal(dist, tree_dist), "BFS tree does not keep distances to the base"

    return tree


def logarithmic_shelling(d: Diagram, audit: bool = False) -> ShellingRecord:
    """
    tunnel along the dual of a geodesic spanning tree, always entering the
    lightest unentered subtree first. after a leaf the walk returns to the
    last branching face that still has unentered subtrees, which makes the
    order a depth first traversal with siblings sorted by weight

    :param d: the diagram
    :param audit: check the gallery decomposition after every move
    :returns:
    :rtype:

    """

    pair = dual_tree(d, geodesic_spanning_tree(d))
    rooted = rooted_dual_tree(d, pair)

    weight = rooted.branch_weights()
    position = {
        c: i for cs in rooted.children.values() for i, c in enumerate(cs)
    }

    record = shell_along(
        d,
        pair,
        rooted,
        "log",
        order=lambda c: (weight[c], position[c]),
        audit=audit,
    )

    logger.debug(f"logarithmic shelling on {d}: max boundary {record.max_boundary}")

    return record
