from dualtrees.duality.dual_graph import DualGraph, dual_graph
from dualtrees.duality.spanning_tree import (
    NotATree,
    NotAcyclic,
    NotSpanning,
    SpanningTreePair,
    bfs_tree,
    count_spanning_trees,
    dual_tree,
    enumerate_spanning_trees,
    tree_diameter,
    tree_of_dual,
)

__all__ = [
    "DualGraph",
    "NotATree",
    "NotAcyclic",
    "NotSpanning",
    "SpanningTreePair",
    "bfs_tree",
    "count_spanning_trees",
    "dual_graph",
    "dual_tree",
    "enumerate_spanning_trees",
    "tree_diameter",
    "tree_of_dual",
]
