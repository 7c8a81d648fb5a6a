from typing import FrozenSet, List, Union

import numpy as np

from dualtrees.utils.edge_graph import EdgeGraph
from dualtrees.utils.graph_kernels import wilson_tree

_max_seed = 2 ** 31 - 1


def wilson_random_spanning_tree(
    graph: EdgeGraph, rng_seed: Union[int, np.random.Generator]
) -> FrozenSet[int]:
    """
    a uniformly random spanning tree by loop-erased random walks rooted at
    vertex 0. Parallel edges weight the walk, so every spanning tree of the
    multigraph, as a set of edge ids, is equally likely.

    :param graph: a connected graph
    :param rng_seed: an integer seed or a generator to draw the seed from
    :returns: tree edge ids
    :rtype:

    """

    graph.require_connected()

    if isinstance(rng_seed, np.random.Generator):

        seed = int(rng_seed.integers(_max_seed))

    else:

        seed = int(rng_seed)

    indptr, indices, edge_ids = graph.csr

    mask = wilson_tree(
        indptr, indices, edge_ids, np.int64(graph.n_edges), np.int64(0), np.int64(seed)
    )

    return frozenset(int(e) for e in np.flatnonzero(mask))


def wilson_samples(graph: EdgeGraph, count: int, seed: int) -> List[FrozenSet[int]]:
    """
    ``count`` independent trees, each seeded from one master generator
    """

    rng = np.random.default_rng(seed)

    return [wilson_random_spanning_tree(graph, rng) for _ in range(count)]
