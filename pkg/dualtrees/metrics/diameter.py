from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from dualtrees.config import dualtrees_config
from dualtrees.utils.edge_graph import Disconnected, EdgeGraph
from dualtrees.utils.graph_kernels import bfs_distances, eccentricities
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


def _eccentricity_chunk(csr, sources: np.ndarray) -> np.ndarray:

    indptr, indices, _ = csr

    return eccentricities(indptr, indices, sources)


def all_eccentricities(graph: EdgeGraph, client=None) -> np.ndarray:
    """
    eccentricity of every vertex by BFS from every vertex. with a dask
    client the sources are split into chunks mapped over the workers,
    otherwise the chunks run here with a progress bar

    :param graph: a connected graph
    :param client: optional dask.distributed client
    :returns:
    :rtype:

    """

    graph.require_connected()

    n_chunks = max(1, int(dualtrees_config.multiprocess.n_bfs_workers))

    chunks: List[np.ndarray] = [
        c for c in np.array_split(np.arange(graph.n_vertices, dtype=np.int64), n_chunks) if c.size > 0
    ]

    csr = graph.csr

    if client is not None:

        csr_future = client.scatter(csr, broadcast=True)
        futures = client.map(_eccentricity_chunk, [csr_future] * len(chunks), chunks)
        results = client.gather(futures)

        del futures

    else:

        results = [
            _eccentricity_chunk(csr, c)
            for c in tqdm(chunks, desc="all-pairs BFS", disable=len(chunks) < 2)
        ]

    ecc = np.concatenate(results)

    if np.any(ecc < 0):

        raise Disconnected(f"{graph} is not connected")

    return ecc


def diameter(graph: EdgeGraph, client=None) -> int:
    """
    the exact diameter, by BFS from every vertex
    """

    if graph.n_vertices == 1:

        return 0

    return int(all_eccentricities(graph, client=client).max())


def eccentricity(graph: EdgeGraph, v: int) -> int:

    dist = graph.bfs(v)

    if np.any(dist < 0):

        raise Disconnected(f"{graph} is not connected")

    return int(dist.max())


def double_sweep(graph: EdgeGraph, start: int = 0) -> Tuple[int, int, int]:
    """
    lower bound on the diameter from two farthest-vertex sweeps; exact on
    trees

    :returns: the bound and the two end vertices realising it
    :rtype:

    """

    indptr, indices, _ = graph.csr

    first = bfs_distances(indptr, indices, np.int64(start))

    if np.any(first < 0):

        raise Disconnected(f"{graph} is not connected")

    a = int(np.argmax(first))
    second = bfs_distances(indptr, indices, np.int64(a))
    b = int(np.argmax(second))

    return int(second[b]), a, b


def certified_diameter(graph: EdgeGraph, client=None) -> int:
    """
    double sweep first, then the exact all-pairs value, which is checked
    against the sweep
    """

    lower, _, _ = double_sweep(graph)
    exact = diameter(graph, client=client)

    assert exact >= lower, f"all-pairs diameter {exact} below the sweep bound {lower}"

    logger.debug(f"{graph}: diameter {exact}, sweep bound {lower}")

    return exact
