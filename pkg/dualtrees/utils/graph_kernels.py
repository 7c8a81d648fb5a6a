import numba
import numpy as np

# compiled kernels over CSR adjacency arrays. the adjacency of vertex u is
# indices[indptr[u]:indptr[u + 1]] and the matching edge ids are stored at
# the same positions of edge_ids.


def csr_from_edges(n_vertices: int, edges: np.ndarray):
    """
    build CSR adjacency (indptr, indices, edge_ids) for an undirected
    multigraph given as an (E, 2) array of end vertices. a loop is listed
    twice at its vertex.

    :param n_vertices: number of vertices
    :param edges: (E, 2) integer array
    :returns: indptr, indices, edge_ids
    """

    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)

    n_edges = edges.shape[0]

    heads = np.concatenate([edges[:, 0], edges[:, 1]])
    tails = np.concatenate([edges[:, 1], edges[:, 0]])
    ids = np.concatenate([np.arange(n_edges), np.arange(n_edges)])

    # stable so that each vertex keeps edge-id order
    order = np.argsort(heads, kind="stable")

    indices = tails[order].astype(np.int64)
    edge_ids = ids[order].astype(np.int64)

    counts = np.bincount(heads, minlength=n_vertices)
    indptr = np.zeros(n_vertices + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])

    return indptr, indices, edge_ids


@numba.njit(cache=True)
def bfs_distances(indptr, indices, source):

    n = indptr.size - 1
    dist = -np.ones(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)

    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1

    while head < tail:

        u = queue[head]
        head += 1

        for k in range(indptr[u], indptr[u + 1]):

            w = indices[k]

            if dist[w] < 0:

                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1

    return dist


@numba.njit(cache=True)
def bfs_parents(indptr, indices, edge_ids, source):
    """
    BFS from source scanning adjacency in stored order. returns the
    distance array and, per vertex, the edge id used to reach it (-1 at
    the source and at unreachable vertices)
    """

    n = indptr.size - 1
    dist = -np.ones(n, dtype=np.int64)
    parent_edge = -np.ones(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)

    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1

    while head < tail:

        u = queue[head]
        head += 1

        for k in range(indptr[u], indptr[u + 1]):

            w = indices[k]

            if dist[w] < 0:

                dist[w] = dist[u] + 1
                parent_edge[w] = edge_ids[k]
                queue[tail] = w
                tail += 1

    return dist, parent_edge


@numba.njit(cache=True)
def eccentricities(indptr, indices, sources):
    """
    eccentricity of every source vertex; -1 flags a disconnected graph
    """

    out = np.empty(sources.size, dtype=np.int64)

    for i in range(sources.size):

        dist = bfs_distances(indptr, indices, sources[i])

        if np.any(dist < 0):

            out[i] = -1

        else:

            out[i] = dist.max()

    return out


@numba.njit(cache=True)
def wilson_tree(indptr, indices, edge_ids, n_edges, root, seed):
    """
    uniform spanning tree by loop-erased random walks. the walk from each
    vertex overwrites its exit pointer on revisits, which erases loops.
    returns a boolean mask over edge ids
    """

    np.random.seed(seed)

    n = indptr.size - 1
    in_tree = np.zeros(n, dtype=np.bool_)
    next_edge = -np.ones(n, dtype=np.int64)
    next_vertex = -np.ones(n, dtype=np.int64)
    mask = np.zeros(n_edges, dtype=np.bool_)

    in_tree[root] = True

    for start in range(n):

        u = start

        while not in_tree[u]:

            degree = indptr[u + 1] - indptr[u]
            k = indptr[u] + np.random.randint(0, degree)
            next_edge[u] = edge_ids[k]
            next_vertex[u] = indices[k]
            u = indices[k]

        u = start

        while not in_tree[u]:

            in_tree[u] = True
            mask[next_edge[u]] = True
            u = next_vertex[u]

    return mask
