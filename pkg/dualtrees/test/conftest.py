import networkx as nx
import pytest
from dask.distributed import Client, LocalCluster

from dualtrees.constructions.corpus import random_corpus, standard_corpus
from dualtrees.constructions.delta import build_delta


def skeleton_graph(d) -> nx.MultiGraph:
    """
    the 1-skeleton as a networkx multigraph, for oracle checks
    """

    g = nx.MultiGraph()
    g.add_nodes_from(range(d.complex.n_vertices))
    g.add_edges_from(map(tuple, d.complex.edge_endpoints().tolist()))

    return g


@pytest.fixture(scope="session")
def as_networkx():

    return skeleton_graph


@pytest.fixture(scope="session")
def client():

    cluster = LocalCluster(n_workers=2, processes=False, threads_per_worker=1)
    client = Client(cluster)

    yield client

    client.close()
    cluster.close()


@pytest.fixture(scope="session")
def corpus():

    return standard_corpus()


@pytest.fixture(scope="session")
def small_random_corpus():

    return random_corpus(50, seed=11, max_edges=11)


@pytest.fixture(scope="session")
def delta_1():

    return build_delta(1)


@pytest.fixture(scope="session")
def delta_2():

    return build_delta(2)


@pytest.fixture(scope="session")
def delta_3():

    return build_delta(3)


@pytest.fixture(scope="session")
def delta_4():

    return build_delta(4)


@pytest.fixture(scope="session")
def delta_5():

    return build_delta(5)
