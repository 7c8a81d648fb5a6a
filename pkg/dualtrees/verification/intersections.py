from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from dualtrees.complex.planar_complex import Diagram
from dualtrees.constructions.fattened_tree import InscribedTreeMap
from dualtrees.shelling.record import ShellingRecord
from dualtrees.utils.graph_kernels import bfs_distances
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class MapMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionProfile:

    counts: Tuple[int, ...]
    boundary: Tuple[int, ...]

    @property
    def max_met(self) -> int:
        return max(self.counts)

    @property
    def witness_step(self) -> int:
        """
        the first step meeting the most tree edges
        """
        return self.counts.index(self.max_met)

    @property
    def witness_boundary(self) -> int:
        return self.boundary[self.witness_step]

    def first_step_meeting(self, k: int) -> int:

        return next(i for i, c in enumerate(self.counts) if c >= k)


def _check_map(diagram: Diagram, inscribed: InscribedTreeMap) -> None:

    if inscribed.n_vertices != diagram.complex.n_vertices:

        raise MapMismatch(
            f"map covers {inscribed.n_vertices} vertices, diagram has {diagram.complex.n_vertices}"
        )


def intersection_profile(
    record: ShellingRecord, inscribed: InscribedTreeMap, diagram: Diagram = None
) -> IntersectionProfile:
    """
    replay a shelling and count, after every move, the distinct tree edges
    whose territory the boundary walk passes through

    :param record: a shelling of Delta_n
    :param inscribed: the inscribed tree map of Delta_n
    :param diagram: the diagram, when the record carries none
    :returns:
    :rtype:

    """

    diagram = record.diagram if diagram is None else diagram

    if diagram is None:

        raise MapMismatch("the record carries no diagram")

    _check_map(diagram, inscribed)

    counts: List[int] = []
    boundary: List[int] = []

    for state in record.states(diagram):

        counts.append(len(inscribed.edges_met(state.boundary_vertices())))
        boundary.append(state.boundary_length)

    profile = IntersectionProfile(counts=tuple(counts), boundary=tuple(boundary))

    logger.debug(
        f"{record.strategy}: meets {profile.max_met} tree edges at step {profile.witness_step}"
    )

    return profile


def separation_profile(
    diagram: Diagram, inscribed: InscribedTreeMap
) -> Dict[Tuple[int, int], int]:
    """
    least distance in the 1-skeleton between the centre lines of every pair
    of tree edges sharing no tree vertex

    :returns: (e, f) -> distance, e < f
    :rtype:

    """

    _check_map(diagram, inscribed)

    tree = inscribed.tree
    ends = [set(e) for e in tree.edges]

    indptr, indices, _ = diagram.complex.skeleton().csr

    n = diagram.complex.n_vertices
    out: Dict[Tuple[int, int], int] = {}

    for e in range(tree.n_edges):

        line = np.array(inscribed.center_line.get(e, []), dtype=np.int64)

        if line.size == 0:
            continue

        dist = _multi_source(indptr, indices, line, n)

        for f in range(e + 1, tree.n_edges):

            if ends[e] & ends[f]:
                continue

            other = inscribed.center_line.get(f, [])

            if other:
                out[(e, f)] = int(dist[other].min())

    return out


def _multi_source(indptr, indices, sources: np.ndarray, n: int) -> np.ndarray:

    # a virtual vertex n with arcs to every source
    extra = sources.size

    new_indptr = np.concatenate([indptr, [indptr[-1] + extra]])
    new_indices = np.concatenate([indices, sources])

    dist = bfs_distances(new_indptr, new_indices, np.int64(n))

    return dist[:n] - 1
