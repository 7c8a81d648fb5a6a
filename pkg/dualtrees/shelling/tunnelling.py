from typing import Callable, FrozenSet, List, Optional

from dualtrees.complex.planar_complex import Diagram
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.duality.spanning_tree import (
    NotAcyclic,
    NotSpanning,
    SpanningTreePair,
    check_spanning_tree,
    tree_diameter,
)
from dualtrees.shelling.record import RecordBuilder, ShellingRecord
from dualtrees.shelling.rooted_tree import RootedTree, rooted_dual_tree
from dualtrees.shelling.state import CellCollapse, ShellingState
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class InvalidPair(ValueError):
    pass


class GalleryViolation(RuntimeError):
    pass


def validate_pair(d: Diagram, pair: SpanningTreePair) -> None:

    try:

        check_spanning_tree(d.complex.skeleton(), pair.tree)

    except (NotSpanning, NotAcyclic) as err:

        raise InvalidPair(f"primal side of the pair is not a spanning tree: {err}")

    if pair.dual_tree != frozenset(range(d.complex.n_edges)) - pair.tree:

        raise InvalidPair("the dual tree is not the complement of the tree")


def tunnelling_bound(d: Diagram, pair: SpanningTreePair) -> int:
    """
    Diam T + 2 lambda Diam T* + boundary length
    """

    diam_t = tree_diameter(d.complex.skeleton(), pair.tree)
    diam_dual = tree_diameter(DualGraph(d), pair.dual_tree)

    return diam_t + 2 * d.max_face_degree * diam_dual + d.boundary_length


def gallery_violations(
    state: ShellingState, tree: FrozenSet[int], path: FrozenSet[int]
) -> List[int]:
    """
    boundary darts off the primal tree whose removed side is not a face of
    the current tunnel path
    """

    complex = state.diagram.complex

    return [
        d
        for d in state.boundary_darts()
        if int(complex.edge_of_dart[d]) not in tree
        and int(complex.face_of_dart[d]) not in path
    ]


def shell_along(
    d: Diagram,
    pair: SpanningTreePair,
    rooted: RootedTree,
    strategy: str,
    order: Optional[Callable[[int], tuple]] = None,
    audit: bool = False,
) -> ShellingRecord:
    """
    walk the rooted dual tree depth first. the first time the walk enters a
    face, that face is collapsed across the edge it was entered by, then
    every pendant edge is stripped before the walk moves on

    :param d: the diagram
    :param pair: the spanning tree pair
    :param rooted: the dual tree hanging from the outer face
    :param strategy: name stored on the record
    :param order: sort key for siblings, embedding order when None
    :param audit: check the gallery decomposition after every move
    :returns:
    :rtype:

    """

    builder = RecordBuilder(d, strategy)
    builder.strip_pendants()

    for f in rooted.preorder(order):

        if f == rooted.root:
            continue

        builder.apply(CellCollapse(edge=rooted.entry_edge[f], face=f))
        builder.strip_pendants(around=builder.state.face_vertices(f))

        if audit:

            path = frozenset(rooted.path_to(f))
            bad = gallery_violations(builder.state, pair.tree, path)

            if bad:

                raise GalleryViolation(
                    f"after entering face {f} the darts {bad} leave the tunnel"
                )

    return builder.finish()


def tunnelling_shelling(
    d: Diagram, pair: SpanningTreePair, audit: bool = False
) -> ShellingRecord:
    """
    shell by tunnelling along the paths of T* from the outer face to its
    leaves, in the cyclic order of the leaves around the root

    :param d: the diagram
    :param pair: spanning tree and dual spanning tree
    :param audit: check the gallery decomposition after every move
    :returns:
    :rtype:

    """

    validate_pair(d, pair)

    record = shell_along(d, pair, rooted_dual_tree(d, pair), "tunnel", audit=audit)

    logger.debug(f"tunnelling on {d}: max boundary {record.max_boundary}")

    return record
