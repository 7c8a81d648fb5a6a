from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from dualtrees.complex.polygon_patch import PolygonPatch
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


class KTooSmall(ValueError):
    pass


def ring_exponent(k: int) -> int:
    """
    the smallest m >= 3 with k <= 2^m
    """

    if k < 5:

        raise KTooSmall(f"an annulus needs a circuit of length at least 5, got {k}")

    m = 3

    while 2 ** m < k:
        m += 1

    return m


def merged_cells(n_cells: int, n_merges: int) -> List[int]:
    """
    indices of the first-ring cells whose two outer edges are merged,
    spread evenly around the ring
    """

    assert 0 <= n_merges < n_cells or n_merges == 0

    return [(t * n_cells) // n_merges for t in range(n_merges)]


@dataclass
class PentagonAnnulus:
    """
    Concentric rings of pentagons. ``circles[0]`` is the length-k circuit
    (the one glued to the fattened tree) and each later circle has half as
    many vertices, down to the free circuit of length 4 in ``circles[-1]``.
    Every circle is listed in the counterclockwise order of ``circles[0]``.
    """

    k: int
    m: int
    n_vertices: int
    polygons: List[Tuple[int, ...]]
    circles: List[List[int]]

    @property
    def ring_count(self) -> int:
        return len(self.circles) - 1

    @property
    def n_merges(self) -> int:
        return 2 ** self.m - self.k

    @property
    def outer_circuit(self) -> List[int]:
        return self.circles[0]

    @property
    def inner_circuit(self) -> List[int]:
        return self.circles[-1]

    def patch(self) -> PolygonPatch:

        return PolygonPatch(self.n_vertices, self.polygons)


def _ring(
    outer: Sequence[int],
    segments: Sequence[int],
    first_id: int,
) -> Tuple[List[Tuple[int, ...]], List[int]]:

    n_cells = len(segments)
    k = len(outer)
    inner = list(range(first_id, first_id + n_cells))

    polygons = []
    p = 0

    for i, s in enumerate(segments):

        arc = [outer[(p + j) % k] for j in range(s + 1)]
        polygons.append(tuple(arc[::-1]) + (inner[i], inner[(i + 1) % n_cells]))
        p += s

    assert p == k, f"ring segments cover {p} of {k} edges"

    return polygons, inner


def pentagon_annulus(
    k: int,
    outer_circuit: Optional[Sequence[int]] = None,
    first_vertex_id: int = 0,
) -> PentagonAnnulus:
    """
    build D_k. a pentagon has two edges on its outer circle, one on its
    inner circle and two radial edges; a ring of c pentagons halves the
    circle from 2c to c, and rings are added until the free circle has
    length 4. For 2^(m-1) < k < 2^m the first ring merges 2^m - k pairs of
    outer edges, turning those pentagons into squares.

    :param k: length of the glued circuit
    :param outer_circuit: existing vertex ids for that circuit
    :param first_vertex_id: first id for new vertices
    :returns:
    :rtype:

    """

    m = ring_exponent(k)

    if outer_circuit is None:

        outer = list(range(first_vertex_id, first_vertex_id + k))
        first_vertex_id += k

    else:

        outer = list(outer_circuit)

        assert len(outer) == k, f"circuit has {len(outer)} vertices, not {k}"

    n_cells = 2 ** (m - 1)
    merged = set(merged_cells(n_cells, 2 ** m - k))
    segments = [1 if i in merged else 2 for i in range(n_cells)]

    polygons: List[Tuple[int, ...]] = []
    circles = [outer]
    next_id = first_vertex_id

    while True:

        ring, inner = _ring(circles[-1], segments, next_id)
        polygons.extend(ring)
        circles.append(inner)
        next_id += len(inner)

        if len(inner) == 4:
            break

        segments = [2] * (len(inner) // 2)

    annulus = PentagonAnnulus(
        k=k, m=m, n_vertices=next_id, polygons=polygons, circles=circles
    )

    logger.debug(
        f"D_{k}: {annulus.ring_count} rings, {len(polygons)} cells, {annulus.n_merges} merges"
    )

    return annulus
