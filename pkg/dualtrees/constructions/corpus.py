from typing import Dict, List, Sequence, Tuple

import numpy as np

from dualtrees.complex.planar_complex import Diagram, PlanarComplex
from dualtrees.complex.polygon_patch import PolygonPatch, outer_face_from_positions
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)

_lattice_steps = dict(
    square=((1, 0), (0, 1)),
    triangular=((1, 0), (0, 1), (1, 1)),
)


def embedded_diagram(
    positions: Sequence[Tuple[float, float]],
    edges: Sequence[Tuple[int, int]],
    base: int = 0,
) -> Diagram:
    """
    the disc diagram of a connected straight-line plane graph; every bounded
    face becomes a 2-cell

    :param positions: vertex coordinates
    :param edges: simple edges
    :param base: base vertex, which must lie on the outer face
    :returns:
    :rtype:

    """

    positions = np.asarray(positions, dtype=float)

    complex = PlanarComplex.from_embedding(positions, edges)

    if complex.n_darts == 0:
        return Diagram(complex, 0, base)

    outer = outer_face_from_positions(complex, positions)

    return Diagram(complex, outer, base)


def lone_edge() -> Diagram:

    return embedded_diagram([(0.0, 0.0), (1.0, 0.0)], [(0, 1)], base=0)


def single_vertex() -> Diagram:

    return Diagram(PlanarComplex([], [], [], n_vertices=1), 0, 0)


def single_polygon(k: int) -> Diagram:
    """
    one k-gon 2-cell, based at vertex 0
    """

    assert k >= 2, f"a polygon needs at least two sides, got {k}"

    diagram, _ = PolygonPatch(k, [tuple(range(k))]).to_diagram(base=0)

    return diagram


def triangle() -> Diagram:
    return single_polygon(3)


def square() -> Diagram:
    return single_polygon(4)


def grid_diagram(rows: int, columns: int) -> Diagram:
    """
    rows x columns unit squares; vertex (x, y) has id y * (columns + 1) + x
    """

    assert rows >= 1 and columns >= 1

    def vid(x: int, y: int) -> int:
        return y * (columns + 1) + x

    polygons = [
        (vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1))
        for y in range(rows)
        for x in range(columns)
    ]

    diagram, _ = PolygonPatch((rows + 1) * (columns + 1), polygons).to_diagram(
        base=0
    )

    return diagram


def square_with_pendant() -> Diagram:
    """
    a unit square with a pendant edge at a corner, based at the leaf
    """

    positions = [(0, 0), (1, 0), (1, 1), (0, 1), (-1, -1)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]

    return embedded_diagram(positions, edges, base=4)


def random_lattice_diagram(
    rng: np.random.Generator, max_edges: int, lattice: str = "square"
) -> Diagram:
    """
    grow a random connected subgraph of the square or triangular lattice
    from the origin, one edge at a time, and take its disc diagram

    :param rng: random generator
    :param max_edges: the edge count is drawn from 1..max_edges
    :param lattice: 'square' or 'triangular'
    :returns:
    :rtype:

    """

    assert max_edges >= 1
    assert lattice in _lattice_steps, f"unknown lattice {lattice}"

    steps = _lattice_steps[lattice]
    target = int(rng.integers(1, max_edges + 1))

    vertices: Dict[Tuple[int, int], int] = {(0, 0): 0}
    chosen: List[Tuple[Tuple[int, int], Tuple[int, int]]] = []
    seen = set()

    def frontier():

        out = []

        for p in vertices:
            for dx, dy in steps:
                for q in ((p[0] + dx, p[1] + dy), (p[0] - dx, p[1] - dy)):

                    key = (min(p, q), max(p, q))

                    if key not in seen:
                        out.append(key)

        return sorted(set(out))

    while len(chosen) < target:

        options = frontier()
        a, b = options[int(rng.integers(len(options)))]
        seen.add((a, b))
        chosen.append((a, b))

        for p in (a, b):
            if p not in vertices:
                vertices[p] = len(vertices)

    positions = [None] * len(vertices)

    for p, i in vertices.items():
        positions[i] = p

    edges = [(vertices[a], vertices[b]) for a, b in chosen]

    diagram = embedded_diagram(positions, edges, base=0)

    # the origin may end up enclosed, rebase to a boundary vertex
    outer = diagram.complex.faces[diagram.outer_face]
    boundary = sorted(set(int(diagram.complex.origin[x]) for x in outer))

    if 0 not in boundary:
        diagram = diagram.rebased(boundary[0])

    return diagram


def standard_corpus() -> Dict[str, Diagram]:
    """
    the named small diagrams
    """

    return {
        "lone_edge": lone_edge(),
        "triangle": triangle(),
        "square": square(),
        "grid_1x2": grid_diagram(1, 2),
        "square_with_pendant": square_with_pendant(),
    }


def random_corpus(count: int, seed: int, max_edges: int = 9) -> List[Diagram]:
    """
    ``count`` random lattice diagrams, alternating square and triangular
    lattices, drawn from a single seeded generator
    """

    rng = np.random.default_rng(seed)

    corpus = [
        random_lattice_diagram(
            rng, max_edges, lattice="square" if i % 2 == 0 else "triangular"
        )
        for i in range(count)
    ]

    logger.debug(f"random corpus of {count} diagrams with at most {max_edges} edges")

    return corpus
