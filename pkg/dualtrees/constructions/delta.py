from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from dualtrees.complex.planar_complex import SCHEMA_VERSION, Diagram
from dualtrees.complex.polygon_patch import PolygonPatch
from dualtrees.constructions.fattened_tree import (
    FattenedTree,
    InscribedTreeMap,
    boundary_length_formula,
    fatten,
)
from dualtrees.constructions.pentagon_annulus import PentagonAnnulus, pentagon_annulus
from dualtrees.constructions.trivalent_tree import trivalent_tree
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass
class DeltaMetadata:

    n: int
    seed: Optional[int]
    p_n: int
    max_face_degree: int
    boundary_length: int
    interface_length: int
    ring_count: int
    area: int
    n_vertices: int
    n_edges: int

    def to_dict(self) -> dict:

        out = asdict(self)

        # the sidecar calls the maximal cell degree lambda
        out["lambda"] = out.pop("max_face_degree")
        out["version"] = SCHEMA_VERSION

        return out


@dataclass
class DeltaConstruction:
    """
    all the pieces of Delta_n: the fattened tree A_n, the skirt
    B_n = D_(p_n) glued around it, the resulting diagram and the inscribed
    tree map extended to every vertex of the diagram
    """

    diagram: Diagram
    inscribed: InscribedTreeMap
    metadata: DeltaMetadata
    fattened: FattenedTree
    skirt: PentagonAnnulus

    @property
    def interface(self):
        """
        the circuit along which A_n and B_n are glued
        """
        return self.skirt.outer_circuit


def build_delta(n: int, choice_seed: Optional[int] = None) -> DeltaConstruction:

    assert n >= 1, f"level {n} must be at least 1"

    tree = trivalent_tree(n, choice_seed=choice_seed)
    fattened = fatten(tree, n)

    circuit = fattened.boundary_circuit()
    p_n = boundary_length_formula(n)

    assert len(circuit) == p_n, f"boundary of A_{n} has length {len(circuit)}, not {p_n}"

    skirt = pentagon_annulus(
        p_n, outer_circuit=circuit, first_vertex_id=fattened.n_vertices
    )

    patch = PolygonPatch(
        skirt.n_vertices, fattened.patch.polygons + skirt.polygons
    )

    # the base is the first vertex of the free circuit of the skirt
    diagram, _ = patch.to_diagram(base=skirt.inner_circuit[0])

    inscribed = fattened.inscribed.extended(diagram.complex.n_vertices)

    metadata = DeltaMetadata(
        n=n,
        seed=choice_seed,
        p_n=p_n,
        max_face_degree=diagram.max_face_degree,
        boundary_length=diagram.boundary_length,
        interface_length=len(circuit),
        ring_count=skirt.ring_count,
        area=diagram.area,
        n_vertices=diagram.complex.n_vertices,
        n_edges=diagram.complex.n_edges,
    )

    logger.info(
        f"built Delta_{n}: V={metadata.n_vertices} E={metadata.n_edges} "
        f"area={metadata.area} boundary={metadata.boundary_length} rings={metadata.ring_count}"
    )

    return DeltaConstruction(
        diagram=diagram,
        inscribed=inscribed,
        metadata=metadata,
        fattened=fattened,
        skirt=skirt,
    )


def assemble_delta(
    n: int, choice_seed: Optional[int] = None
) -> Tuple[Diagram, InscribedTreeMap, DeltaMetadata]:
    """
    build Delta_n by gluing the boundary of the fattened tree A_n to the
    outer circuit of the skirt D_(p_n)

    :param n: the level
    :param choice_seed: seed for the leaf choices of T_n
    :returns: the diagram, its inscribed tree map and the metadata
    :rtype:

    """

    construction = build_delta(n, choice_seed=choice_seed)

    return construction.diagram, construction.inscribed, construction.metadata


def max_degrees(d: Diagram) -> Tuple[int, int]:
    """
    largest vertex degree of the 1-skeleton and of the dual graph
    """

    complex = d.complex

    primal = int(complex.vertex_degrees().max()) if complex.n_darts else 0
    dual = int(np.max(complex.face_degree_table())) if complex.n_darts else 0

    return primal, dual
