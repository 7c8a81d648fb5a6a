from dualtrees.constructions.corpus import (
    embedded_diagram,
    grid_diagram,
    lone_edge,
    random_corpus,
    random_lattice_diagram,
    single_polygon,
    single_vertex,
    square,
    square_with_pendant,
    standard_corpus,
    triangle,
)
from dualtrees.constructions.delta import (
    DeltaConstruction,
    DeltaMetadata,
    assemble_delta,
    build_delta,
    max_degrees,
)
from dualtrees.constructions.fattened_tree import (
    FattenedTree,
    InscribedTreeMap,
    LevelMismatch,
    boundary_length_formula,
    fatten,
)
from dualtrees.constructions.pentagon_annulus import (
    KTooSmall,
    PentagonAnnulus,
    pentagon_annulus,
)
from dualtrees.constructions.trivalent_tree import (
    AbstractTrivalentTree,
    trivalent_tree,
)

__all__ = [
    "AbstractTrivalentTree",
    "DeltaConstruction",
    "DeltaMetadata",
    "FattenedTree",
    "InscribedTreeMap",
    "KTooSmall",
    "LevelMismatch",
    "PentagonAnnulus",
    "assemble_delta",
    "boundary_length_formula",
    "build_delta",
    "embedded_diagram",
    "fatten",
    "grid_diagram",
    "lone_edge",
    "max_degrees",
    "pentagon_annulus",
    "random_corpus",
    "random_lattice_diagram",
    "single_polygon",
    "single_vertex",
    "square",
    "square_with_pendant",
    "standard_corpus",
    "triangle",
    "trivalent_tree",
]
