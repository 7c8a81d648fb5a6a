from dualtrees.complex.planar_complex import (
    BaseNotOnBoundary,
    BrokenRotation,
    Diagram,
    NonInvolutiveOpposite,
    NonPlanarEuler,
    OuterFaceQueried,
    PlanarComplex,
    UnsupportedSchemaVersion,
    Walk,
    boundary_walk,
    build_complex,
    face_degree,
)
from dualtrees.complex.polygon_patch import (
    InconsistentOrientation,
    PinchedVertex,
    PolygonPatch,
    outer_face_from_positions,
)
from dualtrees.utils.edge_graph import Disconnected

__all__ = [
    "BaseNotOnBoundary",
    "BrokenRotation",
    "Diagram",
    "Disconnected",
    "InconsistentOrientation",
    "NonInvolutiveOpposite",
    "NonPlanarEuler",
    "OuterFaceQueried",
    "PinchedVertex",
    "PlanarComplex",
    "PolygonPatch",
    "UnsupportedSchemaVersion",
    "Walk",
    "boundary_walk",
    "build_complex",
    "face_degree",
    "outer_face_from_positions",
]
