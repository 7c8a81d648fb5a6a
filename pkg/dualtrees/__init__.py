from dualtrees.config import dualtrees_config
from dualtrees.complex import Diagram, PlanarComplex, PolygonPatch, boundary_walk
from dualtrees.constructions import assemble_delta, build_delta, standard_corpus
from dualtrees.duality import DualGraph, dual_tree
from dualtrees.metrics import metrics_report
from dualtrees.shelling import (
    exact_filling_length,
    logarithmic_shelling,
    tunnelling_shelling,
)
from dualtrees.verification import check_theorem

__all__ = [
    "Diagram",
    "DualGraph",
    "PlanarComplex",
    "PolygonPatch",
    "assemble_delta",
    "boundary_walk",
    "build_delta",
    "check_theorem",
    "dual_tree",
    "dualtrees_config",
    "exact_filling_length",
    "logarithmic_shelling",
    "metrics_report",
    "standard_corpus",
    "tunnelling_shelling",
]

try:

    from importlib.metadata import PackageNotFoundError, version

    __version__ = version("dualtrees")

except PackageNotFoundError:

    __version__ = "unknown"

from dualtrees.utils.logging import (
    activate_warnings,
    silence_warnings,
    update_logging_level,
)
