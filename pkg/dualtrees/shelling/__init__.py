from dualtrees.shelling.exact import TooLargeForExactSearch, exact_filling_length
from dualtrees.shelling.logarithmic import (
    geodesic_spanning_tree,
    logarithmic_shelling,
)
from dualtrees.shelling.record import (
    IncompleteShelling,
    RecordBuilder,
    ShellingRecord,
    replay,
)
from dualtrees.shelling.rooted_tree import (
    RootedTree,
    rooted_dual_tree,
    subtree_weight,
)
from dualtrees.shelling.state import (
    CellCollapse,
    IllegalMove,
    PendantRemoval,
    ShellingMove,
    ShellingState,
    apply_move,
    legal_moves,
)
from dualtrees.shelling.tunnelling import (
    GalleryViolation,
    InvalidPair,
    gallery_violations,
    tunnelling_bound,
    tunnelling_shelling,
)

__all__ = [
    "CellCollapse",
    "GalleryViolation",
    "IllegalMove",
    "IncompleteShelling",
    "InvalidPair",
    "PendantRemoval",
    "RecordBuilder",
    "RootedTree",
    "ShellingMove",
    "ShellingRecord",
    "ShellingState",
    "TooLargeForExactSearch",
    "apply_move",
    "exact_filling_length",
    "gallery_violations",
    "geodesic_spanning_tree",
    "legal_moves",
    "logarithmic_shelling",
    "replay",
    "rooted_dual_tree",
    "subtree_weight",
    "tunnelling_bound",
    "tunnelling_shelling",
]
