from dualtrees.verification.intersections import (
    IntersectionProfile,
    MapMismatch,
    intersection_profile,
    separation_profile,
)
from dualtrees.verification.theorem import (
    IntersectionAuditFailed,
    ShellingAudit,
    TheoremReport,
    audit_shelling,
    check_theorem,
    constant_stability,
    family_summary,
    fit_power_law,
    fl_lower_bound,
    log_shelling_constants,
    sample_tree_diameters,
    short_tree_candidates,
    theorem_table,
)
from dualtrees.verification.wilson import wilson_random_spanning_tree, wilson_samples

__all__ = [
    "IntersectionAuditFailed",
    "IntersectionProfile",
    "MapMismatch",
    "ShellingAudit",
    "TheoremReport",
    "audit_shelling",
    "check_theorem",
    "constant_stability",
    "family_summary",
    "fit_power_law",
    "fl_lower_bound",
    "intersection_profile",
    "log_shelling_constants",
    "sample_tree_diameters",
    "separation_profile",
    "short_tree_candidates",
    "theorem_table",
    "wilson_random_spanning_tree",
    "wilson_samples",
]
