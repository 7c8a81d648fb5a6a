from dualtrees.metrics.diameter import (
    all_eccentricities,
    certified_diameter,
    diameter,
    double_sweep,
    eccentricity,
)
from dualtrees.metrics.metrics_report import (
    MetricsReport,
    metrics_report,
    metrics_table,
)

__all__ = [
    "MetricsReport",
    "all_eccentricities",
    "certified_diameter",
    "diameter",
    "double_sweep",
    "eccentricity",
    "metrics_report",
    "metrics_table",
]
