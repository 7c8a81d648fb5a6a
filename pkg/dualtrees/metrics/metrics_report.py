import collections
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from dualtrees.complex.planar_complex import Diagram
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.metrics.diameter import certified_diameter, eccentricity
from dualtrees.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class MetricsReport:

    diam_G: int
    diam_Gdual: int
    max_degree_G: int
    max_degree_Gdual: int
    boundary_length: int
    max_face_degree: int
    area: int
    base_eccentricity: int

    @property
    def diam_sum(self) -> int:
        return self.diam_G + self.diam_Gdual

    def to_dict(self) -> dict:

        out = asdict(self)
        out["lambda"] = out.pop("max_face_degree")

        return out

    def _output(self) -> pd.Series:

        std_dict = collections.OrderedDict()

        std_dict["Diam G"] = self.diam_G
        std_dict["Diam G*"] = self.diam_Gdual
        std_dict["max deg G"] = self.max_degree_G
        std_dict["max deg G*"] = self.max_degree_Gdual
        std_dict["boundary length"] = self.boundary_length
        std_dict["lambda"] = self.max_face_degree
        std_dict["area"] = self.area
        std_dict["ecc(base)"] = self.base_eccentricity

        return pd.Series(data=std_dict, index=std_dict.keys())

    def __repr__(self):

        return self._output().to_frame(name="value").to_string()


def metrics_report(d: Diagram, client=None) -> MetricsReport:
    """
    exact diameters and degree statistics of a diagram and its dual

    :param d: the diagram
    :param client: optional dask client for the all-pairs BFS
    :returns:
    :rtype:

    """

    skeleton = d.complex.skeleton()
    dual = DualGraph(d)

    primal_degrees = skeleton.degrees()
    dual_degrees = dual.degrees()

    report = MetricsReport(
        diam_G=certified_diameter(skeleton, client=client),
        diam_Gdual=certified_diameter(dual, client=client),
        max_degree_G=int(primal_degrees.max()) if primal_degrees.size else 0,
        max_degree_Gdual=int(dual_degrees.max()) if dual_degrees.size else 0,
        boundary_length=d.boundary_length,
        max_face_degree=d.max_face_degree,
        area=d.area,
        base_eccentricity=eccentricity(skeleton, d.base),
    )

    logger.debug(f"metrics of {d}: Diam G={report.diam_G} Diam G*={report.diam_Gdual}")

    return report


def metrics_table(
    reports: Iterable[MetricsReport], index: Optional[Iterable] = None
) -> pd.DataFrame:
    """
    one row per report, with Diam G + Diam G* and its ratio to the index
    when the index is numeric
    """

    df = pd.DataFrame([r.to_dict() for r in reports], index=index)
    df["diam_sum"] = df["diam_G"] + df["diam_Gdual"]

    if index is not None and np.issubdtype(df.index.dtype, np.number):

        df["diam_sum_over_n"] = df["diam_sum"] / df.index.to_numpy()

    return df
