import collections
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats
from tqdm import tqdm

from dualtrees.complex.planar_complex import Diagram
from dualtrees.config import dualtrees_config
from dualtrees.constructions.delta import assemble_delta
from dualtrees.constructions.fattened_tree import InscribedTreeMap
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.duality.spanning_tree import (
    bfs_tree,
    dual_tree,
    enumerate_spanning_trees,
    tree_diameter,
    tree_of_dual,
)
from dualtrees.metrics.diameter import diameter, double_sweep
from dualtrees.metrics.metrics_report import metrics_report
from dualtrees.shelling.logarithmic import geodesic_spanning_tree, logarithmic_shelling
from dualtrees.shelling.record import ShellingRecord
from dualtrees.shelling.tunnelling import tunnelling_shelling
from dualtrees.utils.logging import setup_logger
from dualtrees.verification.intersections import intersection_profile
from dualtrees.verification.wilson import wilson_random_spanning_tree

logger = setup_logger(__name__)

_max_seed = 2 ** 31 - 1

# range of the fitted growth exponent of min Diam T + Diam T* that counts as
# quadratic
LOWER_EXPONENT_WINDOW = (1.6, 2.4)


class IntersectionAuditFailed(RuntimeError):
    pass


def fl_lower_bound(
    n: int,
    record: Optional[ShellingRecord] = None,
    inscribed: Optional[InscribedTreeMap] = None,
) -> int:
    """
    n * floor(n / 3). Given a shelling of Delta_n and its inscribed tree
    map, also check that some step meets n + 1 tree edges and that the
    boundary there is at least that long

    :param n: the level
    :param record: optional shelling of Delta_n to audit
    :param inscribed: the inscribed tree map of Delta_n
    :returns:
    :rtype:

    """

    assert n >= 1, f"level {n} must be at least 1"

    bound = n * (n // 3)

    if record is None:
        return bound

    assert inscribed is not None, "auditing a record needs the inscribed map"

    profile = intersection_profile(record, inscribed)

    if profile.max_met < n + 1:

        raise IntersectionAuditFailed(
            f"{record.strategy} shelling meets at most {profile.max_met} tree edges, fewer than {n + 1}"
        )

    step = profile.first_step_meeting(n + 1)

    if profile.boundary[step] < bound:

        raise IntersectionAuditFailed(
            f"boundary length {profile.boundary[step]} at step {step} is below {bound}"
        )

    return bound


@dataclass(frozen=True)
class ShellingAudit:

    strategy: str
    max_boundary: int
    max_met: int
    witness_step: int
    witness_boundary: int


@dataclass
class TheoremReport:

    n: int
    seed: int
    samples: int
    diam_G: int
    diam_Gdual: int
    max_face_degree: int
    boundary_length: int
    fl_lower: int
    sampled_min_tree_sum: int
    wilson_min_tree_sum: int
    sampled_min_chain: int
    chain_violations: int
    short_trees: int = 0
    exhaustive: bool = False
    exhaustive_trees: int = 0
    audits: List[ShellingAudit] = field(default_factory=list)

    @property
    def diam_sum_upper(self) -> int:
        return self.diam_G + self.diam_Gdual

    @property
    def chain_rhs(self) -> int:
        """
        n floor(n/3) - boundary length, which every Diam T + 2 lambda Diam T*
        must reach
        """
        return self.fl_lower - self.boundary_length

    @property
    def intersection_witness(self) -> Optional[Tuple[int, int]]:
        """
        (step, tree edges met) of the weakest audited shelling
        """

        if not self.audits:
            return None

        weakest = min(self.audits, key=lambda a: a.max_met)

        return weakest.witness_step, weakest.max_met

    @property
    def passed(self) -> bool:

        audits_ok = all(
            a.max_met >= self.n + 1 and a.witness_boundary >= self.fl_lower
            for a in self.audits
        )

        return self.chain_violations == 0 and audits_ok

    def to_dict(self) -> dict:

        out = asdict(self)
        out["lambda"] = out.pop("max_face_degree")
        out["diam_sum_upper"] = self.diam_sum_upper
        out["chain_rhs"] = self.chain_rhs
        out["intersection_witness"] = self.intersection_witness
        out["passed"] = self.passed

        return out

    def _output(self) -> pd.Series:

        std_dict = collections.OrderedDict()

        std_dict["n"] = self.n
        std_dict["Diam G + Diam G*"] = self.diam_sum_upper
        std_dict["FL lower bound"] = self.fl_lower
        std_dict["samples"] = self.samples
        std_dict["min Diam T + Diam T*"] = self.sampled_min_tree_sum
        std_dict["Wilson min Diam T + Diam T*"] = self.wilson_min_tree_sum
        std_dict["min Diam T + 2 lambda Diam T*"] = self.sampled_min_chain
        std_dict["chain right side"] = self.chain_rhs
        std_dict["chain violations"] = self.chain_violations

        for a in self.audits:
            std_dict[f"{a.strategy}: edges met"] = a.max_met

        std_dict["passed"] = self.passed

        return pd.Series(data=std_dict, index=std_dict.keys())

    def __repr__(self):

        return self._output().to_frame(name="value").to_string()


def _tree_sums(diagram: Diagram, trees: Sequence[frozenset]) -> np.ndarray:
    """
    (Diam T, Diam T*) per tree
    """

    skeleton = diagram.complex.skeleton()
    dual = DualGraph(diagram)
    out = np.empty((len(trees), 2), dtype=np.int64)

    for i, t in enumerate(trees):

        pair = dual_tree(diagram, t, dual=dual)
        out[i, 0] = tree_diameter(skeleton, pair.tree)
        out[i, 1] = tree_diameter(dual, pair.dual_tree)

    return out


def _sample_chunk(diagram: Diagram, seeds: Sequence[int]) -> np.ndarray:

    skeleton = diagram.complex.skeleton()
    trees = [wilson_random_spanning_tree(skeleton, s) for s in seeds]

    return _tree_sums(diagram, trees)


def sample_tree_diameters(
    diagram: Diagram, samples: int, rng_seed: int, client=None
) -> np.ndarray:
    """
    (Diam T, Diam T*) for Wilson-sampled spanning trees. every sample gets
    its own seed from one master generator, so chunking does not change the
    result

    :param diagram: the diagram
    :param samples: number of trees
    :param rng_seed: master seed
    :param client: optional dask client
    :returns: (samples, 2) array
    :rtype:

    """

    rng = np.random.default_rng(rng_seed)
    seeds = [int(s) for s in rng.integers(_max_seed, size=samples)]

    n_chunks = max(1, int(dualtrees_config.multiprocess.n_sample_workers))
    chunks = [list(c) for c in np.array_split(np.array(seeds, dtype=np.int64), n_chunks) if c.size > 0]

    if client is not None:

        diagram_future = client.scatter(diagram, broadcast=True)
        futures = client.map(_sample_chunk, [diagram_future] * len(chunks), chunks)
        results = client.gather(futures)

        del futures

    else:

        results = [
            _sample_chunk(diagram, c)
            for c in tqdm(chunks, desc="spanning tree samples", disable=len(chunks) < 2)
        ]

    if not results:
        return np.zeros((0, 2), dtype=np.int64)

    return np.concatenate(results)


def _pick_roots(graph, first: int, k: int, rng: np.random.Generator) -> List[int]:
    """
    first, the two ends of a double sweep, then random vertices, k in all
    """

    _, a, b = double_sweep(graph, start=first)

    roots = list(dict.fromkeys([first, a, b]))
    others = rng.permutation(graph.n_vertices)

    for v in others.tolist():

        if len(roots) >= k:
            break

        if v not in roots:
            roots.append(v)

    return roots[:k]


def short_tree_candidates(
    diagram: Diagram, roots: Optional[int] = None, rng_seed: Optional[int] = None
) -> List[frozenset]:
    """
    spanning trees built to keep one side short: breadth-first trees of the
    1-skeleton, and the trees whose dual trees are breadth-first trees of
    G*. roots are the base (outer face for G*), the ends of a double sweep
    and random vertices

    :param diagram: the diagram
    :param roots: roots per side
    :param rng_seed: seed for the random roots
    :returns: distinct primal tree edge id sets
    :rtype:

    """

    roots = dualtrees_config.verification.short_tree_roots if roots is None else roots
    rng_seed = dualtrees_config.verification.seed if rng_seed is None else rng_seed

    assert roots >= 1, f"need at least one root, got {roots}"

    rng = np.random.default_rng(rng_seed)
    skeleton = diagram.complex.skeleton()
    dual = DualGraph(diagram)

    trees = [bfs_tree(skeleton, r) for r in _pick_roots(skeleton, diagram.base, roots, rng)]
    trees += [
        tree_of_dual(diagram, bfs_tree(dual, r), dual=dual).tree
        for r in _pick_roots(dual, dual.root, roots, rng)
    ]

    return list(dict.fromkeys(trees))


def audit_shelling(
    n: int, record: ShellingRecord, inscribed: InscribedTreeMap
) -> ShellingAudit:

    profile = intersection_profile(record, inscribed)

    if profile.max_met >= n + 1:
        step = profile.first_step_meeting(n + 1)
    else:
        step = profile.witness_step

    return ShellingAudit(
        strategy=record.strategy,
        max_boundary=record.max_boundary,
        max_met=profile.max_met,
        witness_step=step,
        witness_boundary=profile.boundary[step],
    )


def check_theorem(
    n: int,
    samples: Optional[int] = None,
    rng_seed: Optional[int] = None,
    exhaustive: bool = False,
    audit_shellings: Optional[bool] = None,
    client=None,
) -> TheoremReport:
    """
    measure both diameter bounds on Delta_n. Diam G_n + Diam G*_n is exact;
    Diam T + Diam T* is sampled over uniform spanning trees, and every
    sample is checked against Diam T + 2 lambda Diam T* >= n floor(n/3) -
    boundary length. Shellings by tunnelling and by the logarithmic
    strategy are audited for the tree edges their boundaries meet.

    :param n: the level
    :param samples: number of spanning trees
    :param rng_seed: master seed
    :param exhaustive: also enumerate every spanning tree when the
        1-skeleton is small enough
    :param audit_shellings: run the shelling audits, by default up to n = 4
    :param client: optional dask client
    :returns:
    :rtype:

    """

    assert n >= 1, f"level {n} must be at least 1"

    samples = dualtrees_config.verification.samples if samples is None else samples
    rng_seed = dualtrees_config.verification.seed if rng_seed is None else rng_seed
    audit_shellings = n <= 4 if audit_shellings is None else audit_shellings

    assert samples >= 1, f"need at least one sample, got {samples}"

    diagram, inscribed, meta = assemble_delta(n)
    metrics = metrics_report(diagram, client=client)

    lam = metrics.max_face_degree
    bound = fl_lower_bound(n)
    rhs = bound - diagram.boundary_length

    sums = sample_tree_diameters(diagram, samples, rng_seed, client=client)
    wilson_min = int((sums[:, 0] + sums[:, 1]).min())

    short = short_tree_candidates(diagram, rng_seed=rng_seed)
    sums = np.concatenate([sums, _tree_sums(diagram, short)])

    trees_checked = 0

    if exhaustive:

        limit = dualtrees_config.verification.exhaustive_edge_limit

        if diagram.complex.n_edges <= limit:

            every = list(enumerate_spanning_trees(diagram.complex.skeleton()))
            sums = np.concatenate([sums, _tree_sums(diagram, every)])
            trees_checked = len(every)

        else:

            logger.warning(
                f"Delta_{n} has {diagram.complex.n_edges} edges, more than {limit}: no enumeration"
            )

    chain = sums[:, 0] + 2 * lam * sums[:, 1]

    audits: List[ShellingAudit] = []

    if audit_shellings:

        rng = np.random.default_rng(rng_seed)
        tree = wilson_random_spanning_tree(diagram.complex.skeleton(), rng)

        for record in (
            tunnelling_shelling(diagram, dual_tree(diagram, tree)),
            logarithmic_shelling(diagram),
        ):
            audits.append(audit_shelling(n, record, inscribed))

    report = TheoremReport(
        n=n,
        seed=rng_seed,
        samples=samples,
        diam_G=metrics.diam_G,
        diam_Gdual=metrics.diam_Gdual,
        max_face_degree=lam,
        boundary_length=diagram.boundary_length,
        fl_lower=bound,
        sampled_min_tree_sum=int((sums[:, 0] + sums[:, 1]).min()),
        wilson_min_tree_sum=wilson_min,
        sampled_min_chain=int(chain.min()),
        chain_violations=int(np.sum(chain < rhs)),
        short_trees=len(short),
        exhaustive=trees_checked > 0,
        exhaustive_trees=trees_checked,
        audits=audits,
    )

    logger.info(
        f"n={n}: Diam G + Diam G* = {report.diam_sum_upper}, "
        f"min Diam T + Diam T* = {report.sampled_min_tree_sum} over {samples} samples"
    )

    return report


def fit_power_law(xs: Iterable[float], ys: Iterable[float]) -> Tuple[float, float]:
    """
    least-squares fit of log y = a log x + b

    :returns: the exponent a and the prefactor exp(b)
    :rtype:

    """

    x = np.log(np.asarray(list(xs), dtype=float))
    y = np.log(np.asarray(list(ys), dtype=float))

    assert x.size >= 2, "a fit needs at least two points"

    fit = stats.linregress(x, y)

    return float(fit.slope), float(np.exp(fit.intercept))


def constant_stability(values: Iterable[float]) -> float:
    """
    max / min of a family of fitted constants
    """

    v = np.asarray(list(values), dtype=float)

    assert v.size >= 1 and np.all(v > 0), "constants must be positive"

    return float(v.max() / v.min())


def log_shelling_constants(diagram: Diagram, record: Optional[ShellingRecord] = None) -> Dict[str, float]:
    """
    the ratios of a logarithmic shelling's largest boundary to
    (Diam T) log2(1 + area) and to (Diam G)(Diam G*)
    """

    record = logarithmic_shelling(diagram) if record is None else record

    tree = geodesic_spanning_tree(diagram)
    diam_t = tree_diameter(diagram.complex.skeleton(), tree)
    area = diagram.area

    denominator = diam_t * math.log2(1 + area)
    product = diameter(diagram.complex.skeleton()) * diameter(DualGraph(diagram))

    return dict(
        max_boundary=float(record.max_boundary),
        diam_T=float(diam_t),
        area=float(area),
        tree_log_ratio=record.max_boundary / denominator if denominator > 0 else math.nan,
        diameter_product_ratio=record.max_boundary / product if product > 0 else math.nan,
    )


def theorem_table(reports: Iterable[TheoremReport]) -> pd.DataFrame:

    rows = [r.to_dict() for r in reports]

    df = pd.DataFrame(rows).set_index("n")
    df = df[
        [
            "diam_G",
            "diam_Gdual",
            "diam_sum_upper",
            "fl_lower",
            "sampled_min_tree_sum",
            "wilson_min_tree_sum",
            "sampled_min_chain",
            "chain_rhs",
            "chain_violations",
            "passed",
        ]
    ]
    df["upper_over_n"] = df["diam_sum_upper"] / df.index.to_numpy()

    return df


def family_summary(reports: Sequence[TheoremReport]) -> Dict[str, float]:
    """
    stability of (Diam G + Diam G*) / n and the growth exponent of the
    minimum of Diam T + Diam T* over the checked trees, with the exponent
    of the Wilson samples alone next to it
    """

    ns = [r.n for r in reports]

    out = dict(
        upper_stability=constant_stability([r.diam_sum_upper / r.n for r in reports])
    )

    if len(reports) >= 2:

        exponent, prefactor = fit_power_law(ns, [r.sampled_min_tree_sum for r in reports])
        out["lower_exponent"] = exponent
        out["lower_prefactor"] = prefactor
        out["lower_in_window"] = bool(
            LOWER_EXPONENT_WINDOW[0] <= exponent <= LOWER_EXPONENT_WINDOW[1]
        )

        out["wilson_exponent"], _ = fit_power_law(ns, [r.wilson_min_tree_sum for r in reports])

    return out
