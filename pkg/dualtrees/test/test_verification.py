import collections
import json
import math

import numpy as np
import pytest
from scipy import stats

from dualtrees.constructions.corpus import grid_diagram, square, triangle
from dualtrees.duality import DualGraph, dual_tree, enumerate_spanning_trees, tree_diameter
from dualtrees.metrics import diameter
from dualtrees.shelling import geodesic_spanning_tree, logarithmic_shelling, tunnelling_shelling
from dualtrees.verification import (
    MapMismatch,
    check_theorem,
    constant_stability,
    family_summary,
    fit_power_law,
    fl_lower_bound,
    intersection_profile,
    log_shelling_constants,
    separation_profile,
    short_tree_candidates,
    theorem_table,
    wilson_random_spanning_tree,
    wilson_samples,
)

_draws = 30000


def _frequencies(d, seed):

    skeleton = d.complex.skeleton()
    counts = collections.Counter(wilson_samples(skeleton, _draws, seed))
    trees = list(enumerate_spanning_trees(skeleton))

    assert set(counts) <= set(trees)

    return np.array([counts[t] for t in trees])


@pytest.mark.parametrize("factory", [triangle, square])
def test_wilson_is_uniform_on_cycles(factory):

    observed = _frequencies(factory(), seed=1234)

    p = 1 / observed.size
    sigma = math.sqrt(_draws * p * (1 - p))

    assert np.all(np.abs(observed - _draws * p) < 4 * sigma)


def test_wilson_is_uniform_on_the_grid():

    observed = _frequencies(grid_diagram(2, 2), seed=99)

    assert observed.size == 192
    assert stats.chisquare(observed).pvalue > 1e-4


def test_wilson_is_deterministic():

    g = grid_diagram(2, 3).complex.skeleton()

    assert wilson_random_spanning_tree(g, 5) == wilson_random_spanning_tree(g, 5)
    assert wilson_samples(g, 10, 3) == wilson_samples(g, 10, 3)


def test_fl_lower_bound_formula():

    assert fl_lower_bound(1) == 0
    assert fl_lower_bound(2) == 0
    assert fl_lower_bound(3) == 3
    assert fl_lower_bound(6) == 12


def _shellings(construction, seed=0):

    d = construction.diagram
    tree = wilson_random_spanning_tree(d.complex.skeleton(), seed)

    return [tunnelling_shelling(d, dual_tree(d, tree)), logarithmic_shelling(d)]


@pytest.mark.parametrize("level", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_boundary_meets_enough_tree_edges(level, request):

    construction = request.getfixturevalue(f"delta_{level}")

    for record in _shellings(construction):

        profile = intersection_profile(record, construction.inscribed)

        assert profile.max_met >= level + 1, record.strategy

        step = profile.first_step_meeting(level + 1)

        assert profile.boundary[step] >= level * (level // 3)

        # the audit raises on failure
        assert fl_lower_bound(level, record, construction.inscribed) == level * (level // 3)


def test_intersection_profile_needs_a_matching_map(delta_1):

    d = square()
    record = logarithmic_shelling(d)

    with pytest.raises(MapMismatch):

        intersection_profile(record, delta_1.inscribed)


@pytest.mark.parametrize("level", [2, 3])
def test_separation(level, delta_2, delta_3):

    construction = {2: delta_2, 3: delta_3}[level]

    distances = separation_profile(construction.diagram, construction.inscribed)

    assert distances
    assert min(distances.values()) >= level


def test_check_theorem():

    report = check_theorem(1, samples=20, rng_seed=3)

    assert report.passed
    assert report.chain_violations == 0
    assert report.fl_lower == 0
    assert report.samples == 20
    assert len(report.audits) == 2
    assert report.intersection_witness[1] >= 2
    assert report.sampled_min_chain >= report.chain_rhs

    again = check_theorem(1, samples=20, rng_seed=3)

    assert json.dumps(report.to_dict(), sort_keys=True) == json.dumps(again.to_dict(), sort_keys=True)

    print(report)


def test_check_theorem_in_parallel(client):

    serial = check_theorem(2, samples=12, rng_seed=8, audit_shellings=False)
    parallel = check_theorem(2, samples=12, rng_seed=8, audit_shellings=False, client=client)

    assert serial.to_dict() == parallel.to_dict()
    assert serial.to_dict()["lambda"] == 5

    table = theorem_table([check_theorem(1, samples=5, rng_seed=1), serial])

    assert list(table.index) == [1, 2]
    assert "upper_over_n" in table.columns

    summary = family_summary([check_theorem(1, samples=5, rng_seed=1), serial])

    assert "lower_exponent" in summary


def test_exhaustive_check_is_skipped_when_too_large():

    report = check_theorem(1, samples=3, rng_seed=2, exhaustive=True, audit_shellings=False)

    assert not report.exhaustive
    assert report.exhaustive_trees == 0


def test_fits():

    exponent, prefactor = fit_power_law([1, 2, 4], [3, 12, 48])

    assert exponent == pytest.approx(2.0)
    assert prefactor == pytest.approx(3.0)

    assert constant_stability([1.0, 2.0, 1.5]) == pytest.approx(2.0)


def test_log_shelling_constants():

    values = log_shelling_constants(grid_diagram(2, 2))

    assert values["area"] == 4
    assert math.isfinite(values["tree_log_ratio"])
    assert values["diameter_product_ratio"] > 0


def test_short_tree_candidates(corpus, delta_1):

    for d in list(corpus.values()) + [delta_1.diagram]:

        skeleton = d.complex.skeleton()
        dual = DualGraph(d)
        candidates = short_tree_candidates(d, roots=3, rng_seed=5)

        assert candidates[0] == geodesic_spanning_tree(d)
        assert len(set(candidates)) == len(candidates)

        for t in candidates:

            pair = dual_tree(d, t, dual=dual)

            assert tree_diameter(skeleton, pair.tree) <= 2 * diameter(skeleton) or (
                tree_diameter(dual, pair.dual_tree) <= 2 * diameter(dual)
            )

    assert short_tree_candidates(delta_1.diagram, roots=3, rng_seed=5) == short_tree_candidates(
        delta_1.diagram, roots=3, rng_seed=5
    )


def test_short_trees_join_the_samples():

    report = check_theorem(2, samples=10, rng_seed=4, audit_shellings=False)

    assert report.short_trees >= 2
    assert report.sampled_min_tree_sum <= report.wilson_min_tree_sum
    assert report.chain_violations == 0


@pytest.mark.slow
def test_growth_of_the_tree_sum_minimum():

    reports = [check_theorem(n, samples=200, rng_seed=7, audit_shellings=False) for n in (3, 4, 5, 6)]

    for r in reports:

        assert r.chain_violations == 0
        assert r.sampled_min_tree_sum <= r.wilson_min_tree_sum
        assert r.sampled_min_chain >= r.chain_rhs

    summary = family_summary(reports)

    assert summary["upper_stability"] < 2.5
    assert math.isfinite(summary["lower_exponent"])
    assert math.isfinite(summary["wilson_exponent"])
    assert isinstance(summary["lower_in_window"], bool)

    print(theorem_table(reports))
    print(summary)


@pytest.mark.slow
def test_log_shelling_constants_are_stable(delta_1, delta_2, delta_3, delta_4):

    values = [log_shelling_constants(c.diagram) for c in (delta_1, delta_2, delta_3, delta_4)]

    assert constant_stability([v["tree_log_ratio"] for v in values]) < 3

    # the constant fitted on the family bounds every run
    fitted = max(v["diameter_product_ratio"] for v in values)

    for c, v in zip((delta_1, delta_2, delta_3, delta_4), values):

        product = diameter(c.diagram.complex.skeleton()) * diameter(DualGraph(c.diagram))

        assert v["max_boundary"] <= fitted * product + 1e-9
