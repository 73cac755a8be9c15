import math

import pytest

from commkit import Community, EstimatorParams, Graph, eslope, expected_ratio, islope
from commkit.errors import ConfigError
from conftest import clique_graph, star_graph, whole_community


def test_expected_ratio_clique_k1_is_one():
    g = clique_graph(6)
    c = whole_community(g)
    value, record = expected_ratio(g, c, K=1, kind="internal")
    assert value == 1.0
    assert record.method == "exact"
    assert record.subset_count == 6


def test_expected_ratio_star10_k1():
    # hub singleton dominates everything, each of 9 leaves covers 2 of 10
    g = star_graph(9)
    c = whole_community(g)
    value, record = expected_ratio(g, c, K=1, kind="internal")
    assert value == pytest.approx((1.0 + 9 * 0.2) / 10)
    assert value == pytest.approx(0.28)
    assert record.method == "exact"


def test_expected_ratio_full_size_subset_is_one():
    g = clique_graph(4)
    c = whole_community(g)
    value, _ = expected_ratio(g, c, K=4, kind="internal")
    assert value == 1.0


def test_expected_ratio_closed_external_sentinel():
    g = Graph([("a", "b"), ("x", "y")])
    c = Community("pair", frozenset({g.index("a"), g.index("b")}), g)
    assert expected_ratio(g, c, K=1, kind="external") == (None, None)


def test_expected_ratio_input_validation():
    g = clique_graph(3)
    c = whole_community(g)
    with pytest.raises(ConfigError):
        expected_ratio(g, c, K=0, kind="internal")
    with pytest.raises(ConfigError):
        expected_ratio(g, c, K=4, kind="internal")
    with pytest.raises(ConfigError):
        expected_ratio(g, c, K=1, kind="sideways")


def test_islope_clique_is_zero():
    for n in (3, 5, 8):
        g = clique_graph(n)
        result = islope(g, whole_community(g), p=0.8)
        assert result.slope == 0.0
        assert result.K == 1


def test_islope_star10_exact():
    g = star_graph(9)
    result = islope(g, whole_community(g), p=0.8)
    assert result.K == 1
    assert result.observed_ratio == 1.0
    assert result.expected_ratio == pytest.approx(0.28)
    assert result.slope == pytest.approx(0.72)
    assert result.estimator.method == "exact"


def test_islope_p_zero_is_defined():
    g = clique_graph(4)
    result = islope(g, whole_community(g), p=0.0)
    assert result.K == 0
    assert result.slope == 0.0


def test_eslope_single_gatekeeper():
    # m0 holds every boundary edge: observed 1 at K=1, expected 1/|C|
    n = 5
    edges = [(f"m{i}", f"m{j}") for i in range(n) for j in range(i + 1, n)]
    edges += [("m0", "x0"), ("m0", "x1")]
    g = Graph(edges)
    c = Community("gate", frozenset(g.index(f"m{i}") for i in range(n)), g)
    result = eslope(g, c, p=0.8)
    assert result.K == 1
    assert result.observed_ratio == 1.0
    assert result.slope == pytest.approx(1 - 1 / n)


def test_eslope_symmetric_boundary_is_zero():
    # cycle members each own one distinct outside neighbor; any K-subset
    # reaches exactly K of 4 boundary nodes, so greedy equals the average
    edges = [("m0", "m1"), ("m1", "m2"), ("m2", "m3"), ("m3", "m0")]
    edges += [(f"m{i}", f"x{i}") for i in range(4)]
    g = Graph(edges)
    c = Community("ring", frozenset(g.index(f"m{i}") for i in range(4)), g)
    result = eslope(g, c, p=0.5)
    assert result.K == 2
    assert result.slope == pytest.approx(0.0)


def test_eslope_closed_community_sentinel():
    g = Graph([("a", "b"), ("x", "y")])
    c = Community("pair", frozenset({g.index("a"), g.index("b")}), g)
    result = eslope(g, c, p=0.8)
    assert result.closed
    assert result.slope is None
    assert result.estimator is None


def test_monte_carlo_within_three_stderr_of_exact():
    g = star_graph(11)
    c = whole_community(g)
    exact, _ = expected_ratio(g, c, K=3, kind="internal")
    params = EstimatorParams(enumeration_cap=1, samples=4000, rng_seed=7)
    estimate, record = expected_ratio(g, c, K=3, kind="internal", params=params)
    assert record.method == "monte_carlo"
    assert record.standard_error > 0.0
    assert abs(estimate - exact) <= 3 * record.standard_error


def test_monte_carlo_is_deterministic_per_seed():
    g = star_graph(11)
    c = whole_community(g)
    params = EstimatorParams(enumeration_cap=1, samples=500, rng_seed=3)
    assert expected_ratio(g, c, K=2, kind="internal", params=params) == expected_ratio(
        g, c, K=2, kind="internal", params=params
    )


def test_rng_stream_seeds_are_distinct_per_coordinate():
    from commkit.slopes import _stream_seed

    base = _stream_seed(0, "c1", "internal", 3)
    assert base == _stream_seed(0, "c1", "internal", 3)
    assert base != _stream_seed(1, "c1", "internal", 3)
    assert base != _stream_seed(0, "c2", "internal", 3)
    assert base != _stream_seed(0, "c1", "external", 3)
    assert base != _stream_seed(0, "c1", "internal", 4)


def test_slope_results_bounded():
    g = star_graph(9)
    result = islope(g, whole_community(g), p=0.8)
    assert 0.0 <= result.observed_ratio <= 1.0
    assert 0.0 <= result.expected_ratio <= 1.0
    assert -1.0 < result.slope < 1.0


def test_slope_invariant_under_relabeling():
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("b", "d"), ("c", "x")]
    g1 = Graph(edges)
    c1 = Community("c", frozenset(g1.index(l) for l in "abcd"), g1)
    mapping = {"a": "q", "b": "n", "c": "z", "d": "m", "x": "w"}
    g2 = Graph([(mapping[u], mapping[v]) for u, v in edges])
    c2 = Community("c", frozenset(g2.index(mapping[l]) for l in "abcd"), g2)
    r1, r2 = islope(g1, c1, p=0.8), islope(g2, c2, p=0.8)
    assert (r1.K, r1.observed_ratio, r1.expected_ratio, r1.slope) == (
        r2.K,
        r2.observed_ratio,
        r2.expected_ratio,
        r2.slope,
    )
