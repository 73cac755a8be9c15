"""Internal and external slopes: greedy ratio minus random-subset expectation.

The expectation over all size-K subsets is enumerated exactly when the
subset count is small enough, otherwise estimated by Monte Carlo with a
per-community deterministic RNG stream.  The estimator provenance is kept
in the result so substitutions stay auditable.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from itertools import combinations

from .community import Community, boundary
from .domsets import DomSetResult, edr, greedy_eds, greedy_ids, idr
from .errors import ConfigError
from .graph import Graph

DEFAULT_ENUMERATION_CAP = 100_000
DEFAULT_SAMPLES = 10_000


@dataclass(frozen=True)
class EstimatorParams:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    samples: int = DEFAULT_SAMPLES
    rng_seed: int = 0


@dataclass(frozen=True)
class EstimatorRecord:
    """How an expectation was obtained."""

    method: str  # "exact" | "monte_carlo"
    subset_count: int  # enumerated subsets, or sample count
    rng_seed: int | None = None
    standard_error: float | None = None


@dataclass(frozen=True)
class SlopeResult:
    community_id: str
    kind: str  # "internal" | "external"
    K: int
    observed_ratio: float | None
    expected_ratio: float | None
    slope: float | None
    estimator: EstimatorRecord | None
    closed: bool = False


def _stream_seed(global_seed: int, community_id: str, kind: str, K: int) -> int:
    """Deterministic per-(community, kind, K) RNG seed, stable across runs."""
    digest = hashlib.sha256(f"{global_seed}:{community_id}:{kind}:{K}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def expected_ratio(
    graph: Graph,
    community: Community,
    K: int,
    kind: str,
    params: EstimatorParams = EstimatorParams(),
) -> tuple[float | None, EstimatorRecord | None]:
    """Mean dominating ratio over uniformly random size-K subsets.

    Exact enumeration when C(|C|, K) fits under the cap, Monte Carlo with a
    reported standard error otherwise.  External kind on a closed community
    gives ``(None, None)``.
    """
    if kind not in ("internal", "external"):
        raise ConfigError(f"kind must be internal or external, got {kind!r}")
    if not 1 <= K <= community.size:
        raise ConfigError(f"K must be in [1, |C|], got {K}")
    if kind == "external" and not boundary(community):
        return None, None

    ratio = idr if kind == "internal" else edr
    members = sorted(community.members)
    total = math.comb(len(members), K)
    if total <= params.enumeration_cap:
        acc = 0.0
        for subset in combinations(members, K):
            acc += ratio(graph, subset, community)
        return acc / total, EstimatorRecord(method="exact", subset_count=total)

    rng = random.Random(_stream_seed(params.rng_seed, community.id, kind, K))
    values = []
    for _ in range(params.samples):
        values.append(ratio(graph, rng.sample(members, K), community))
    n = len(values)
    mean = sum(values) / n
    variance = sum((v - mean) ** 2 for v in values) / (n - 1) if n > 1 else 0.0
    stderr = math.sqrt(variance / n)
    record = EstimatorRecord(
        method="monte_carlo", subset_count=n, rng_seed=params.rng_seed, standard_error=stderr
    )
    return mean, record


def islope(
    graph: Graph,
    community: Community,
    p: float = 0.8,
    params: EstimatorParams = EstimatorParams(),
    domset: DomSetResult | None = None,
) -> SlopeResult:
    """Internal slope: greedy p-IDS ratio minus the random-subset expectation.

    A precomputed greedy set can be passed in to avoid recomputation; it must
    be an internal p-mode result for the same community.
    """
    if domset is None:
        domset = greedy_ids(graph, community, p=p)
    if domset.size == 0:
        # p=0 stops before the first pick; the empty subset is its own expectation
        record = EstimatorRecord(method="exact", subset_count=1)
        return SlopeResult(community.id, "internal", 0, 0.0, 0.0, 0.0, record)
    K = domset.size
    observed = idr(graph, domset.members, community)
    expected, record = expected_ratio(graph, community, K, "internal", params)
    return SlopeResult(
        community_id=community.id,
        kind="internal",
        K=K,
        observed_ratio=observed,
        expected_ratio=expected,
        slope=observed - expected,
        estimator=record,
    )


def eslope(
    graph: Graph,
    community: Community,
    p: float = 0.8,
    params: EstimatorParams = EstimatorParams(),
    domset: DomSetResult | None = None,
) -> SlopeResult:
    """External slope; closed communities give the sentinel result."""
    if domset is None:
        domset = greedy_eds(graph, community, p=p)
    if domset.closed:
        return SlopeResult(
            community_id=community.id,
            kind="external",
            K=0,
            observed_ratio=None,
            expected_ratio=None,
            slope=None,
            estimator=None,
            closed=True,
        )
    if domset.size == 0:
        record = EstimatorRecord(method="exact", subset_count=1)
        return SlopeResult(community.id, "external", 0, 0.0, 0.0, 0.0, record)
    K = domset.size
    observed = edr(graph, domset.members, community)
    expected, record = expected_ratio(graph, community, K, "external", params)
    return SlopeResult(
        community_id=community.id,
        kind="external",
        K=K,
        observed_ratio=observed,
        expected_ratio=expected,
        slope=observed - expected,
        estimator=record,
    )
