"""Per-community and whole-network structural statistics.

Distances are measured inside the induced subgraph only, so paths never
leave the community.  Two distance conventions are reported side by side:

* reachable-pairs: mean/max over pairs that are connected inside the
  community (``apl``, ``diameter``), with the component count surfaced;
* penalized: an unreachable pair counts as distance ``|C|`` (one more than
  any possible internal path), giving ``apl_penalized`` and
  ``diameter_penalized``.

The penalized figures are what the aggregate summary reports, since
disconnected communities otherwise look spuriously compact.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean

from .community import Community, boundary, induced_subgraph
from .domsets import DomSetResult
from .errors import ConfigError
from .graph import Graph, bfs_distances, count_triangles
from .slopes import SlopeResult


@dataclass(frozen=True)
class CommunityStats:
    community_id: str
    size: int
    apl: float
    diameter: int
    apl_penalized: float
    diameter_penalized: int
    ccc: float
    triangles: int
    connected_triples: int
    component_count: int
    boundary_size: int


def _pair_distances(sub: Graph) -> tuple[list[int], int, int]:
    """All-pairs BFS inside a small graph.

    Returns (distances over reachable unordered pairs, number of unreachable
    unordered pairs, component count).
    """
    n = sub.node_count
    distances: list[int] = []
    seen: set[int] = set()
    components = 0
    for u in range(n):
        dist = bfs_distances(sub, u)
        if u not in seen:
            components += 1
            seen.update(dist)
        distances.extend(d for v, d in dist.items() if v > u)
    reachable_pairs = len(distances)
    unreachable = n * (n - 1) // 2 - reachable_pairs
    return distances, unreachable, components


def community_apl(community: Community) -> tuple[float, int]:
    """Mean shortest-path length over reachable pairs, plus component count.

    Singleton or edgeless communities give 0.
    """
    distances, _, components = _pair_distances(induced_subgraph(community))
    return (fmean(distances) if distances else 0.0), components


def community_diameter(community: Community) -> int:
    """Longest shortest path over reachable pairs in the induced subgraph."""
    distances, _, _ = _pair_distances(induced_subgraph(community))
    return max(distances, default=0)


def clustering_coefficient(graph: Graph) -> float:
    """Global transitivity: 3·triangles / connected triples (0 when no triples)."""
    triangles, triples = count_triangles(graph)
    return 3 * triangles / triples if triples > 0 else 0.0


def community_stats(community: Community) -> CommunityStats:
    sub = induced_subgraph(community)
    distances, unreachable, components = _pair_distances(sub)
    triangles, triples = count_triangles(sub)
    n = community.size
    penalized = distances + [n] * unreachable
    return CommunityStats(
        community_id=community.id,
        size=n,
        apl=fmean(distances) if distances else 0.0,
        diameter=max(distances, default=0),
        apl_penalized=fmean(penalized) if penalized else 0.0,
        diameter_penalized=max(penalized, default=0),
        ccc=3 * triangles / triples if triples > 0 else 0.0,
        triangles=triangles,
        connected_triples=triples,
        component_count=components,
        boundary_size=len(boundary(community)),
    )


@dataclass(frozen=True)
class TriangleGroup:
    count: int
    mean_triangles: float
    empty: bool


@dataclass(frozen=True)
class TriangleSplit:
    """Communities split by clustering coefficient at a threshold."""

    threshold: float
    above: TriangleGroup  # ccc > threshold
    below: TriangleGroup  # ccc <= threshold


def triangle_split_analysis(
    stats: list[CommunityStats], threshold: float
) -> TriangleSplit:
    """Partition communities at ``ccc > threshold`` and compare triangle mass."""
    if not 0.0 <= threshold <= 1.0:
        raise ConfigError(f"threshold must be in [0, 1], got {threshold}")
    above = [s.triangles for s in stats if s.ccc > threshold]
    below = [s.triangles for s in stats if s.ccc <= threshold]
    return TriangleSplit(
        threshold=threshold,
        above=TriangleGroup(len(above), fmean(above) if above else 0.0, not above),
        below=TriangleGroup(len(below), fmean(below) if below else 0.0, not below),
    )


@dataclass(frozen=True)
class NetworkSummary:
    """Unweighted means across communities, plus whole-network transitivity.

    Column layout mirrors the per-community reports: dominating ratios for
    the k-mode sets, sizes of the p-mode sets, slopes, then distances and
    clustering.  External columns are averaged over non-closed communities
    and are ``None`` if every community is closed.
    """

    community_count: int
    mean_idr: float
    mean_edr: float | None
    mean_ids_size: float
    mean_eds_size: float | None
    mean_islope: float
    mean_eslope: float | None
    mean_apl: float
    mean_diameter: float
    mean_apl_penalized: float
    mean_diameter_penalized: float
    mean_ccc: float
    ncc: float


def aggregate_stats(
    graph: Graph,
    stats: list[CommunityStats],
    k_internal: list[DomSetResult],
    k_external: list[DomSetResult],
    p_internal: list[DomSetResult],
    p_external: list[DomSetResult],
    internal_slopes: list[SlopeResult],
    external_slopes: list[SlopeResult],
) -> NetworkSummary:
    """Network summary row; order of the input lists is immaterial."""
    if not stats:
        raise ConfigError("no communities to aggregate")

    open_edr = [r.achieved_ratio for r in k_external if not r.closed]
    open_eds = [r.size for r in p_external if not r.closed]
    open_esl = [s.slope for s in external_slopes if not s.closed]
    return NetworkSummary(
        community_count=len(stats),
        mean_idr=fmean(r.achieved_ratio for r in k_internal),
        mean_edr=fmean(open_edr) if open_edr else None,
        mean_ids_size=fmean(r.size for r in p_internal),
        mean_eds_size=fmean(open_eds) if open_eds else None,
        mean_islope=fmean(s.slope for s in internal_slopes),
        mean_eslope=fmean(open_esl) if open_esl else None,
        mean_apl=fmean(s.apl for s in stats),
        mean_diameter=fmean(s.diameter for s in stats),
        mean_apl_penalized=fmean(s.apl_penalized for s in stats),
        mean_diameter_penalized=fmean(s.diameter_penalized for s in stats),
        mean_ccc=fmean(s.ccc for s in stats),
        ncc=clustering_coefficient(graph),
    )
