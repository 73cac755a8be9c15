"""Communities: identified node subsets of a graph, plus file I/O.

Community files have one community per line: ``id: label label ...``.
The leading ``id:`` token is optional; missing ids are assigned ``c<line>``.
Communities may overlap; nothing here assumes disjointness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .errors import CommunityFileError
from .graph import Graph, _iter_lines


@dataclass(frozen=True)
class Community:
    """A named set of node indices within ``graph``."""

    id: str
    members: frozenset[int]
    graph: Graph = field(repr=False, compare=False)

    def __post_init__(self):
        if not self.members:
            raise ValueError(f"community {self.id!r} has no members")
        n = self.graph.node_count
        bad = [m for m in self.members if not 0 <= m < n]
        if bad:
            raise ValueError(f"community {self.id!r} has invalid node indices: {bad}")

    @property
    def size(self) -> int:
        return len(self.members)

    def member_labels(self) -> list[str]:
        return sorted(self.graph.label(m) for m in self.members)


def check_subset(subset: Iterable[int], community: Community) -> frozenset[int]:
    """Validate ``subset ⊆ community`` and return it as a frozenset."""
    s = frozenset(subset)
    if not s <= community.members:
        extra = sorted(s - community.members)
        raise ValueError(f"subset contains nodes outside community {community.id!r}: {extra}")
    return s


def neighbors_in(graph: Graph, subset: Iterable[int], community: Community) -> set[int]:
    """Members of the community adjacent to the subset, excluding the subset."""
    s = check_subset(subset, community)
    out: set[int] = set()
    for u in s:
        out.update(v for v in graph.neighbors(u) if v in community.members)
    return out - s


def neighbors_out(graph: Graph, subset: Iterable[int], community: Community) -> set[int]:
    """Nodes outside the community adjacent to the subset."""
    s = check_subset(subset, community)
    out: set[int] = set()
    for u in s:
        out.update(v for v in graph.neighbors(u) if v not in community.members)
    return out


def boundary(community: Community) -> frozenset[int]:
    """External neighborhood of the whole community (cached on first use)."""
    cached = getattr(community, "_boundary", None)
    if cached is None:
        cached = frozenset(neighbors_out(community.graph, community.members, community))
        object.__setattr__(community, "_boundary", cached)
    return cached


def induced_subgraph(community: Community) -> Graph:
    """Graph over the community's members with all intra-community edges.

    Labels are preserved; members without internal edges survive as
    isolated nodes.
    """
    g = community.graph
    edges = [
        (g.label(u), g.label(v))
        for u, v in g.edges()
        if u in community.members and v in community.members
    ]
    return Graph(edges, extra_nodes=(g.label(m) for m in community.members))


def load_communities(source: IO | str | Path, graph: Graph) -> list[Community]:
    """Read communities from a file or path, resolving labels against ``graph``."""
    communities: list[Community] = []
    for line_number, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        community_id = f"c{line_number}"
        if ":" in line:
            head, _, rest = line.partition(":")
            community_id, line = head.strip(), rest
        labels = line.split()
        if not labels:
            raise CommunityFileError(f"line {line_number}: community {community_id!r} is empty")
        members = frozenset(graph.index(label) for label in labels)
        communities.append(Community(community_id, members, graph))
    return communities


def write_communities(communities: Iterable[Community], sink: IO) -> None:
    for c in communities:
        sink.write(f"{c.id}: " + " ".join(c.member_labels()) + "\n")
