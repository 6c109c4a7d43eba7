"""
Dynkin / Euclidean recognition for the underlying graph of a diagram.
"""

from typing import Literal, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from noloopwb.cleaving.diagram import Diagram


class GraphType(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Literal["dynkin", "euclidean", "other"]
    letter: Optional[Literal["A", "D", "E"]] = None
    rank: Optional[int] = None

    @property
    def is_euclidean(self) -> bool:
        return self.family == "euclidean"

    @property
    def label(self) -> str:
        if self.family == "other":
            return "other"
        tilde = "\u0303" if self.is_euclidean else ""
        return f"{self.letter}{tilde}{self.rank}"

    def __str__(self) -> str:
        return self.label


OTHER = GraphType(family="other")

_STARS = {
    (1, 2, 2): ("dynkin", "E", 6),
    (1, 2, 3): ("dynkin", "E", 7),
    (1, 2, 4): ("dynkin", "E", 8),
    (2, 2, 2): ("euclidean", "E", 6),
    (1, 3, 3): ("euclidean", "E", 7),
    (1, 2, 5): ("euclidean", "E", 8),
}


def underlying_graph(d: Diagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(d.quiver.vertices)
    graph.add_edges_from((a.source, a.target) for a in d.quiver.arrows)
    return graph


def _arms(graph: nx.Graph, center) -> Tuple[int, ...]:
    rest = graph.copy()
    rest.remove_node(center)
    return tuple(sorted(len(c) for c in nx.connected_components(rest)))


def classify_graph(graph: nx.MultiGraph) -> GraphType:
    """Classify a connected multigraph by cycle structure and degree data."""
    n, m = graph.number_of_nodes(), graph.number_of_edges()
    if n == 0 or not nx.is_connected(graph) or nx.number_of_selfloops(graph):
        return OTHER
    degrees = dict(graph.degree())

    if m == n:
        if n >= 2 and all(deg == 2 for deg in degrees.values()):
            return GraphType(family="euclidean", letter="A", rank=n - 1)
        return OTHER
    if m != n - 1:
        return OTHER

    branches = [v for v, deg in degrees.items() if deg >= 3]
    if not branches:
        return GraphType(family="dynkin", letter="A", rank=n)
    if max(degrees.values()) > 4:
        return OTHER
    if len(branches) == 1:
        center = branches[0]
        if degrees[center] == 4:
            return GraphType(family="euclidean", letter="D", rank=4) if n == 5 else OTHER
        arms = _arms(graph, center)
        if arms[:2] == (1, 1):
            return GraphType(family="dynkin", letter="D", rank=n)
        if arms in _STARS:
            family, letter, rank = _STARS[arms]
            return GraphType(family=family, letter=letter, rank=rank)
        return OTHER
    if len(branches) == 2 and all(degrees[b] == 3 for b in branches):
        leaves = [sum(1 for u in graph.neighbors(b) if degrees[u] == 1) for b in branches]
        if leaves == [2, 2]:
            return GraphType(family="euclidean", letter="D", rank=n - 1)
    return OTHER


def underlying_graph_type(d: Diagram) -> GraphType:
    return classify_graph(underlying_graph(d))
