"""
Structure graphs of modules: one node per basis element, one edge per
nonzero arrow action, emitted as DOT.
"""

from typing import Union

import networkx as nx
from graphviz import Digraph

from noloopwb.homology.modules import RightModule, Submodule


def structure_graph(m: Union[RightModule, Submodule]) -> nx.MultiDiGraph:
    """Nodes are basis labels; an edge u -> v labelled a when u·a has v in its support."""
    if isinstance(m, Submodule):
        m = m.to_module()
    graph = nx.MultiDiGraph()
    for i, label in enumerate(m.labels):
        graph.add_node(label, vertex=m.tags[i])
    for i, label in enumerate(m.labels):
        for arrow in m.algebra.quiver.arrows:
            image = m.act(m.unit(i), arrow.name)
            for j in sorted(image):
                scalar = m.algebra.field.format(image[j])
                graph.add_edge(label, m.labels[j], key=arrow.name, arrow=arrow.name, scalar=scalar)
    return graph


def export_structure_graph(m: Union[RightModule, Submodule], name: str = "") -> str:
    """DOT source of the structure graph, nodes and edges in basis order."""
    graph = structure_graph(m)
    title = name or (m.name if isinstance(m, RightModule) else m.label) or "module"
    dot = Digraph(name=title)
    dot.attr(rankdir="TB")
    for node, data in graph.nodes(data=True):
        dot.node(node, label=node, tooltip=data["vertex"])
    for u, v, data in graph.edges(data=True):
        label = data["arrow"] if data["scalar"] == "1" else f"{data['arrow']} ({data['scalar']})"
        dot.edge(u, v, label=label)
    return dot.source
