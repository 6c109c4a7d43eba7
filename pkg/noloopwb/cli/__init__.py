"""
File formats, structure-graph export and the command line.
"""

from noloopwb.cli.fileformat import (
    DiagramFile,
    parse_algebra_file,
    parse_chain_file,
    parse_diagram_file,
    serialize_presentation,
)
from noloopwb.cli.graph_export import export_structure_graph, structure_graph
