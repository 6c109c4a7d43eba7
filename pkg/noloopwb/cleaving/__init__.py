"""
Cleaving diagrams into ray categories.
"""

from noloopwb.cleaving.diagram import Diagram, RayFunctor, build_functor, diagram_from_arrows
from noloopwb.cleaving.functor import (
    CleavingReport,
    InfiniteWitness,
    representation_infinite_witness,
    verify_cleaving,
)
from noloopwb.cleaving.graph_type import GraphType, classify_graph, underlying_graph_type
