"""
The certify workflow as a LangGraph state graph.

inspect_loop → (no loop) conclude
             → neighborhood → structure → templates → (certified) conclude
                                                    → search → conclude → END
"""

import logging
from typing import Optional

from langgraph.graph import END, StateGraph

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.certifier.nodes import (
    conclude_node,
    inspect_loop_node,
    neighborhood_node,
    search_node,
    structure_node,
    templates_node,
)
from noloopwb.certifier.report import CertifyReport
from noloopwb.certifier.routing import route_after_inspect, route_after_structure, route_after_templates
from noloopwb.certifier.state import CertifyState, create_initial_state
from noloopwb.config import WorkbenchConfig

logger = logging.getLogger(__name__)


def build_certify_graph() -> StateGraph:
    workflow = StateGraph(CertifyState)

    workflow.add_node("inspect_loop", inspect_loop_node)
    workflow.add_node("neighborhood", neighborhood_node)
    workflow.add_node("structure", structure_node)
    workflow.add_node("templates", templates_node)
    workflow.add_node("search", search_node)
    workflow.add_node("conclude", conclude_node)

    workflow.set_entry_point("inspect_loop")

    workflow.add_conditional_edges(
        "inspect_loop",
        route_after_inspect,
        {
            "loop": "neighborhood",
            "no_loop": "conclude",
        },
    )
    workflow.add_edge("neighborhood", "structure")
    workflow.add_conditional_edges(
        "structure",
        route_after_structure,
        {
            "templates": "templates",
            "search": "search",
        },
    )
    workflow.add_conditional_edges(
        "templates",
        route_after_templates,
        {
            "certified": "conclude",
            "search": "search",
        },
    )
    workflow.add_edge("search", "conclude")
    workflow.add_edge("conclude", END)

    return workflow


_workflow_instance = None


def get_certify_workflow(checkpointer=None):
    """
    Compiled certify workflow.

    The state holds algebras and modules, so no checkpointer is attached
    unless one is passed in.
    """
    global _workflow_instance
    if checkpointer is not None:
        return build_certify_graph().compile(checkpointer=checkpointer)
    if _workflow_instance is None:
        _workflow_instance = build_certify_graph().compile()
    return _workflow_instance


def certify_no_loop(
    a: AlgebraBasis,
    x: str,
    depth: Optional[int] = None,
    budget: Optional[int] = None,
) -> CertifyReport:
    """Run the whole pipeline at x; always returns a report."""
    depth = WorkbenchConfig.PD_DEPTH if depth is None else depth
    budget = WorkbenchConfig.SEARCH_BUDGET if budget is None else budget
    logger.info("certify %s at %s (depth %d, budget %d)", a.name, x, depth, budget)
    final = get_certify_workflow().invoke(create_initial_state(a, x, depth, budget))
    return final["report"]
