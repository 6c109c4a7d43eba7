"""
Conditional edges of the certify workflow.
"""

from noloopwb.certifier.state import CertifyState


def route_after_inspect(state: CertifyState) -> str:
    """
    - "loop" → build the neighborhood
    - "no_loop" → nothing to certify
    """
    return "loop" if state.get("loop") else "no_loop"


def route_after_structure(state: CertifyState) -> str:
    """Templates need the loop context; without it go straight to search."""
    return "templates" if state.get("context") is not None else "search"


def route_after_templates(state: CertifyState) -> str:
    """
    - "certified" → a template gave an all-finite certificate
    - "search" → fall back to the generic search
    """
    return "certified" if state.get("certificate") is not None else "search"
