"""
State carried through the certify workflow.

Every key is optional so nodes can return partial progress; `history` and
`errors` form the audit trail copied into the final report.
"""

from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, TypedDict

from noloopwb.algebra.basis import AlgebraBasis


class CertifyState(TypedDict, total=False):
    # ===== INPUT =====
    algebra: AlgebraBasis
    vertex: str
    depth: int
    budget: int

    # ===== LOOP =====
    loop: Optional[str]  # First loop at x, None if there is none
    loop_count: int
    simple_pd: Any  # PdReport of S_x

    # ===== STRUCTURE =====
    neighborhood: Any  # NeighborhoodResult
    context: Any  # LoopContext
    distributive: Any  # CheckResult on Λ(x)
    predicates: List[Any]
    branch: str
    preferred: Optional[str]  # Template to try first

    # ===== FILTRATIONS =====
    attempts: List[Dict[str, Any]]
    certificate: Any  # FiltrationCertificate with verdict all-finite
    candidate: Any  # First α-stable chain, kept when nothing is all-finite

    # ===== OUTCOME =====
    report: Any  # CertifyReport
    current_step: Optional[str]
    status: Optional[str]  # "running", "completed"

    history: List[Dict[str, Any]]
    # Each entry: {"step": "search", "timestamp": "...", "duration_ms": 12, "result": {...}}

    errors: List[Dict[str, Any]]
    # Each error: {"step": "structure", "error": "...", "timestamp": "..."}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def create_initial_state(a: AlgebraBasis, vertex: str, depth: int, budget: int) -> CertifyState:
    return CertifyState(
        algebra=a,
        vertex=vertex,
        depth=depth,
        budget=budget,
        loop=None,
        loop_count=0,
        predicates=[],
        branch="no-loop",
        preferred=None,
        attempts=[],
        current_step="start",
        status="running",
        history=[],
        errors=[],
    )


def add_history_entry(
    state: CertifyState,
    step: str,
    duration_ms: Optional[int] = None,
    result: Optional[Any] = None,
) -> CertifyState:
    entry: Dict[str, Any] = {"step": step, "timestamp": _now()}
    if duration_ms is not None:
        entry["duration_ms"] = duration_ms
    if result is not None:
        entry["result"] = result
    state.setdefault("history", []).append(entry)
    return state


def add_error(state: CertifyState, step: str, error: str) -> CertifyState:
    state.setdefault("errors", []).append({"step": step, "error": error, "timestamp": _now()})
    return state
