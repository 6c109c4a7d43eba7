"""
Node implementations for the certify workflow.

- inspect_loop: loops at x and the pd of S_x
- neighborhood: the corner algebra Λ(x)
- structure: loop data, distributivity, standardness, predicates, branch
- templates: the named filtrations for the branch
- search: the generic filtration search
- conclude: assemble the CertifyReport

A node never raises a WorkbenchError; it records it in `errors` and the
workflow carries on with what it has.
"""

import logging
import time

from noloopwb.certifier.branches import choose_branch
from noloopwb.certifier.context import build_loop_context
from noloopwb.certifier.filtration import search_alpha_filtration, verify_alpha_filtration
from noloopwb.certifier.predicates import evaluate_lemma_predicates
from noloopwb.certifier.report import Attempt, CertifyReport
from noloopwb.certifier.state import CertifyState, add_error, add_history_entry
from noloopwb.certifier.templates import template_filtrations
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import WorkbenchError
from noloopwb.homology.modules import loop_count, simple
from noloopwb.homology.resolution import projective_dimension
from noloopwb.structure.distributive import check_distributive
from noloopwb.structure.neighborhood import neighborhood

logger = logging.getLogger(__name__)


def _elapsed(start: float) -> int:
    return int((time.time() - start) * 1000)


def inspect_loop_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "inspect_loop"
    a, x = state["algebra"], state["vertex"]
    try:
        loops = [arrow.name for arrow in a.quiver.loops_at(a.check_vertex(x))]
        state["loop_count"] = loop_count(a, x)
        state["loop"] = loops[0] if loops else None
        state["simple_pd"] = projective_dimension(simple(a, x), state["depth"])
        add_history_entry(
            state,
            "inspect_loop",
            _elapsed(start_time),
            {"loops": loops, "pd": str(state["simple_pd"])},
        )
    except WorkbenchError as e:
        add_error(state, "inspect_loop", str(e))
    return state


def neighborhood_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "neighborhood"
    try:
        result = neighborhood(state["algebra"], state["vertex"])
        state["neighborhood"] = result
        add_history_entry(state, "neighborhood", _elapsed(start_time), {"vertices": list(result.vertices)})
    except WorkbenchError as e:
        add_error(state, "neighborhood", str(e))
    return state


def structure_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "structure"
    nb = state.get("neighborhood")
    local = nb.algebra if nb is not None else None
    try:
        if local is not None:
            state["distributive"] = check_distributive(local)
        ctx = build_loop_context(state["algebra"], state["vertex"], state["loop"], local=local)
        state["context"] = ctx
        state["predicates"] = evaluate_lemma_predicates(ctx)
        state["branch"], state["preferred"] = choose_branch(ctx)
        if not ctx.standard and not ctx.has_penny_farthing:
            add_error(state, "structure", "non-standard neighborhood: structural branches disabled")
        add_history_entry(
            state,
            "structure",
            _elapsed(start_time),
            {"branch": state["branch"], "t": ctx.t, "x+": list(ctx.x_plus)},
        )
    except WorkbenchError as e:
        state["branch"] = "generic"
        add_error(state, "structure", str(e))
    return state


def _record(state: CertifyState, source: str, chain, depth: int) -> None:
    """Verify a chain and file the attempt; keep the first all-finite one."""
    try:
        cert = verify_alpha_filtration(state["algebra"], state["vertex"], state["loop"], chain, depth)
    except WorkbenchError as e:
        state["attempts"].append(Attempt(source=source, chain=" ⊃ ".join(m.label for m in chain), outcome=str(e)))
        return
    state["attempts"].append(Attempt(source=source, chain=cert.filtration.describe(), outcome=cert.describe()))
    if state.get("candidate") is None:
        state["candidate"] = cert
    if cert.all_finite and state.get("certificate") is None:
        state["certificate"] = cert


def templates_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "templates"
    ctx = state["context"]
    try:
        chains = template_filtrations(ctx, prefer=state.get("preferred"))
        if not ctx.standard:
            chains = [c for c in chains if c.name == "powers" and ctx.has_penny_farthing]
        for template in chains:
            _record(state, template.name, list(template.terms), state["depth"])
            if state.get("certificate") is not None:
                break
        add_history_entry(state, "templates", _elapsed(start_time), {"tried": len(state["attempts"])})
    except WorkbenchError as e:
        add_error(state, "templates", str(e))
    return state


def search_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "search"
    try:
        found = search_alpha_filtration(
            state["algebra"], state["vertex"], state["loop"], state["depth"], state["budget"]
        )
        if found is None:
            state["attempts"].append(Attempt(source="search", outcome="none"))
        else:
            _record(state, "search", list(found.terms), state["depth"])
        add_history_entry(state, "search", _elapsed(start_time), {"found": found is not None})
    except WorkbenchError as e:
        state["attempts"].append(Attempt(source="search", outcome=str(e)))
        add_error(state, "search", str(e))
    return state


def _conclude(state: CertifyState, report: CertifyReport) -> None:
    x, depth = report.vertex, report.depth
    pd = report.simple_pd
    if not report.has_loop:
        report.conclusion, report.status = f"no loop at {x}: nothing to certify", "pass"
    elif report.certificate is not None:
        report.conclusion = "contradiction with Lenzing's filtration criterion: inputs cannot satisfy both; flag for review"
        report.status = "fail"
    elif pd is None:
        report.conclusion, report.status = "pd(S_x) not computed", "inconclusive"
    elif not pd.is_finite:
        report.conclusion, report.status = f"consistent with strong no loop conjecture at depth {depth}", "pass"
        if WorkbenchConfig.PERIODICITY_IS_PROOF and pd.period is not None:
            report.conclusion = f"infinite (periodic syzygies); {report.conclusion}"
    elif report.distributive is not None and report.distributive.ok and report.standard:
        report.conclusion = "counterexample candidate; mildness not certified by this tool"
        report.status = "fail"
    else:
        report.conclusion = "pd(S_x) finite but the neighborhood checks fail; nothing certified"
        report.status = "inconclusive"


def conclude_node(state: CertifyState) -> CertifyState:
    start_time = time.time()
    state["current_step"] = "conclude"
    ctx = state.get("context")
    nb = state.get("neighborhood")
    report = CertifyReport(
        vertex=state["vertex"],
        depth=state["depth"],
        loop=state.get("loop"),
        loop_count=state.get("loop_count", 0),
        simple_pd=state.get("simple_pd"),
        neighborhood=list(nb.vertices) if nb is not None else [],
        distributive=state.get("distributive"),
        branch=state.get("branch", "no-loop"),
        predicates=state.get("predicates", []),
        attempts=state.get("attempts", []),
        certificate=state.get("certificate"),
        diagnostics=[f"{e['step']}: {e['error']}" for e in state.get("errors", [])],
    )
    if ctx is not None:
        report.multiplicative = ctx.multiplicative
        report.standard = ctx.standard
        report.penny_farthings = [pf.describe() for pf in ctx.penny_farthings]
        report.t = ctx.t
        report.x_plus = list(ctx.x_plus)
        report.beta1 = ctx.beta1
        report.gamma = ctx.gamma
    if report.certificate is None and state.get("candidate") is not None:
        report.diagnostics.append(
            f"best candidate {state['candidate'].filtration.describe()}: {state['candidate'].describe()}"
        )
    for p in report.contradictions():
        report.diagnostics.append(f"predicate {p.name} is false although its hypotheses hold")
    _conclude(state, report)

    state["report"] = report
    state["status"] = "completed"
    add_history_entry(state, "conclude", _elapsed(start_time), {"status": report.status})
    logger.info("certify %s: %s (%s)", report.vertex, report.status, report.conclusion)
    return state
