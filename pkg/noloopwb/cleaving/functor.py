"""
Cleaving checks and representation-infinite witnesses.

F: D -> A⃗ is cleaving when a) F(μ) = 0 exactly for μ = 0, and b) whenever
F(μ) factors through F(η) for an irreducible η of D, μ already factors
through η in D, together with the mirror condition for factorizations on the
other side. A cleaving functor from a Euclidean diagram makes A⃗
representation-infinite.
"""

import logging
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra.quiver import Path
from noloopwb.cleaving.diagram import Diagram, RayFunctor, build_functor
from noloopwb.cleaving.graph_type import GraphType, underlying_graph_type
from noloopwb.models import CheckResult
from noloopwb.raycat.category import Ray, RayCategory, quotient_by_ray

logger = logging.getLogger(__name__)


class CleavingReport(CheckResult):
    condition: Optional[Literal["a", "b", "b-dual"]] = Field(
        default=None, description="Violated condition when ok is False"
    )


def _violation(condition: str, witness, message: str) -> CleavingReport:
    return CleavingReport(ok=False, condition=condition, witness=[str(w) for w in witness], message=message)


def _factors_after(rc: RayCategory, first: Ray, result: Ray) -> bool:
    """∃ ρ with first·ρ = result."""
    return any(rc.compose(first, rho) == result for rho in rc.rays if rho.source == first.target)


def _factors_before(rc: RayCategory, last: Ray, result: Ray) -> bool:
    """∃ ρ with ρ·last = result."""
    return any(rc.compose(rho, last) == result for rho in rc.rays if rho.target == last.source)


def verify_cleaving(rc: RayCategory, d: Diagram, F: RayFunctor) -> CleavingReport:
    """Exhaustive check of conditions a), b) and the mirror of b); first violation wins."""
    for p in d.paths():
        morphism, image = d.morphism(p), F.image(p)
        if (morphism is None) != (image is None):
            state = "zero" if morphism is None else "nonzero"
            return _violation(
                "a", [p.label], f"{p.label} is {state} in {d.name or 'the diagram'} but F({p.label}) = {image or 0}"
            )

    for eta in d.irreducible_morphisms():
        f_eta = F.image(eta)
        for mu in d.morphisms_from(eta.source):
            f_mu = F.image(mu)
            if not _factors_after(rc, f_eta, f_mu):
                continue
            if not any(d.compose(eta, nu) == mu for nu in d.morphisms_from(eta.target)):
                return _violation(
                    "b",
                    [eta.label, mu.label],
                    f"F({mu.label}) = {f_mu} factors through F({eta.label}) = {f_eta} "
                    f"but {mu.label} does not factor through {eta.label}",
                )
        for mu in d.morphisms_to(eta.target):
            f_mu = F.image(mu)
            if not _factors_before(rc, f_eta, f_mu):
                continue
            if not any(d.compose(nu, eta) == mu for nu in d.morphisms_to(eta.source)):
                return _violation(
                    "b-dual",
                    [eta.label, mu.label],
                    f"F({mu.label}) = {f_mu} factors through F({eta.label}) = {f_eta} from the left "
                    f"but {mu.label} does not end with {eta.label}",
                )
    return CleavingReport(ok=True)


class InfiniteWitness(BaseModel):
    """Record that a cleaving Euclidean diagram was found in A⃗ (or A⃗/η)."""

    model_config = ConfigDict(frozen=True)

    emitted: bool
    graph_type: GraphType
    cleaving: CleavingReport
    quotient_by: Optional[str] = Field(default=None, description="Long morphism set to zero first")
    message: str = ""


def representation_infinite_witness(
    rc: RayCategory,
    d: Diagram,
    F: RayFunctor,
    eta: Optional[Union[Ray, Path, str]] = None,
) -> InfiniteWitness:
    graph_type = underlying_graph_type(d)
    quotient_label = None
    if eta is not None:
        dead = rc.ray(eta)
        quotient = quotient_by_ray(rc, eta)
        quotient_label = dead.label
        hit = [name for name, ray in F.arrow_map.items() if ray == dead]
        if hit:
            return InfiniteWitness(
                emitted=False,
                graph_type=graph_type,
                cleaving=_violation("a", hit, f"arrow {hit[0]} is sent to the long morphism {dead}"),
                quotient_by=quotient_label,
                message=f"F uses {dead}, which the quotient sets to zero",
            )
        F = build_functor(
            d,
            quotient,
            {name: ray.representative for name, ray in F.arrow_map.items()},
            F.vertex_map,
        )
        rc = quotient

    report = verify_cleaving(rc, d, F)
    emitted = report.ok and graph_type.is_euclidean
    if emitted:
        target = f"A/{quotient_label}" if quotient_label else "A"
        message = f"cleaving diagram of Euclidean type {graph_type}: {target} is representation-infinite"
    elif not report.ok:
        message = f"not cleaving (condition {report.condition}): {report.message}"
    else:
        message = f"cleaving, but the diagram has type {graph_type}, not Euclidean"
    logger.info("witness check on %s: %s", d.name or "diagram", message)
    return InfiniteWitness(
        emitted=emitted, graph_type=graph_type, cleaving=report, quotient_by=quotient_label, message=message
    )
