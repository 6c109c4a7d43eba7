"""
Records produced by the certify workflow.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.certifier.filtration import FiltrationCertificate
from noloopwb.certifier.predicates import Predicate, PredicateValue
from noloopwb.homology.resolution import PdReport
from noloopwb.models import CheckResult


class Attempt(BaseModel):
    """One candidate filtration tried by the workflow."""

    source: str = Field(description="Template name, or 'search'")
    chain: str = Field(default="", description="The chain as M_0 ⊃ ... ⊃ 0")
    outcome: str = Field(description="AllFinite(D), Inconclusive(D), or the rejection reason")


class CertifyReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    vertex: str
    depth: int
    loop: Optional[str] = Field(default=None, description="The loop at x examined, if any")
    loop_count: int = Field(description="dim Ext¹(S_x, S_x)")
    simple_pd: Optional[PdReport] = None
    neighborhood: List[str] = Field(default_factory=list, description="Vertices of Λ(x)")
    distributive: Optional[CheckResult] = None
    multiplicative: Optional[bool] = None
    standard: Optional[bool] = None
    penny_farthings: List[str] = Field(default_factory=list)
    t: Optional[int] = None
    x_plus: List[str] = Field(default_factory=list)
    beta1: Optional[str] = None
    gamma: Optional[str] = None
    branch: str = "no-loop"
    predicates: List[Predicate] = Field(default_factory=list)
    attempts: List[Attempt] = Field(default_factory=list)
    certificate: Optional[FiltrationCertificate] = None
    conclusion: str = ""
    status: Literal["pass", "fail", "inconclusive"] = "inconclusive"
    diagnostics: List[str] = Field(default_factory=list)

    @property
    def has_loop(self) -> bool:
        return self.loop is not None

    def predicate_values(self) -> Dict[str, PredicateValue]:
        return {p.name: p.value for p in self.predicates}

    def contradictions(self) -> List[Predicate]:
        """Predicates whose gating hypotheses hold but which evaluated false."""
        return [p for p in self.predicates if p.contradicts_hypotheses]

    def lines(self) -> List[str]:
        """Plain-text rendering, one fact per line."""
        out = [f"vertex: {self.vertex}", f"loops at x: {self.loop_count}"]
        if self.simple_pd is not None:
            out.append(f"pd(S_{self.vertex}): {self.simple_pd}")
        if self.has_loop:
            out.append(f"loop: {self.loop}")
            out.append(f"neighborhood: {', '.join(self.neighborhood)}")
            if self.distributive is not None:
                out.append(f"distributive: {'yes' if self.distributive.ok else 'no (' + self.distributive.message + ')'}")
            out.append(f"multiplicative basis: {self.multiplicative}")
            out.append(f"standard: {self.standard}")
            for pf in self.penny_farthings:
                out.append(f"penny-farthing: {pf}")
            out.append(f"t: {self.t if self.t is not None else '-'}")
            out.append(f"x+: {', '.join(self.x_plus)}")
            if self.beta1:
                out.append(f"beta1: {self.beta1}")
            if self.gamma:
                out.append(f"gamma: {self.gamma}")
            out.append(f"branch: {self.branch}")
            for p in self.predicates:
                out.append(f"predicate {p.name}: {p.value.value}")
            for attempt in self.attempts:
                out.append(f"attempt {attempt.source}: {attempt.outcome} {attempt.chain}".rstrip())
            if self.certificate is not None:
                out.append(f"certificate: {self.certificate.filtration.describe()} {self.certificate.describe()}")
        for d in self.diagnostics:
            out.append(f"diagnostic: {d}")
        out.append(f"conclusion: {self.conclusion}")
        out.append(f"status: {self.status}")
        return out
