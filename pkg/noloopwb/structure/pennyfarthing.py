"""
Penny-farthing detection.

A penny-farthing is a loop σ at z₁ together with an s-cycle ρ₁…ρ_s through
z₁ such that σ² and ρ₁…ρ_s have the same nonzero ray and form a contour, the
only arrows among z₁…z_s being σ and the ρ_i. System (1) has ρ_sρ₁ = 0,
system (2) has ρ_sρ₁ = ρ_sσρ₁ ≠ 0. The vanishing pattern
ρ_{i+1}…ρ_sσρ₁…ρ_{f(i)} = 0 determines a non-decreasing f.
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.algebra.quiver import Path
from noloopwb.raycat.contours import interlaced, ray_of

logger = logging.getLogger(__name__)


class PennyFarthing(BaseModel):
    base_vertex: str = Field(description="z₁, the vertex carrying the loop")
    loop: str = Field(description="σ")
    cycle: Tuple[str, ...] = Field(description="ρ₁ … ρ_s")
    cycle_vertices: Tuple[str, ...] = Field(description="z₁ … z_s")
    relation_type: Optional[int] = Field(default=None, description="1 or 2; None when malformed")
    f: Tuple[int, ...] = Field(default=(), description="f(1) … f(s-1)")
    coefficient: str = Field(default="1", description="λ in σ² = λ ρ₁…ρ_s")
    malformed: Optional[str] = Field(default=None, description="Diagnostic when neither system matches")

    @property
    def is_malformed(self) -> bool:
        return self.malformed is not None

    @property
    def s(self) -> int:
        return len(self.cycle)

    def describe(self) -> str:
        cycle = ".".join(self.cycle)
        if self.is_malformed:
            return f"malformed penny-farthing at {self.base_vertex} ({self.loop}; {cycle}): {self.malformed}"
        f = ", ".join(f"f({i + 1})={v}" for i, v in enumerate(self.f))
        return f"penny-farthing at {self.base_vertex}: loop {self.loop}, cycle {cycle}, type ({self.relation_type}), {f}"


def _cycles(a: AlgebraBasis, start: str) -> List[List[str]]:
    """Arrow sequences of simple cycles through start (no loops, s >= 2)."""
    q = a.quiver
    found = []

    def walk(vertex: str, arrows: List[str], visited: List[str]):
        for arrow in q.arrows_from(vertex):
            if arrow.is_loop:
                continue
            if arrow.target == start and len(arrows) >= 1:
                found.append(arrows + [arrow.name])
            elif arrow.target not in visited and arrow.target in a.vertices:
                walk(arrow.target, arrows + [arrow.name], visited + [arrow.target])

    walk(start, [], [start])
    return found


def _word(a: AlgebraBasis, arrows) -> Path:
    return a.quiver.path(list(arrows))


def _is_zero(a: AlgebraBasis, arrows) -> bool:
    return a.normal_form(_word(a, arrows)).is_zero


def _classify(a: AlgebraBasis, sigma: str, rho: List[str]) -> Tuple[Optional[int], Tuple[int, ...], Optional[str]]:
    s = len(rho)
    last_first = [rho[-1], rho[0]]
    if _is_zero(a, last_first):
        kind = 1
    elif a.normal_form(_word(a, last_first)) == a.normal_form(_word(a, [rho[-1], sigma, rho[0]])):
        kind = 2
    else:
        return None, (), "ρ_sρ₁ is neither zero nor equal to ρ_sσρ₁"

    f = []
    for i in range(1, s):
        head = rho[i:] + [sigma]
        j = next((j for j in range(1, s + 1) if _is_zero(a, head + rho[:j])), None)
        if j is None:
            return None, (), f"no j with ρ_{i + 1}…ρ_sσρ₁…ρ_j = 0"
        f.append(j)
    if any(f[k] > f[k + 1] for k in range(len(f) - 1)):
        return None, tuple(f), "vanishing pattern is not non-decreasing"
    return kind, tuple(f), None


def detect_penny_farthings(a: AlgebraBasis) -> List[PennyFarthing]:
    q = a.quiver
    findings: List[PennyFarthing] = []
    for z1 in a.vertices:
        for loop in q.loops_at(z1):
            square = _word(a, [loop.name, loop.name])
            square_ray = ray_of(a, square)
            if square_ray is None:
                continue
            for rho in _cycles(a, z1):
                cycle = _word(a, rho)
                if ray_of(a, cycle) != square_ray or interlaced(a, square, cycle):
                    continue
                vertices = [z1] + [q.arrow(r).target for r in rho[:-1]]
                members = set(vertices)
                among = {arrow.name for arrow in q.arrows if arrow.source in members and arrow.target in members}
                coefficient = a.field.format(
                    a.K.quo(a.normal_form(square).terms[square_ray], a.normal_form(cycle).terms[square_ray])
                )
                pf = PennyFarthing(
                    base_vertex=z1,
                    loop=loop.name,
                    cycle=tuple(rho),
                    cycle_vertices=tuple(vertices),
                    coefficient=coefficient,
                )
                if among != {loop.name, *rho}:
                    pf.malformed = "extra arrows among the cycle vertices: " + ", ".join(
                        sorted(among - {loop.name, *rho})
                    )
                else:
                    pf.relation_type, pf.f, pf.malformed = _classify(a, loop.name, rho)
                logger.debug(pf.describe())
                findings.append(pf)
    return findings


def well_formed(findings: List[PennyFarthing]) -> List[PennyFarthing]:
    return [pf for pf in findings if not pf.is_malformed]
