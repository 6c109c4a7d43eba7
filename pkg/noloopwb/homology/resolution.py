"""
Projective covers, syzygies and bounded projective dimension.
"""

import logging
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra import linalg
from noloopwb.config import WorkbenchConfig
from noloopwb.homology.modules import (
    RightModule,
    Submodule,
    direct_sum,
    projective,
    radical,
    zero_module,
)

logger = logging.getLogger(__name__)


class ProjectiveCover(BaseModel):
    """A projective cover ⊕ P_t -> m and the images of the cover's basis vectors."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: RightModule = Field(description="The projective ⊕ P_t")
    summands: Tuple[str, ...] = Field(description="Vertices t, one per summand, in top order")
    images: Tuple[linalg.Vector, ...] = Field(description="Image in m of each basis vector of the cover")
    target: RightModule

    def kernel(self) -> Submodule:
        """The syzygy as a submodule of the cover."""
        rows, pivots = linalg.rref(
            linalg.kernel(self.images, self.target.dim, self.module.K), self.module.dim, self.module.K
        )
        return Submodule(ambient=self.module, rows=tuple(rows), pivots=pivots)


class PdReport(BaseModel):
    """Outcome of a depth-bounded minimal resolution."""

    outcome: Literal["finite", "exceeds"]
    value: int = Field(description="d for Finite(d), D for Exceeds(D)")
    dimension_vectors: List[Dict[str, int]] = Field(
        default_factory=list, description="Dimension vectors of Ω⁰m, Ω¹m, ..."
    )
    cover_dimension_vectors: List[Dict[str, int]] = Field(
        default_factory=list, description="Dimension vectors of the projectives P_0, P_1, ..."
    )
    periodic_from: Optional[int] = Field(
        default=None, description="First syzygy index whose fingerprint repeats later"
    )
    period: Optional[int] = None
    truncated: bool = Field(
        default=False, description="Stopped before D because a syzygy grew past the size guard"
    )

    @property
    def is_finite(self) -> bool:
        return self.outcome == "finite"

    def __str__(self) -> str:
        text = f"Finite({self.value})" if self.is_finite else f"Exceeds({self.value})"
        if self.period is not None:
            text += f" [syzygies repeat from step {self.periodic_from} with period {self.period}]"
        return text


def projective_cover(m: RightModule) -> ProjectiveCover:
    a = m.algebra
    rad = radical(m)
    pivots = set(rad.pivots)
    generators = [i for i in range(m.dim) if i not in pivots]
    summands = [projective(a, m.tags[i]) for i in generators]
    cover = direct_sum(a, summands, name=" + ".join(p.name for p in summands) or "0") if summands else zero_module(a)

    images = []
    for i, P in zip(generators, summands):
        for path in P.basis_paths:
            images.append(m.act_path(m.unit(i), path))
    return ProjectiveCover(
        module=cover,
        summands=tuple(m.tags[i] for i in generators),
        images=tuple(images),
        target=m,
    )


def syzygy(m: RightModule) -> RightModule:
    return projective_cover(m).kernel().to_module(name=f"Ω({m.name})")


def projective_dimension(m: RightModule, depth: int) -> PdReport:
    """Finite(d) when Ω^d m is projective and nonzero (Ω^{d+1} m = 0); else Exceeds(depth)."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    report = PdReport(outcome="exceeds", value=depth)
    if m.is_zero():
        report.outcome, report.value = "finite", 0
        return report

    seen: Dict[Tuple, int] = {}
    current = m
    for d in range(depth + 1):
        report.dimension_vectors.append(current.dimension_vector())
        cover = projective_cover(current)
        report.cover_dimension_vectors.append(cover.module.dimension_vector())
        if cover.module.dim == current.dim:
            report.outcome, report.value = "finite", d
            return report

        fp = current.fingerprint()
        if report.period is None and fp in seen:
            report.periodic_from = seen[fp]
            report.period = d - seen[fp]
            logger.debug("%s: syzygy fingerprint repeats (%d -> %d)", m.name, seen[fp], d)
        seen.setdefault(fp, d)

        if d == depth:
            break
        current = cover.kernel().to_module(name=f"Ω^{d + 1}({m.name})")
        if current.dim > WorkbenchConfig.MAX_SYZYGY_DIM:
            logger.warning("%s: syzygy %d has dim %d, stopping early", m.name, d + 1, current.dim)
            report.truncated = True
            report.value = d + 1
            break
    return report


def euler_characteristic(report: PdReport) -> Dict[str, int]:
    """Alternating sum of the cover dimension vectors recorded in a report."""
    total: Dict[str, int] = {}
    for i, dv in enumerate(report.cover_dimension_vectors):
        sign = -1 if i % 2 else 1
        for v, n in dv.items():
            total[v] = total.get(v, 0) + sign * n
    return total
