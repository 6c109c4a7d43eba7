"""
Loop data at x collected once and shared by templates, predicates and the
certify workflow: t, β₁, γ, x⁺, ℒ and the penny-farthings of Λ(x), plus
submodule shorthands over P_x.
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.exceptions import NotALoop
from noloopwb.homology.modules import RightModule, Submodule, intersect, projective, submodule_generated
from noloopwb.raycat.category import build_ray_category, verify_multiplicative_basis
from noloopwb.raycat.contours import Contour, ray_of
from noloopwb.structure.loops import arrows_from, contour_partner, minimal_loop_contour
from noloopwb.structure.neighborhood import neighborhood
from noloopwb.structure.pennyfarthing import PennyFarthing, detect_penny_farthings, well_formed

logger = logging.getLogger(__name__)


class LoopContext(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: AlgebraBasis = Field(description="Λ")
    local: AlgebraBasis = Field(description="Λ(x)")
    vertex: str
    loop: str
    px: RightModule = Field(description="P_x over Λ")
    multiplicative: bool
    standard: bool
    penny_farthings: Tuple[PennyFarthing, ...] = ()
    contour: Optional[Contour] = None
    t: Optional[int] = None
    beta1: Optional[str] = None
    gamma: Optional[str] = None
    x_plus: Tuple[str, ...] = ()
    long: Optional[Tuple[str, ...]] = Field(default=None, description="Labels of ℒ; None without a ray category")

    @property
    def has_penny_farthing(self) -> bool:
        return bool(well_formed(list(self.penny_farthings)))

    def power(self, k: int) -> str:
        return ".".join([self.loop] * k)

    def times(self, *factors: Optional[str]) -> Optional[str]:
        """Path text of a concatenation; None if a factor is missing."""
        if any(f is None for f in factors):
            return None
        return ".".join(factors)

    def sub(self, *generators: str) -> Submodule:
        """⟨g₁, ..., g_k⟩ ⊆ P_x for path texts g_i."""
        return submodule_generated(self.px, [self.algebra.element(g) for g in generators], labels=generators)

    def is_zero(self, text: str) -> bool:
        return self.algebra.element(text).is_zero

    def apart(self, left: List[str], right: List[str]) -> bool:
        """⟨left⟩ ∩ ⟨right⟩ = 0."""
        return intersect(self.sub(*left), self.sub(*right)).is_zero()

    def long_within(self, *texts: Optional[str]) -> Optional[bool]:
        """ℒ ⊆ {rays of texts}; None without a ray category."""
        if self.long is None:
            return None
        allowed = set()
        for text in texts:
            if text is None:
                continue
            r = ray_of(self.local, self.local.quiver.parse_path(text))
            if r is not None:
                allowed.add(r.label)
        return set(self.long) <= allowed


def build_loop_context(
    a: AlgebraBasis,
    x: str,
    alpha: Optional[str] = None,
    local: Optional[AlgebraBasis] = None,
) -> LoopContext:
    a.check_vertex(x)
    loops = [arrow.name for arrow in a.quiver.loops_at(x)]
    if alpha is None:
        if not loops:
            raise NotALoop(f"no loop at {x}")
        alpha = loops[0]
    elif alpha not in loops:
        raise NotALoop(f"{alpha} is not a loop at {x}")
    if local is None:
        local = neighborhood(a, x).algebra

    multiplicative = verify_multiplicative_basis(local).ok
    findings = detect_penny_farthings(local)
    char_two = local.field.characteristic == 2
    standard = multiplicative and not any(pf.relation_type == 2 and char_two for pf in findings)

    contour = minimal_loop_contour(local, alpha)
    t = beta1 = gamma = None
    if contour is not None:
        t = contour.power
        beta1 = contour_partner(contour).arrows[0]
    x_plus = tuple(p.label for p in arrows_from(local, x))
    if beta1 is not None and len(x_plus) == 3:
        rest = [p for p in x_plus if p not in (alpha, beta1)]
        gamma = rest[0] if len(rest) == 1 else None

    long = None
    if multiplicative:
        rc = build_ray_category(local)
        long = tuple(r.label for r in rc.long_morphisms())

    logger.debug("loop %s at %s: t=%s beta1=%s gamma=%s x+=%s", alpha, x, t, beta1, gamma, x_plus)
    return LoopContext(
        algebra=a,
        local=local,
        vertex=x,
        loop=alpha,
        px=projective(a, x),
        multiplicative=multiplicative,
        standard=standard,
        penny_farthings=tuple(findings),
        contour=contour,
        t=t,
        beta1=beta1,
        gamma=gamma,
        x_plus=x_plus,
        long=long,
    )
