"""
The neighborhood Λ(x) = eΛe of a vertex.
"""

import logging
from typing import List, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from noloopwb.algebra import linalg
from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.algebra.quiver import Path

logger = logging.getLogger(__name__)


class DerivedArrow(BaseModel):
    """An arrow of the quiver of eΛe: a basis path spanning rad/rad² together with the others."""

    model_config = ConfigDict(frozen=True)

    path: Path

    @property
    def name(self) -> str:
        return self.path.label

    @property
    def source(self) -> str:
        return self.path.source

    @property
    def target(self) -> str:
        return self.path.target


class NeighborhoodResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertex: str
    vertices: Tuple[str, ...] = Field(description="The vertices of e, in quiver order")
    algebra: AlgebraBasis = Field(description="eΛe as a based algebra")
    arrows: Tuple[DerivedArrow, ...] = Field(description="Quiver of eΛe, from rad/rad²")


def corner_algebra(a: AlgebraBasis, vertices: Set[str], name: str = "") -> AlgebraBasis:
    """eΛe for e the sum of the given vertex idempotents."""
    ordered = tuple(v for v in a.vertices if v in vertices)
    keep = set(ordered)
    paths = tuple(p for p in a.paths if p.source in keep and p.target in keep)
    products = {
        (p, q): terms
        for (p, q), terms in a.products.items()
        if p.source in keep and p.target in keep and q.target in keep
    }
    return AlgebraBasis(
        name=name or f"{a.name}[{','.join(ordered)}]",
        field=a.field,
        quiver=a.quiver,
        vertices=ordered,
        bound=a.bound,
        paths=paths,
        normal_forms=a.normal_forms,
        products=products,
        presentation=None,
    )


def derived_arrows(a: AlgebraBasis) -> List[DerivedArrow]:
    """Basis paths of J that stay independent modulo J², picked greedily in path order."""
    chosen = [a.vector(e) for e in a.radical_power_basis(2)]
    arrows = []
    for p in a.paths:
        if p.is_trivial:
            continue
        v = a.vector(a.element(p))
        if linalg.rank(chosen + [v], a.dimension, a.K) > linalg.rank(chosen, a.dimension, a.K):
            chosen.append(v)
            arrows.append(DerivedArrow(path=p))
    return arrows


def neighborhood_vertices(a: AlgebraBasis, x: str) -> Set[str]:
    a.check_vertex(x)
    q = a.quiver
    members = {p.target for p in a.paths if p.source == x}
    members |= {arrow.source for arrow in q.arrows_to(x)}
    for out1 in q.arrows_from(x):
        y = out1.target
        if y == x or not any(back.target == x for back in q.arrows_from(y)):
            continue
        for out2 in q.arrows_from(x):
            y_prime = out2.target
            if y_prime in (x, y):
                continue
            for into in q.arrows_to(y):
                z = into.source
                if z not in (x, y, y_prime):
                    members.add(z)
    return members & set(a.vertices)


def neighborhood(a: AlgebraBasis, x: str) -> NeighborhoodResult:
    vertices = neighborhood_vertices(a, x)
    corner = corner_algebra(a, vertices, name=f"{a.name}({x})" if a.name else "")
    logger.debug("neighborhood of %s: %s, dim %d", x, sorted(vertices), corner.dimension)
    return NeighborhoodResult(
        vertex=x,
        vertices=corner.vertices,
        algebra=corner,
        arrows=tuple(derived_arrows(corner)),
    )
