"""
Loop data at a vertex: the minimal loop power t of a contour (α^t, w) and x⁺.
"""

from typing import List, Optional, Union

from noloopwb.algebra.basis import AlgebraBasis, build_algebra
from noloopwb.algebra.presentation import Presentation
from noloopwb.algebra.quiver import Path
from noloopwb.exceptions import NotALoop
from noloopwb.raycat.contours import Contour, contours
from noloopwb.structure.neighborhood import derived_arrows


def _as_algebra(source: Union[AlgebraBasis, Presentation]) -> AlgebraBasis:
    return build_algebra(source) if isinstance(source, Presentation) else source


def minimal_loop_contour(source: Union[AlgebraBasis, Presentation], loop: str) -> Optional[Contour]:
    """The contour (α^t, w) with minimal t; ties go to the smallest w in path order."""
    a = _as_algebra(source)
    arrow = a.quiver.arrow(loop)
    if not arrow.is_loop:
        raise NotALoop(f"{loop} is not a loop")
    key = a.quiver.path_key
    best = None
    for c in contours(a, a.bound - 1):
        if c.loop != loop or c.power is None or c.power < 2:
            continue
        partner = c.w if c.v.arrows == (loop,) * c.power else c.v
        rank = (c.power, key(partner))
        if best is None or rank < best[0]:
            best = (rank, c)
    return None if best is None else best[1]


def minimal_loop_power(source: Union[AlgebraBasis, Presentation], loop: str) -> Optional[int]:
    c = minimal_loop_contour(source, loop)
    return None if c is None else c.power


def contour_partner(c: Contour) -> Path:
    """w in the loop contour (α^t, w)."""
    return c.w if c.v.arrows == (c.loop,) * c.power else c.v


def arrows_from(a: AlgebraBasis, x: str) -> List[Path]:
    """x⁺: arrows of the algebra's own quiver starting at x (plain arrows for kQ/I)."""
    a.check_vertex(x)
    return [d.path for d in derived_arrows(a) if d.source == x]
