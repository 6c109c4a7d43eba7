"""
Distributivity: every e_x Λ e_y is cyclic over e_x Λ e_x or over e_y Λ e_y.
"""

from noloopwb.algebra import linalg
from noloopwb.algebra.basis import AlgebraBasis
from noloopwb.models import CheckResult


def _span_dim(a: AlgebraBasis, elements) -> int:
    return linalg.rank((a.vector(e) for e in elements), a.dimension, a.K)


def _cyclic(a: AlgebraBasis, x: str, y: str) -> bool:
    space = a.hom_space(x, y)
    left = [a.element(u) for u in a.hom_space(x, x)]
    right = [a.element(u) for u in a.hom_space(y, y)]
    for b in space:
        g = a.element(b)
        if _span_dim(a, [a.multiply(u, g) for u in left]) == len(space):
            return True
        if _span_dim(a, [a.multiply(g, u) for u in right]) == len(space):
            return True
    return False


def check_distributive(a: AlgebraBasis) -> CheckResult:
    """Try every basis path of e_x Λ e_y as a one-sided generator."""
    for x in a.vertices:
        for y in a.vertices:
            if a.hom_space(x, y) and not _cyclic(a, x, y):
                return CheckResult.failed(
                    [x, y],
                    f"e_{x}Λe_{y} (dim {len(a.hom_space(x, y))}) is cyclic over neither corner algebra",
                )
    return CheckResult.passed()
