"""
Quivers, presentations and the exact based algebra kQ/I.
"""

from noloopwb.algebra.basis import AlgebraBasis, Element, build_algebra
from noloopwb.algebra.fields import FieldSpec, RATIONALS, prime_field
from noloopwb.algebra.presentation import Binomial, Monomial, Presentation
from noloopwb.algebra.quiver import Arrow, Path, Quiver

__all__ = [
    "AlgebraBasis",
    "Arrow",
    "Binomial",
    "Element",
    "FieldSpec",
    "Monomial",
    "Path",
    "Presentation",
    "Quiver",
    "RATIONALS",
    "build_algebra",
    "prime_field",
]
