"""
Ray categories, long morphisms, interlacing and contours.
"""

from noloopwb.raycat.category import (
    Ray,
    RayCategory,
    build_ray_category,
    check_associativity,
    check_cancellation,
    quotient_by_ray,
    verify_multiplicative_basis,
)
from noloopwb.raycat.contours import Contour, contours, interlaced, is_deep, ray_of
