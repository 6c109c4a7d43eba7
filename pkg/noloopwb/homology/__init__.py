"""
Right modules, submodules, projective resolutions.
"""

from noloopwb.homology.modules import (
    RightModule,
    Submodule,
    composition_factors,
    direct_sum,
    intersect,
    is_direct_sum,
    kernel_of_left_multiplication,
    left_multiply_submodule,
    loop_count,
    module_sum,
    projective,
    quotient,
    radical,
    radical_layers,
    simple,
    submodule_generated,
    top,
    whole,
    zero_submodule,
)
from noloopwb.homology.resolution import (
    PdReport,
    ProjectiveCover,
    euler_characteristic,
    projective_cover,
    projective_dimension,
    syzygy,
)
