"""
Distributivity, neighborhoods, penny-farthings and loop data.
"""

from noloopwb.structure.distributive import check_distributive
from noloopwb.structure.loops import arrows_from, contour_partner, minimal_loop_contour, minimal_loop_power
from noloopwb.structure.neighborhood import NeighborhoodResult, corner_algebra, neighborhood
from noloopwb.structure.pennyfarthing import PennyFarthing, detect_penny_farthings, well_formed
