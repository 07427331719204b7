"""Hunter-Saxton geometry: the R-map, flat geodesics and explicit solvers."""

from ._hsgeo import *  # noqa: F401,F403
from ._hsgeo import HsgeoError, __doc__  # noqa: F401
