"""Spiral placement and swap routing for nearest-neighbor grids."""

from ._qmap import *  # noqa: F401,F403
from ._qmap import __version__  # noqa: F401
