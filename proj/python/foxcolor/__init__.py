"""Fox colorings, determinants and Euler circuits of virtual knot Gauss codes."""

from ._core import *  # noqa: F401,F403
from ._core import FoxcolorError, GaussCode, __doc__  # noqa: F401

__version__ = "0.1.0"
