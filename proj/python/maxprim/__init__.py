"""Numerical semigroups indexed by their largest minimal generator."""

from ._maxprim import *  # noqa: F401,F403
from ._maxprim import __doc__  # noqa: F401

__version__ = "0.1.0"
