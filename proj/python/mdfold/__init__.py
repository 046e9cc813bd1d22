"""Lattice foldings of sequences into multidimensional shapes."""

from ._mdfold import *  # noqa: F401,F403
from ._mdfold import __doc__  # noqa: F401

__version__ = "0.1.0"
