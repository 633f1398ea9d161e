"""Exact anthyphairesis, Pell side/diameter sequences, spherical excess, and
solid angle measures."""

from gonia._core import *  # noqa: F401,F403
from gonia._core import __version__  # noqa: F401
