"""Scattering quantum random walks on the hypercube."""

from ._sqrw import *  # noqa: F401,F403
from ._sqrw import __version__  # noqa: F401
