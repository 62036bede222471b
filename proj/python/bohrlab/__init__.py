"""Bohr-radius toolkit: truncated power series, Bohr-type functionals and sharp radii."""

from ._bohrlab import *  # noqa: F401,F403

__version__ = "0.1.0"
