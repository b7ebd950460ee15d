"""Exact Laplacian sigma computation, spectrum calculus, and graph-class audits."""

from sigma_lab._core import *  # noqa: F401,F403
from sigma_lab._core import __doc__  # noqa: F401

__version__ = "0.1.0"
