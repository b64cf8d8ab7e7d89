"""Tomograms, quasidistributions, and wavelet-type transforms of sampled
signals, backed by the C++ core."""

from ._tomox import *  # noqa: F401,F403
from ._tomox import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
