"""Solvable (1+1)-dimensional Dirac systems with a local Fermi velocity.

Thin python layer over the C++ core: scenario builders, effective
potentials, the y(x) coordinate map, closed-form spectra and the
tridiagonal eigensolver.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
