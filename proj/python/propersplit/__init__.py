"""Proper splittings of rectangular complex matrices.

Thin Python layer over the C++ core: pseudoinverse kernels, reduced
solutions of t x = w, proper-splitting validation and diagnostics,
convergence certificates, comparison theorems and the stationary
iterative solver.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
