"""Anisotropic nonlocal energy toolkit.

Closed-form ellipse-law potentials and energies, brute-force quadrature
oracles, optimality-condition grid checks, the rotation reduction of general
anisotropies, and an interacting-particle gradient-flow simulator. All heavy
lifting happens in the C++ extension module.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
from ._core import __version__  # noqa: F401
