"""Reduced random walks on affine Weyl groups.

Exact stationary distributions and limiting directions of the projected
chain, Monte Carlo walk simulation, the absorbing chain on the regions of
the Shi arrangement, and the bijection between affine Grassmannian elements
and n-cores with their limit shape.
"""

try:
    from ._coxwalk import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree builds put the module on sys.path
    from _coxwalk import *  # noqa: F401,F403

__version__ = "0.1.0"
