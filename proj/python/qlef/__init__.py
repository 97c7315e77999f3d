"""Exact-arithmetic localization toolkit for hypersurface Gromov-Witten invariants."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # in-tree layout: extension module sits directly on sys.path
    from _core import *  # noqa: F401,F403
