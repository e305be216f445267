"""Exact Magnus-expansion experiments: time-ordered exponentials, Magnus terms,
divergence certificates and convergence bounds."""

from ._core import *  # noqa: F401,F403
from ._core import MagnusLabError, __version__  # noqa: F401
