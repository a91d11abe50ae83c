"""Round-based simulator for energy-aware cluster-head election in
heterogeneous sensor networks. Everything lives in the compiled core;
this package just re-exports it."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
