"""Nanobot swarm treatment simulator.

Continuous-space, discrete-time simulation of nanobot swarms locating and
treating multiple target sites by noisily following chemical gradients.
The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its full surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n" + (_core_doc or "")
