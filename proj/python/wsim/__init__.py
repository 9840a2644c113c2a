"""Finite semimetric spaces: axiom checks, weak similarities and distance transforms."""

from ._wsim import *  # noqa: F401,F403
from ._wsim import WsimError, Space, WeakSimilarity

__all__ = [name for name in dir() if not name.startswith("_")]
