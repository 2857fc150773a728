"""Finite generalized pseudo effect algebras."""

__path__ = __import__("pkgutil").extend_path(__path__, __name__)

from ._core import *  # noqa: F401,F403
from ._core import GpeaError, Gpea  # noqa: F401
