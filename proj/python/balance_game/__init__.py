"""Predetermined balance game: strategies, adversary, certification and analysis."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CapacityError,
    DimensionError,
    DomainError,
    ParseError,
    ResourceError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
