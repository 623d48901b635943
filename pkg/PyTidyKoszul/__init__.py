from .client import AsyncEngine as Engine
from .client import get_engine

__all__ = ['Engine', 'get_engine']
