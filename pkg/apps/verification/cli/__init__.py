from .base import AlgebraCommand, ExpectationFailed
from .session import ORDER_PRESETS, SessionConfig

__all__ = ["AlgebraCommand", "ExpectationFailed", "ORDER_PRESETS", "SessionConfig"]
