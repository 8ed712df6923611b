"""Script-facing bindings for the metrix engine."""

from .analyzer import Analyzer

__all__ = ["Analyzer"]
__version__ = "0.1.0"
