"""Read-only JSON API over the example systems."""

from .app import app, MAX_DEPTH

__all__ = ['app', 'MAX_DEPTH']
