"""Command line interface, see `hilbert-geometry --help`."""
from .main import cli

__all__ = ("cli",)
