"""Test support: settings patches and body files."""
from .bodies import write_body
from .modify_settings import geometry_tolerances, modify_settings

__all__ = (
    "geometry_tolerances",
    "modify_settings",
    "write_body",
)
