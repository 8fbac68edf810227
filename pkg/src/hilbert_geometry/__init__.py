"""
hilbert-geometry
---

Hilbert metrics of bounded convex bodies, Cayley-Klein metrics of
quadrics, and the projective constructions both are built from.

Example:
```python
from hilbert_geometry.convex import Ellipsoid
from hilbert_geometry.hilbert import hilbert_distance

disk = Ellipsoid((0.0, 0.0), ((1.0, 0.0), (0.0, 1.0)))
hilbert_distance(disk, (0.0, 0.0), (0.5, 0.0))  # artanh(1/2)
```
"""
# this is because pycharm wigs out when there is a module called `exceptions`:
# noinspection PyCompatibility
from . import (
    axioms,
    cayley_klein,
    convex,
    exceptions,
    hilbert,
    linalg,
    log,
    projective,
    settings,
    type_encoders,
)
from .hilbert import HilbertConfig

__all__ = [
    "HilbertConfig",
    "axioms",
    "cayley_klein",
    "convex",
    "exceptions",
    "hilbert",
    "linalg",
    "log",
    "projective",
    "settings",
    "type_encoders",
]


__version__ = "0.1.0"
