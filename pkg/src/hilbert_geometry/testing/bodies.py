"""Body specification files for command line tests."""
from __future__ import annotations

from typing import TYPE_CHECKING

import msgspec

from hilbert_geometry.type_encoders import enc_hook

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Any


def write_body(directory: Path, spec: dict[str, Any], name: str = "body.json") -> Path:
    """Write `spec` as JSON into `directory` and return the file path.

    `Fraction` values are written as `"p/q"` strings.
    """
    path = directory / name
    path.write_bytes(msgspec.json.encode(spec, enc_hook=enc_hook))
    return path
