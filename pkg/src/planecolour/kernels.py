"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``PLANECOLOUR_PURE_PYTHON`` is set to a non-empty value,
the numpy fallback is used. ``BACKEND`` names the active choice.
"""

import os
from types import ModuleType

import numpy as np

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


_compiled = _load_compiled()

if _compiled is not None and not os.environ.get("PLANECOLOUR_PURE_PYTHON"):
    _impl: ModuleType = _compiled
    BACKEND = "compiled"
else:
    _impl = _kernels_py
    BACKEND = "python"


def available_backends() -> dict[str, ModuleType]:
    backends = {"python": _kernels_py}
    if _compiled is not None:
        backends["compiled"] = _compiled
    return backends


def tile_colours(xs, ys, side: float, row_shift: float, colours: int, sign: int) -> np.ndarray:
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    return _impl.tile_colours(xs, ys, float(side), float(row_shift), int(colours), int(sign))


def points_in_polygon(px, py, qx, qy) -> np.ndarray:
    return _impl.points_in_polygon(
        np.ascontiguousarray(px, dtype=np.int64),
        np.ascontiguousarray(py, dtype=np.int64),
        np.ascontiguousarray(qx, dtype=np.int64),
        np.ascontiguousarray(qy, dtype=np.int64),
    )


def first_match(a, b) -> int:
    return int(_impl.first_match(
        np.ascontiguousarray(a, dtype=np.int64), np.ascontiguousarray(b, dtype=np.int64)
    ))
