"""Pure-Python (numpy) versions of the compiled kernels.

These define the semantics; the Cython module must agree with them bit for bit.
"""

import numpy as np


def tile_colours(xs, ys, side, row_shift, colours, sign):
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    row = np.floor(ys / side)
    col = np.floor((xs + sign * row * row_shift) / side).astype(np.int64)
    return ((col % colours) + colours) % colours


def points_in_polygon(px, py, qx, qy):
    """Crossing-number test on integer coordinates.

    Query points must not lie on the polygon boundary; the result for such
    points is unspecified.
    """
    px = np.asarray(px, dtype=np.int64)
    py = np.asarray(py, dtype=np.int64)
    qx = np.asarray(qx, dtype=np.int64)
    qy = np.asarray(qy, dtype=np.int64)
    inside = np.zeros(qx.shape[0], dtype=bool)
    n = px.shape[0]
    for a in range(n):
        b = a - 1
        x1, y1, x2, y2 = int(px[b]), int(py[b]), int(px[a]), int(py[a])
        dy = y2 - y1
        if dy == 0:
            continue
        straddle = (y1 > qy) != (y2 > qy)
        lhs = (qx - x1) * dy
        rhs = (qy - y1) * (x2 - x1)
        hit = lhs < rhs if dy > 0 else lhs > rhs
        inside ^= straddle & hit
    return inside


def first_match(a, b):
    hits = np.flatnonzero(np.asarray(a) == np.asarray(b))
    return int(hits[0]) if hits.size else -1
