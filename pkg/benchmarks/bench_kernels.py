"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from planecolour import kernels
from planecolour.lattice import LatticeSpec, hexagon_ring, monochromatic_component
from planecolour.tiling import CANONICAL, TilingOracle


def workloads(rng):
    n = 1_000_000
    xs, ys = rng.uniform(-50, 50, n), rng.uniform(-50, 50, n)
    s = CANONICAL
    yield "tile_colours (1e6 points)", lambda impl: impl.tile_colours(
        xs, ys, s.side, s.row_shift, s.colours, s.shift_sign)

    # A real monochromatic component and its bounding hexagon-ish polygon.
    spec = LatticeSpec(0.05 / 3)
    comp = sorted(monochromatic_component(TilingOracle(), spec, (0, 0)))
    ring = hexagon_ring((comp[0].i, comp[0].j), 40).vertices
    px = np.array([2 * (2 * v.i + v.j) for v in ring], dtype=np.int64)
    py = np.array([2 * v.j for v in ring], dtype=np.int64)
    qx = np.array([2 * (2 * c.i + c.j) + 1 for c in comp] * 4, dtype=np.int64)
    qy = np.array([2 * c.j + 1 for c in comp] * 4, dtype=np.int64)
    yield f"points_in_polygon ({len(ring)}-gon, {len(qx)} queries)", lambda impl: impl.points_in_polygon(
        px, py, qx, qy)

    a = rng.integers(0, 7, n)
    b = (a + 1) % 7
    b[-1] = a[-1]
    yield "first_match (1e6, hit at end)", lambda impl: impl.first_match(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(sorted(backends))}")
    rng = np.random.default_rng(0)
    for label, fn in workloads(rng):
        times = {}
        for name, impl in sorted(backends.items()):
            times[name] = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
        row = "  ".join(f"{name} {t * 1e3:9.2f} ms" for name, t in times.items())
        speed = f"  speedup x{times['python'] / times['compiled']:.1f}" if "compiled" in times else ""
        print(f"{label:<46} {row}{speed}")


if __name__ == "__main__":
    main()
