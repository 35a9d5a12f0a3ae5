"""Triangular lattice L(gamma): components, cycle interiors, separating cycles.

Coordinates are axial: ``(i, j)`` sits at ``i*gamma*(1, 0) + j*gamma*(1/2, sqrt(3)/2)``.
All topology (point-in-polygon, interiors, areas) is computed on the integer
axial coordinates, which are an affine image of the plane embedding, so no
floating point enters the combinatorial core. Edge midpoints are handled by
doubling every coordinate.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, NamedTuple

import numpy as np

from . import kernels
from .geometry import Point
from .oracle import ColouringOracle

SQRT3_2 = math.sqrt(3) / 2
OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class LatticeCoord(NamedTuple):
    i: int
    j: int


VertexSet = frozenset  # of LatticeCoord


class ComponentCapExceeded(RuntimeError):
    pass


class NonUniqueMinimum(AssertionError):
    pass


@dataclass(frozen=True)
class LatticeSpec:
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")


def embed(spec: LatticeSpec, c: tuple[int, int]) -> Point:
    i, j = c
    return Point(spec.gamma * (i + j / 2), spec.gamma * j * SQRT3_2)


def neighbours(c: tuple[int, int]) -> list[LatticeCoord]:
    i, j = c
    return [LatticeCoord(i + di, j + dj) for di, dj in OFFSETS]


def lattice_distance(a: tuple[int, int], b: tuple[int, int]) -> int:
    di, dj = a[0] - b[0], a[1] - b[1]
    return (abs(di) + abs(dj) + abs(di + dj)) // 2


def adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return lattice_distance(a, b) == 1


def common_neighbours(v: tuple[int, int], w: tuple[int, int]) -> tuple[LatticeCoord, LatticeCoord]:
    """The two lattice vertices adjacent to both ends of the edge ``vw``."""
    di, dj = w[0] - v[0], w[1] - v[1]
    # Rotating the edge vector by +-60 degrees in axial coordinates.
    left = (-dj, di + dj)
    right = (di + dj, -di)
    return (LatticeCoord(v[0] + left[0], v[1] + left[1]),
            LatticeCoord(v[0] + right[0], v[1] + right[1]))


def is_connected(m: Iterable[tuple[int, int]]) -> bool:
    m = set(m)
    if not m:
        return False
    start = next(iter(m))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for n in neighbours(c):
            if n in m and n not in seen:
                seen.add(n)
                todo.append(n)
    return len(seen) == len(m)


def monochromatic_component(oracle: ColouringOracle, spec: LatticeSpec, start: tuple[int, int],
                            cap: int = 1_000_000) -> frozenset[LatticeCoord]:
    """Breadth-first closure of ``start`` over same-coloured lattice neighbours."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    start = LatticeCoord(*start)
    colour = oracle(embed(spec, start))
    seen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for n in neighbours(c):
            if n in seen:
                continue
            if oracle(embed(spec, n)) == colour:
                seen.add(n)
                if len(seen) > cap:
                    raise ComponentCapExceeded(
                        f"monochromatic component from {tuple(start)} exceeds {cap} vertices")
                queue.append(n)
    return frozenset(seen)


def euclidean_diameter(spec: LatticeSpec, m: Iterable[tuple[int, int]]) -> float:
    coords = np.array(list(m), dtype=np.float64)
    if len(coords) < 2:
        return 0.0
    xy = np.column_stack([spec.gamma * (coords[:, 0] + coords[:, 1] / 2),
                          spec.gamma * coords[:, 1] * SQRT3_2])
    best = 0.0
    for start in range(0, len(xy), 512):
        block = xy[start:start + 512]
        d2 = ((block[:, None, :] - xy[None, :, :]) ** 2).sum(axis=-1)
        best = max(best, float(d2.max()))
    return math.sqrt(best)


class LatticeCycle:
    """A simple closed walk on the lattice, stored in the given order.

    Equality ignores the starting vertex and the direction of travel.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[tuple[int, int]]):
        vs = tuple(LatticeCoord(*v) for v in vertices)
        if len(vs) < 3:
            raise ValueError("a lattice cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle is not simple: repeated vertex")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not adjacent(a, b):
                raise ValueError(f"consecutive vertices {tuple(a)} and {tuple(b)} are not adjacent")
        self.vertices = vs

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"LatticeCycle({[tuple(v) for v in self.vertices]})"

    def canonical(self) -> tuple[LatticeCoord, ...]:
        vs = self.vertices
        k = vs.index(min(vs))
        fwd = vs[k:] + vs[:k]
        bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
        return min(fwd, bwd)

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticeCycle) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def edges(self) -> list[tuple[LatticeCoord, LatticeCoord]]:
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))


def _doubled(vertices) -> tuple[np.ndarray, np.ndarray]:
    arr = np.array(vertices, dtype=np.int64).reshape(-1, 2) * 2
    return arr[:, 0].copy(), arr[:, 1].copy()


def _inside(vertices, queries_doubled: np.ndarray) -> np.ndarray:
    px, py = _doubled(vertices)
    q = np.asarray(queries_doubled, dtype=np.int64).reshape(-1, 2)
    return kernels.points_in_polygon(px, py, q[:, 0].copy(), q[:, 1].copy())


def _interior_of(vertices) -> frozenset[LatticeCoord]:
    arr = np.array(vertices, dtype=np.int64)
    (i0, j0), (i1, j1) = arr.min(axis=0), arr.max(axis=0)
    ii, jj = np.meshgrid(np.arange(i0, i1 + 1), np.arange(j0, j1 + 1), indexing="ij")
    cand = np.column_stack([ii.ravel(), jj.ravel()])
    on = set(map(tuple, vertices))
    keep = np.array([tuple(c) not in on for c in cand.tolist()], dtype=bool)
    cand = cand[keep]
    if len(cand) == 0:
        return frozenset()
    hit = _inside(vertices, cand * 2)
    return frozenset(LatticeCoord(int(a), int(b)) for a, b in cand[hit].tolist())


def cycle_interior(cycle: LatticeCycle) -> frozenset[LatticeCoord]:
    """Lattice vertices strictly inside the embedded polygon."""
    return _interior_of(cycle.vertices)


def is_separating_cycle(cycle: LatticeCycle, m: Iterable[tuple[int, int]]) -> bool:
    m = [LatticeCoord(*c) for c in m]
    on = set(cycle.vertices)
    if any(c in on for c in m):
        return False
    if not m:
        return True
    return bool(_inside(cycle.vertices, np.array(m, dtype=np.int64) * 2).all())


def interior_count(vertices) -> int:
    """Pick's theorem on the axial integer lattice: I = A - B/2 + 1."""
    arr = np.array(vertices, dtype=np.int64)
    x, y = arr[:, 0], arr[:, 1]
    twice_area = abs(int((x * np.roll(y, -1) - np.roll(x, -1) * y).sum()))
    return (twice_area - len(arr) + 2) // 2


def hexagon_ring(center: tuple[int, int], radius: int) -> LatticeCycle:
    """All vertices at lattice distance exactly ``radius`` from ``center``, in order."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    walk = ((-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0), (0, 1))
    c = (center[0] + radius, center[1])
    out = []
    for di, dj in walk:
        for _ in range(radius):
            out.append(c)
            c = (c[0] + di, c[1] + dj)
    return LatticeCycle(out)


StepTrace = Callable[[str, int, int], None]


def minimize_separating_cycle(m: Iterable[tuple[int, int]], trace: StepTrace | None = None,
                              verify_steps: bool = False) -> LatticeCycle:
    """Shrink a large enclosing hexagon until every cycle edge sees ``m``.

    An edge ``vw`` is settled when one of its two common lattice neighbours is
    in ``m``. For an unsettled edge:

    * rule 1: if a common neighbour ``y`` is interior, route the cycle
      ``v, y, w``; the interior loses exactly ``y``.
    * rule 2: otherwise some common neighbour lies on the cycle and one of the
      chords it forms with ``v`` or ``w`` runs through the interior; cut the
      cycle along that chord and keep the half that still encloses ``m``.

    ``trace(rule, |int C|, |V(C)|)`` is called after every step. With
    ``verify_steps`` the interior is recomputed from scratch after each step
    and the monotonicity of both counts is asserted.
    """
    mset = frozenset(LatticeCoord(*c) for c in m)
    if not mset:
        raise ValueError("m must be non-empty")
    if not is_connected(mset):
        raise ValueError("m must be connected")
    ci = round(sum(c.i for c in mset) / len(mset))
    cj = round(sum(c.j for c in mset) / len(mset))
    centre = (ci, cj)
    radius = max(lattice_distance(centre, c) for c in mset) + 2
    cyc = list(hexagon_ring(centre, radius).vertices)
    interior = set(_interior_of(cyc))
    probe = min(mset)

    idx = 0
    settled = 0
    while settled < len(cyc):
        n = len(cyc)
        v, w = cyc[idx % n], cyc[(idx + 1) % n]
        x, y = common_neighbours(v, w)
        if x in mset or y in mset:
            idx = (idx + 1) % n
            settled += 1
            continue
        before = (len(interior), len(cyc))
        inner = next((c for c in (x, y) if c in interior), None)
        if inner is not None:
            cyc.insert(idx % n + 1, inner)
            interior.discard(inner)
            rule = "insert"
            restart = idx % n
        else:
            cyc, interior, restart = _cut_along_chord(cyc, interior, idx % n, (x, y), probe)
            rule = "cut"
        if trace is not None:
            trace(rule, len(interior), len(cyc))
        if verify_steps:
            fresh = _interior_of(cyc)
            assert fresh == interior, "maintained interior diverged"
            assert mset <= fresh, "cycle stopped separating m"
            if rule == "insert":
                assert len(interior) < before[0]
            else:
                assert len(cyc) < before[1] and len(interior) <= before[0]
        idx = (restart - 1) % len(cyc)
        settled = 0
    return LatticeCycle(cyc)


def _cut_along_chord(cyc, interior, idx, shared, probe):
    n = len(cyc)
    pos = {c: k for k, c in enumerate(cyc)}
    ends = (idx, (idx + 1) % n)
    for ka in ends:
        a = cyc[ka]
        for b in shared:
            kb = pos.get(b)
            if kb is None or (kb - ka) % n in (1, n - 1):
                continue
            mid = np.array([[a.i + b.i, a.j + b.j]], dtype=np.int64)
            if not _inside(cyc, mid)[0]:
                continue
            lo, hi = min(ka, kb), max(ka, kb)
            piece1 = cyc[lo:hi + 1]
            piece2 = cyc[hi:] + cyc[:lo + 1]
            if _inside(piece1, np.array([[2 * probe.i, 2 * probe.j]]))[0]:
                keep, drop = piece1, piece2
            else:
                keep, drop = piece2, piece1
            new_interior = interior - _interior_of(drop)
            return keep, new_interior, keep.index(a)
    raise AssertionError(f"no reduction applies to cycle edge {tuple(cyc[idx])}-{tuple(cyc[(idx + 1) % n])}")


def neighbourhood(m: Iterable[tuple[int, int]], radius: int) -> frozenset[LatticeCoord]:
    out = {LatticeCoord(*c) for c in m}
    frontier = set(out)
    for _ in range(radius):
        frontier = {n for c in frontier for n in neighbours(c)} - out
        out |= frontier
    return frozenset(out)


def brute_force_minimal_cycle(m: Iterable[tuple[int, int]], window: Iterable[tuple[int, int]] | None = None,
                              margin: int = 2, max_window: int = 80) -> LatticeCycle:
    """Exhaustive least separating cycle by ``(|int C|, |V(C)|)`` inside ``window``.

    Candidate interiors ``I`` are tried by increasing size. A cycle with
    interior exactly ``I`` must pass through every vertex adjacent to ``I``
    (an edge from inside to outside would have to cross the cycle, and lattice
    edges only meet at vertices), so for each ``I`` all simple cycles in the
    window through those forced vertices are enumerated, with a bound on
    length, and their interiors checked by Pick's theorem plus point-in-polygon.
    Raises ``NonUniqueMinimum`` if two distinct cycles attain the minimum.
    """
    mset = frozenset(LatticeCoord(*c) for c in m)
    if not mset:
        raise ValueError("m must be non-empty")
    if window is None:
        win = neighbourhood(mset, margin)
    else:
        win = frozenset(LatticeCoord(*c) for c in window)
        if not neighbourhood(mset, margin) <= win:
            raise ValueError(f"window does not contain m with margin {margin}")
    if len(win) > max_window:
        raise ValueError(f"window of {len(win)} vertices exceeds the limit of {max_window}")

    free = sorted(win - mset)
    for t in range(len(free) + 1):
        best_len = math.inf
        found: set[LatticeCycle] = set()
        for extra in combinations(free, t):
            inner = mset | frozenset(extra)
            forced = {nb for c in inner for nb in neighbours(c)} - inner
            if not forced <= win:
                continue
            allowed = win - inner
            if any(sum(nb in allowed for nb in neighbours(f)) < 2 for f in forced):
                continue
            for cyc in _cycles_through(sorted(forced), allowed, inner, best_len):
                if len(cyc) < best_len:
                    best_len = len(cyc)
                    found = set()
                found.add(LatticeCycle(cyc))
        if found:
            if len(found) > 1:
                raise NonUniqueMinimum(f"{len(found)} separating cycles share the minimum")
            return next(iter(found))
    raise ValueError("no separating cycle fits inside the window")


def _cycles_through(forced, allowed, inner, bound):
    """Simple cycles in ``allowed`` visiting all of ``forced`` with interior exactly ``inner``.

    Yields cycles of length <= the running bound (ties included).
    """
    forced_set = set(forced)
    start = forced[0]
    inner_arr = np.array(sorted(inner), dtype=np.int64) * 2
    n_inner = len(inner)
    adj = {c: [nb for nb in neighbours(c) if nb in allowed] for c in allowed}
    # Forced vertices first so that short cycles, and with them a tight bound, come early.
    for c in adj:
        adj[c].sort(key=lambda nb: (nb not in forced_set, nb))
    path = [start]
    on_path = {start}
    state = {"bound": bound}
    hits = [1]  # forced vertices on the path

    def rec(u):
        for nb in adj[u]:
            if nb == start:
                if len(path) >= 3 and hits[0] == len(forced) and len(path) <= state["bound"]:
                    if path[1] < path[-1] and _has_interior(path, inner_arr, n_inner):
                        state["bound"] = len(path)
                        yield list(path)
                continue
            if nb in on_path:
                continue
            is_forced = nb in forced_set
            if len(path) + 1 + (len(forced) - hits[0] - is_forced) > state["bound"]:
                continue
            path.append(nb)
            on_path.add(nb)
            hits[0] += is_forced
            if _still_closable(nb, start, forced_set, on_path, adj):
                yield from rec(nb)
            hits[0] -= is_forced
            on_path.discard(nb)
            path.pop()

    yield from rec(start)


def _still_closable(end, start, forced, on_path, adj) -> bool:
    """Necessary conditions for extending the path from ``end`` back to ``start``
    through every unvisited forced vertex: each such vertex keeps two usable
    neighbours, and all of them plus ``start`` are reachable off the path."""
    usable = lambda c: c not in on_path or c == end or c == start  # noqa: E731
    pending = [f for f in forced if f not in on_path]
    for f in pending:
        if sum(1 for nb in adj[f] if usable(nb)) < 2:
            return False
    targets = set(pending)
    targets.add(start)
    seen = {end}
    todo = [end]
    while todo and targets:
        c = todo.pop()
        for nb in adj[c]:
            if nb in seen:
                continue
            if nb == start:
                targets.discard(nb)
                continue
            if nb in on_path:
                continue
            seen.add(nb)
            targets.discard(nb)
            todo.append(nb)
    return not targets


def _has_interior(path, inner_arr, n_inner) -> bool:
    if interior_count(path) != n_inner:
        return False
    return bool(_inside(path, inner_arr).all())
