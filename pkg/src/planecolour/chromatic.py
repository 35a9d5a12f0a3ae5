"""Exact chromatic numbers of small graphs, with optional precoloured vertices.

The decision procedure is DSATUR-ordered backtracking: always branch on the
uncoloured vertex whose neighbours show the most distinct colours, and open at
most one fresh colour per branch (fresh colours are interchangeable once the
precoloured classes are fixed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

DEFAULT_CAP = 64


class ChromaticCapExceeded(ValueError):
    pass


@dataclass
class AbstractGraph:
    n: int
    adjacency: list[frozenset[int]]
    precolour: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        for v in self.precolour:
            if not 0 <= v < self.n:
                raise ValueError(f"precoloured vertex {v} out of range")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], precolour: Mapping[int, int] | None = None
    ) -> AbstractGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n, [frozenset(s) for s in adj], dict(precolour or {}))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in sorted(self.adjacency[a]) if a < b]

    def with_edge(self, a: int, b: int) -> AbstractGraph:
        return AbstractGraph.from_edges(self.n, self.edges + [(a, b)], self.precolour)

    @cached_property
    def infeasible_precolouring(self) -> tuple[int, int] | None:
        """An edge whose two ends are precoloured alike, if any."""
        for a, b in self.edges:
            if a in self.precolour and b in self.precolour and self.precolour[a] == self.precolour[b]:
                return a, b
        return None

    def is_proper(self, colouring: list[int]) -> bool:
        if len(colouring) != self.n:
            return False
        if any(colouring[v] != c for v, c in self.precolour.items()):
            return False
        return all(colouring[a] != colouring[b] for a, b in self.edges)


class _Search:
    def __init__(self, g: AbstractGraph):
        self.g = g
        self.n = g.n
        self.adj = [sorted(s) for s in g.adjacency]
        # Precolour classes become internal colours 0..p-1.
        self.pre_ids = sorted(set(g.precolour.values()))
        self.pre_index = {c: i for i, c in enumerate(self.pre_ids)}

    def _to_external(self, internal: list[int]) -> list[int]:
        fresh = (c for c in range(len(self.pre_ids) + self.n + 1) if c not in self.pre_index)
        mapping = {i: c for i, c in enumerate(self.pre_ids)}
        for c in sorted(set(internal)):
            if c not in mapping:
                mapping[c] = next(fresh)
        return [mapping[c] for c in internal]

    def _init_state(self):
        colour = [-1] * self.n
        counts = [dict() for _ in range(self.n)]
        for v, c in sorted(self.g.precolour.items()):
            self._assign(v, self.pre_index[c], colour, counts)
        return colour, counts

    def _assign(self, v, c, colour, counts):
        colour[v] = c
        for u in self.adj[v]:
            cu = counts[u]
            cu[c] = cu.get(c, 0) + 1

    def _unassign(self, v, colour, counts):
        c = colour[v]
        colour[v] = -1
        for u in self.adj[v]:
            cu = counts[u]
            if cu[c] == 1:
                del cu[c]
            else:
                cu[c] -= 1

    def _pick(self, colour, counts):
        best, key = -1, None
        for v in range(self.n):
            if colour[v] >= 0:
                continue
            free_deg = sum(1 for u in self.adj[v] if colour[u] < 0)
            k = (len(counts[v]), free_deg, -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def greedy(self) -> list[int]:
        colour, counts = self._init_state()
        for _ in range(self.n):
            v = self._pick(colour, counts)
            if v < 0:
                break
            c = 0
            while c in counts[v]:
                c += 1
            self._assign(v, c, colour, counts)
        return colour

    def solve(self, k: int) -> list[int] | None:
        p = len(self.pre_ids)
        if p > k:
            return None
        colour, counts = self._init_state()
        remaining = self.n - len(self.g.precolour)

        def rec(remaining: int, top: int) -> bool:
            if remaining == 0:
                return True
            v = self._pick(colour, counts)
            blocked = counts[v]
            if len(blocked) >= k:
                return False
            for c in range(min(k, top + 2)):
                if c in blocked:
                    continue
                self._assign(v, c, colour, counts)
                if rec(remaining - 1, max(top, c)):
                    return True
                self._unassign(v, colour, counts)
            return False

        if rec(remaining, p - 1):
            return colour
        return None


def max_clique_size(g: AbstractGraph) -> int:
    """Bron-Kerbosch with pivoting on bitmasks."""
    nbr = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
    best = 0

    def expand(size: int, cand: int, excl: int):
        nonlocal best
        if cand == 0:
            if excl == 0:
                best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        union = cand | excl
        pivot = max(range(g.n), key=lambda u: bin(cand & nbr[u]).count("1") if union >> u & 1 else -1)
        todo = cand & ~nbr[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            expand(size + 1, cand & nbr[v], excl & nbr[v])
            cand &= ~low
            excl |= low
            todo &= ~low

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return best


def is_k_colourable(g: AbstractGraph, k: int) -> list[int] | None:
    """A proper colouring with at most ``k`` colours respecting precolours, or None.

    None is also returned when the precolouring itself is improper; check
    ``g.infeasible_precolouring`` to tell the cases apart.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.infeasible_precolouring is not None:
        return None
    search = _Search(g)
    found = search.solve(k)
    if found is None:
        return None
    colouring = search._to_external(found)
    if not g.is_proper(colouring):  # pragma: no cover - solver invariant
        raise AssertionError("solver produced an improper colouring")
    return colouring


def optimal_colouring(g: AbstractGraph, cap: int = DEFAULT_CAP) -> tuple[int, list[int]]:
    if g.n < 1:
        raise ValueError("graph has no vertices")
    if g.n > cap:
        raise ChromaticCapExceeded(f"{g.n} vertices exceeds the cap of {cap}")
    if g.infeasible_precolouring is not None:
        a, b = g.infeasible_precolouring
        raise ValueError(f"adjacent vertices {a} and {b} are precoloured alike")
    search = _Search(g)
    upper = search.greedy()
    ub = max(upper) + 1
    lb = max(max_clique_size(g), len(search.pre_ids), 1)
    for k in range(lb, ub):
        found = search.solve(k)
        if found is not None:
            colouring = search._to_external(found)
            assert g.is_proper(colouring)
            return k, colouring
    colouring = search._to_external(upper)
    assert g.is_proper(colouring)
    return ub, colouring


def chromatic_number(g: AbstractGraph, cap: int = DEFAULT_CAP) -> int:
    return optimal_colouring(g, cap)[0]
