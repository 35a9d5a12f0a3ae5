"""Colouring oracles: total deterministic maps from plane points to colour ids."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Callable

import numpy as np

from .geometry import Point


class OracleError(RuntimeError):
    """The oracle itself failed (crashed, hung, or answered malformed data)."""


class ColouringOracle(ABC):
    """Base class for colourings of the plane.

    Subclasses implement :meth:`colour`. :meth:`colour_many` may be overridden
    with a vectorised version; the default loops over :meth:`colour`.
    """

    palette: int = 0
    name: str = "oracle"

    @abstractmethod
    def colour(self, p: Point) -> int: ...

    def __call__(self, p: Point) -> int:
        return self.colour(p)

    def colour_many(self, xs, ys) -> np.ndarray:
        return np.fromiter(
            (self.colour(Point(float(x), float(y))) for x, y in zip(xs, ys)),
            dtype=np.int64,
            count=len(xs),
        )


class ConstantOracle(ColouringOracle):
    def __init__(self, colour: int = 0):
        self._colour = colour
        self.palette = colour + 1
        self.name = f"constant:{colour}"

    def colour(self, p: Point) -> int:
        return self._colour

    def colour_many(self, xs, ys) -> np.ndarray:
        return np.full(len(xs), self._colour, dtype=np.int64)


class FunctionOracle(ColouringOracle):
    """Wrap a plain function ``(x, y) -> colour``."""

    def __init__(self, fn: Callable[[float, float], int], palette: int, name: str = "function"):
        self._fn = fn
        self.palette = palette
        self.name = name

    def colour(self, p: Point) -> int:
        return int(self._fn(p.x, p.y))


class StripeOracle(ColouringOracle):
    """Vertical stripes of equal width coloured cyclically; improper for width >= 1."""

    def __init__(self, width: float = 1.0, colours: int = 5):
        self.width = width
        self.palette = colours
        self.name = f"stripes:{width}x{colours}"

    def colour(self, p: Point) -> int:
        return math.floor(p.x / self.width) % self.palette

    def colour_many(self, xs, ys) -> np.ndarray:
        return np.floor(np.asarray(xs, dtype=np.float64) / self.width).astype(np.int64) % self.palette


class InjectiveLatticeOracle(ColouringOracle):
    """Gives every point a distinct colour (hash of its bit pattern); palette unbounded."""

    palette = 2**62
    name = "injective"

    def colour(self, p: Point) -> int:
        return hash((p.x, p.y)) & (2**62 - 1)
