"""Plane colourings, finite unit-distance witnesses and lower-bound certificates."""

from .chromatic import AbstractGraph, chromatic_number, is_k_colourable, optimal_colouring
from .explorer import (
    OracleNotProper,
    find_trichromatic_ball,
    five_colour_certificate,
    six_colour_certificate,
    validate_ball_certificate,
)
from .geometry import DistanceInterval, Point, RationalAngle, Tolerance, distance
from .kernels import BACKEND
from .lattice import (
    LatticeCoord,
    LatticeCycle,
    LatticeSpec,
    brute_force_minimal_cycle,
    minimize_separating_cycle,
    monochromatic_component,
)
from .oracle import ColouringOracle, OracleError
from .tiling import (
    CANONICAL,
    SquareTilingSpec,
    TilingOracle,
    colour_at,
    min_same_colour_separation,
    violation_search,
)
from .witness import (
    BoundarySpec,
    FiniteGeometricGraph,
    build_boundary_witness,
    build_wheel,
    moser_spindle,
    solve_odd_rotation,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractGraph", "BACKEND", "BoundarySpec", "CANONICAL", "ColouringOracle", "DistanceInterval",
    "FiniteGeometricGraph", "LatticeCoord", "LatticeCycle", "LatticeSpec", "OracleError",
    "OracleNotProper", "Point", "RationalAngle", "SquareTilingSpec", "TilingOracle", "Tolerance",
    "brute_force_minimal_cycle", "build_boundary_witness", "build_wheel", "chromatic_number",
    "colour_at", "distance", "find_trichromatic_ball", "five_colour_certificate",
    "is_k_colourable", "min_same_colour_separation", "minimize_separating_cycle",
    "monochromatic_component", "moser_spindle", "optimal_colouring", "six_colour_certificate",
    "solve_odd_rotation", "validate_ball_certificate", "violation_search",
]
