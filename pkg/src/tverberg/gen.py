"""Synthetic point configurations for experiments and tests.

All coordinates are small integers (as exact rationals), so downstream
arithmetic stays fast; randomized kinds are deterministic in the seed.
Duplicate points may occur in random output and are legal everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .geometry import PointConfig
from .linalg import Vector
from .rng import SplitMix64

MAX_GRID_POINTS = 100_000


def line_points(n: int) -> PointConfig:
    """The integers 1..n on the real line."""
    if n < 1:
        raise ValueError("need at least one point")
    return PointConfig(dim=1, points=tuple((Fraction(i),) for i in range(1, n + 1)))


def grid_points(side: int, dim: int) -> PointConfig:
    """The integer lattice cube {0, ..., side-1}^dim."""
    if side < 1:
        raise ValueError("side must be positive")
    if dim < 1:
        raise ValueError("dimension must be positive")
    if side**dim > MAX_GRID_POINTS:
        raise ValueError(f"grid would have {side**dim} points, cap is {MAX_GRID_POINTS}")
    points: List[Vector] = [()]
    for _ in range(dim):
        points = [p + (Fraction(v),) for p in points for v in range(side)]
    return PointConfig(dim=dim, points=tuple(points))


def _ball_point(rng: SplitMix64, dim: int, radius: int) -> Vector:
    # Rejection from the surrounding cube; acceptance is at worst ~0.02
    # in dimension 8, and generated instances stay in low dimension.
    r2 = radius * radius
    while True:
        coords = tuple(rng.next_below(2 * radius + 1) - radius for _ in range(dim))
        if sum(c * c for c in coords) <= r2:
            return tuple(Fraction(c) for c in coords)


def uniform_ball(n: int, dim: int, radius: int, seed: int) -> PointConfig:
    """n integer points drawn uniformly from the ball of the given radius."""
    if n < 1:
        raise ValueError("need at least one point")
    if dim < 1:
        raise ValueError("dimension must be positive")
    if radius < 1:
        raise ValueError("radius must be positive")
    rng = SplitMix64(seed)
    return PointConfig(
        dim=dim, points=tuple(_ball_point(rng, dim, radius) for _ in range(n))
    )


def colored_classes(classes: int, r: int, dim: int, radius: int, seed: int) -> PointConfig:
    """classes color classes of r random ball points each; class ids are 1-based
    and appear as r consecutive points per class."""
    if classes < 1:
        raise ValueError("need at least one class")
    if r < 1:
        raise ValueError("need at least one point per class")
    base = uniform_ball(classes * r, dim, radius, seed)
    colors = tuple(c for c in range(1, classes + 1) for _ in range(r))
    return PointConfig(dim=dim, points=base.points, colors=colors)
