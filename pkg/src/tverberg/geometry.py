"""Point configurations in rational d-space and closed half-space queries.

The JSON form keeps every coordinate as a "num/den" string so that files
round-trip exactly.  CSV input accepts either "p/q" entries or exact decimal
strings such as "1.25"; an optional trailing integer column carries color
class ids.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .linalg import (
    Vector,
    as_vector,
    clear_denominators,
    dot,
    int_rank,
    scalar_from_str,
    scalar_to_str,
    vec_sub,
)


@dataclass(frozen=True)
class PointConfig:
    """A finite list of points in R^dim, optionally tagged with color ids."""

    dim: int
    points: tuple[Vector, ...]
    colors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be a positive integer")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(
                    f"point {p} has {len(p)} coordinates, expected {self.dim}"
                )
        if self.colors is not None and len(self.colors) != len(self.points):
            raise ValueError("colors must align one-to-one with points")

    def __len__(self) -> int:
        return len(self.points)

    def color_classes(self) -> dict[int, list[int]]:
        """Point indices grouped by color id, in index order."""
        if self.colors is None:
            raise ValueError("configuration has no colors")
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            classes.setdefault(c, []).append(i)
        return classes


@dataclass(frozen=True)
class HalfSpace:
    """Closed half-space {x : <normal, x> >= offset}."""

    normal: Vector
    offset: Fraction

    def __post_init__(self) -> None:
        if all(a == 0 for a in self.normal):
            raise ValueError("half-space normal must be nonzero")

    def contains(self, x: Vector) -> bool:
        return dot(self.normal, x) >= self.offset

    def on_boundary(self, x: Vector) -> bool:
        return dot(self.normal, x) == self.offset


def make_config(
    points: Iterable[Iterable[int | str | Fraction]],
    colors: Sequence[int] | None = None,
) -> PointConfig:
    pts = tuple(as_vector(p) for p in points)
    if not pts:
        raise ValueError("a configuration needs at least one point")
    return PointConfig(
        dim=len(pts[0]),
        points=pts,
        colors=tuple(colors) if colors is not None else None,
    )


def side_counts(cfg: PointConfig, h: HalfSpace) -> tuple[int, int, int]:
    """(strictly inside, on boundary, strictly outside) counts for h.

    Inside means <normal, x> > offset; the closed half-space holds
    inside + boundary points.
    """
    if len(h.normal) != cfg.dim:
        raise ValueError("half-space dimension does not match the configuration")
    inside = boundary = outside = 0
    for p in cfg.points:
        s = dot(h.normal, p)
        if s > h.offset:
            inside += 1
        elif s == h.offset:
            boundary += 1
        else:
            outside += 1
    return inside, boundary, outside


def affine_rank(cfg: PointConfig) -> int:
    """Dimension of the affine span of the points (single point -> 0)."""
    if not cfg.points:
        return -1
    base = cfg.points[0]
    diffs = [clear_denominators(vec_sub(p, base)) for p in cfg.points[1:]]
    return int_rank(diffs)


def _affine_hull_contains_origin(points: Sequence[Vector], dim: int) -> bool:
    # 0 in aff{x_1..x_k}  iff  x_1 lies in span{x_i - x_1}, i.e. adjoining
    # x_1 to the difference set does not raise its rank.
    base = points[0]
    diffs = [clear_denominators(vec_sub(p, base)) for p in points[1:]]
    return int_rank(diffs) == int_rank(diffs + [clear_denominators(base)])


def general_position_wrt_origin(cfg: PointConfig) -> bool:
    """True iff no d of the points span an affine hyperplane through 0.

    Subsets that are affinely dependent span lower-dimensional flats and do
    not count as hyperplanes.
    """
    from itertools import combinations

    d = cfg.dim
    for subset in combinations(range(len(cfg.points)), d):
        pts = [cfg.points[i] for i in subset]
        base = pts[0]
        diffs = [clear_denominators(vec_sub(p, base)) for p in pts[1:]]
        if int_rank(diffs) != d - 1:
            continue  # not a hyperplane span
        if _affine_hull_contains_origin(pts, d):
            return False
    return True


def config_to_json(cfg: PointConfig) -> dict:
    out: dict = {
        "dimension": cfg.dim,
        "points": [[scalar_to_str(x) for x in p] for p in cfg.points],
    }
    if cfg.colors is not None:
        out["colors"] = list(cfg.colors)
    return out


def config_from_json(data: dict) -> PointConfig:
    try:
        dim = int(data["dimension"])
        raw_points = data["points"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed configuration JSON: {exc}") from exc
    points = tuple(tuple(scalar_from_str(x) for x in row) for row in raw_points)
    colors = data.get("colors")
    return PointConfig(
        dim=dim,
        points=points,
        colors=tuple(int(c) for c in colors) if colors is not None else None,
    )


def save_config(cfg: PointConfig, path: str | Path) -> None:
    Path(path).write_text(json.dumps(config_to_json(cfg), indent=2) + "\n")


def load_config(path: str | Path) -> PointConfig:
    """Load a configuration from .json or .csv (see module docstring)."""
    p = Path(path)
    if p.suffix.lower() == ".csv":
        return load_csv(p)
    return config_from_json(json.loads(p.read_text()))


def load_csv(path: str | Path, colored: bool | None = None) -> PointConfig:
    """Read one point per row; trailing integer column is treated as a color.

    When ``colored`` is None the color column is auto-detected: it is assumed
    present iff every row has the same width and the final entry of every row
    is a bare integer while at least one other column is not.  Pass
    ``colored=True``/``False`` to force the interpretation.
    """
    rows: list[list[str]] = []
    with open(path, newline="") as fh:
        for rec in csv.reader(fh):
            cells = [c.strip() for c in rec if c.strip() != ""]
            if cells:
                rows.append(cells)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError(f"{path}: rows have inconsistent widths")

    def is_bare_int(s: str) -> bool:
        return s.lstrip("+-").isdigit()

    if colored is None:
        last_all_int = all(is_bare_int(r[-1]) for r in rows)
        others_not_all_int = any(
            not all(is_bare_int(c) for c in r[:-1]) for r in rows
        )
        colored = width >= 2 and last_all_int and others_not_all_int
    if colored:
        if width < 2:
            raise ValueError(f"{path}: need a coordinate column before the colors")
        points = [[scalar_from_str(c) for c in r[:-1]] for r in rows]
        colors = [int(r[-1]) for r in rows]
        return make_config(points, colors)
    points = [[scalar_from_str(c) for c in r] for r in rows]
    return make_config(points)
