"""Randomized search for partitions whose tolerance can be certified.

Uniform random labelings hit the target tolerance with constant
probability once the point count clears the closed-form bounds, so a
handful of seeded trials suffices.  Trial i always draws from the
substream (seed, i); reruns with the same seed reproduce the exact
same partitions and certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .depth import depth
from .geometry import PointConfig
from .partition import Partition
from .rng import SplitMix64, substream_seed
from .verify import (
    ReayReport,
    ToleranceReport,
    colored_tolerance,
    reay_tolerance,
    tolerance_by_lifted_depth,
)

DEFAULT_TRIALS = 64


@dataclass(frozen=True)
class SignAssignment:
    """One sign per point; the signed copies are signs[i] * points[i]."""

    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(s in (-1, 1) for s in self.signs):
            raise ValueError("signs must be -1 or +1")

    def to_json(self) -> dict:
        return {"signs": list(self.signs)}


@dataclass(frozen=True)
class ColorfulBlockChoice:
    """How one color class spreads over the parts: member position pos of
    the class goes to part images[pos]."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images must be a permutation of 1..r")


def random_partition(n: int, r: int, seed: int) -> Partition:
    """Partition of n points with labels drawn uniformly from 1..r."""
    if n < 1:
        raise ValueError("need at least one point")
    if r < 1:
        raise ValueError("need at least one part")
    rng = SplitMix64(seed)
    return Partition(r, tuple(rng.next_below(r) + 1 for _ in range(n)))


def random_block_choice(r: int, seed: int) -> ColorfulBlockChoice:
    """Uniform assignment of one class's r points onto the r parts."""
    if r < 1:
        raise ValueError("need at least one part")
    return ColorfulBlockChoice(tuple(SplitMix64(seed).permutation(r)))


def certified_partition(
    cfg: PointConfig,
    r: int,
    t_target: int,
    seed: int,
    max_trials: int = DEFAULT_TRIALS,
) -> Optional[Tuple[Partition, ToleranceReport]]:
    """First random partition (over max_trials seeded trials) whose
    certified tolerance reaches t_target, or None.

    When n <= r * t_target some part has at most t_target points under
    every labeling, so its removal breaks the intersection and no trial
    can succeed; that case returns None without sampling.
    """
    _check_search(r, t_target, max_trials)
    n = len(cfg.points)
    if n <= r * t_target:
        return None
    for i in range(max_trials):
        p = random_partition(n, r, substream_seed(seed, i))
        report = tolerance_by_lifted_depth(cfg, p)
        if report.tolerance >= t_target:
            return p, report
    return None


def certified_colored_partition(
    cfg: PointConfig,
    t_target: int,
    seed: int,
    max_trials: int = DEFAULT_TRIALS,
) -> Optional[Tuple[Partition, ToleranceReport]]:
    """Random rainbow partitions of a colored configuration until the
    class-removal tolerance reaches t_target, or None.

    Every color class must have the same size r >= 2; each trial sends
    each class onto the r parts by an independent uniform permutation.
    """
    classes = cfg.color_classes()
    sizes = {len(members) for members in classes.values()}
    if len(sizes) != 1:
        raise ValueError("color classes must all have the same size")
    r = sizes.pop()
    if r < 2:
        raise ValueError("color classes need at least two points each")
    _check_search(r, t_target, max_trials)
    if t_target > len(classes) - 1:
        return None

    n = len(cfg.points)
    colors = sorted(classes)
    for i in range(max_trials):
        rng = SplitMix64(substream_seed(seed, i))
        labels = [0] * n
        for color in colors:
            perm = rng.permutation(r)
            for pos, idx in enumerate(classes[color]):
                labels[idx] = perm[pos]
        p = Partition(r, tuple(labels))
        report = colored_tolerance(cfg, p)
        if report.tolerance >= t_target:
            return p, report
    return None


def certified_reay_partition(
    cfg: PointConfig,
    r: int,
    k: int,
    t_target: int,
    seed: int,
    max_trials: int = DEFAULT_TRIALS,
) -> Optional[Tuple[Partition, ReayReport]]:
    """Random partitions until every k of the r hulls tolerates t_target
    removals, or None.  Same pigeonhole refusal as certified_partition."""
    _check_search(r, t_target, max_trials)
    if not 2 <= k <= r:
        raise ValueError("k must lie in 2..r")
    n = len(cfg.points)
    if n <= r * t_target:
        return None
    for i in range(max_trials):
        p = random_partition(n, r, substream_seed(seed, i))
        report = reay_tolerance(cfg, p, k)
        if report.tolerance >= t_target:
            return p, report
    return None


def sign_assignment(
    cfg: PointConfig,
    seed: int,
    max_trials: int = DEFAULT_TRIALS,
) -> Tuple[SignAssignment, int]:
    """Best random sign flip over max_trials trials.

    The score of an assignment is the origin's half-space depth among
    the signed points minus one: the number of signed points one may
    delete, whichever they are, with the origin still in the hull.
    Returns the first assignment attaining the best score.
    """
    if max_trials < 1:
        raise ValueError("need at least one trial")
    n = len(cfg.points)
    origin = (0,) * cfg.dim
    best: Optional[Tuple[SignAssignment, int]] = None
    for i in range(max_trials):
        rng = SplitMix64(substream_seed(seed, i))
        signs = tuple(rng.next_sign() for _ in range(n))
        signed = PointConfig(
            dim=cfg.dim,
            points=tuple(
                tuple(s * x for x in pt) for s, pt in zip(signs, cfg.points)
            ),
        )
        tolerance = depth(signed, origin).depth - 1
        if best is None or tolerance > best[1]:
            best = (SignAssignment(signs), tolerance)
    assert best is not None
    return best


def _check_search(r: int, t_target: int, max_trials: int) -> None:
    if r < 2:
        raise ValueError("need at least two parts")
    if t_target < 0:
        raise ValueError("target tolerance must be nonnegative")
    if max_trials < 1:
        raise ValueError("need at least one trial")
