"""Labeled partitions of point indices into r parts (ids 1..r)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """Assignment of each point index to a part id in 1..r.

    Parts may be empty; downstream certification treats an empty part as
    breaking the partition, but the type itself stays permissive so that
    exhaustive sweeps can enumerate every labeling.
    """

    r: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("a partition needs at least one part")
        bad = [l for l in self.labels if not 1 <= l <= self.r]
        if bad:
            raise ValueError(f"labels {bad} fall outside 1..{self.r}")

    def parts(self) -> list[list[int]]:
        """Index sets per part, position j holding part id j+1."""
        out: list[list[int]] = [[] for _ in range(self.r)]
        for i, l in enumerate(self.labels):
            out[l - 1].append(i)
        return out

    def part(self, part_id: int) -> list[int]:
        if not 1 <= part_id <= self.r:
            raise ValueError(f"part id {part_id} out of range 1..{self.r}")
        return [i for i, l in enumerate(self.labels) if l == part_id]

    def min_part_size(self) -> int:
        return min(len(p) for p in self.parts())

    def to_json(self) -> dict:
        return {"r": self.r, "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict) -> "Partition":
        return cls(r=int(data["r"]), labels=tuple(int(x) for x in data["labels"]))
