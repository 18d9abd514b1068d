"""Abstract point/block incidence structures.

Points and blocks are numbered from 1, so the Fano plane below can be read
side by side with the usual labelling of its seven hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional


@dataclass(frozen=True)
class IncidenceDesign:
    n_points: int
    blocks: tuple  # tuple of sorted tuples of 1-based point labels

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        for b in blocks:
            if len(b) < 2:
                raise ValueError(f"block {list(b)} has fewer than two points")
            if len(set(b)) != len(b):
                raise ValueError(f"block {list(b)} repeats a point")
            if b[0] < 1 or b[-1] > self.n_points:
                raise ValueError(f"block {list(b)} leaves the point range 1..{self.n_points}")
        if len(set(blocks)) != len(blocks):
            raise ValueError("duplicate block")
        object.__setattr__(self, "blocks", blocks)

    def block(self, index: int) -> tuple:
        """Block by its 1-based label."""
        return self.blocks[index - 1]


FANO_BLOCKS = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_plane() -> IncidenceDesign:
    return IncidenceDesign(7, FANO_BLOCKS)


def blocks_through(design: IncidenceDesign, pt: int) -> list[int]:
    """1-based labels of the blocks containing ``pt``, ascending."""
    if not 1 <= pt <= design.n_points:
        raise ValueError(f"point {pt} outside 1..{design.n_points}")
    return [i for i, b in enumerate(design.blocks, start=1) if pt in b]


def uncovered_pair(design: IncidenceDesign) -> Optional[tuple[int, int]]:
    """First point pair lying in no block of size at least three."""
    big = [set(b) for b in design.blocks if len(b) >= 3]
    for p, q in combinations(range(1, design.n_points + 1), 2):
        if not any(p in b and q in b for b in big):
            return p, q
    return None


def is_pairwise_covered(design: IncidenceDesign) -> tuple[bool, Optional[tuple[int, int]]]:
    witness = uncovered_pair(design)
    return witness is None, witness


def to_json(design: IncidenceDesign) -> dict:
    return {"n_points": design.n_points, "blocks": [list(b) for b in design.blocks]}


def from_json(obj: dict) -> IncidenceDesign:
    return IncidenceDesign(int(obj["n_points"]), tuple(tuple(int(p) for p in b) for b in obj["blocks"]))
