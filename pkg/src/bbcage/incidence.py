"""Point-block incidence structures shared by the geometry and design layers."""

from __future__ import annotations


class IncidenceStructure:
    """Points with optional payloads, blocks as sorted tuples of point indices.

    The tag dict carries construction metadata (family, q, order pair,
    gonality, field) used by downstream contracts.
    """

    def __init__(self, points, blocks, tag=None):
        self.points = list(points)
        n = len(self.points)
        clean = []
        for bi, blk in enumerate(blocks):
            t = tuple(blk)
            if any(not 0 <= x < n for x in t):
                raise ValueError(f"block {bi} has out-of-range point index")
            if len(set(t)) != len(t):
                raise ValueError(f"block {bi} repeats a point")
            if list(t) != sorted(t):
                t = tuple(sorted(t))
            clean.append(t)
        self.blocks = clean
        self.tag = dict(tag) if tag else {}
        self.point_blocks = [[] for _ in range(n)]
        for bi, blk in enumerate(self.blocks):
            for x in blk:
                self.point_blocks[x].append(bi)

    @property
    def num_points(self) -> int:
        return len(self.points)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> set[int]:
        return {len(b) for b in self.blocks}

    def point_degrees(self) -> set[int]:
        return {len(bs) for bs in self.point_blocks}

    def order_pair(self):
        return self.tag.get("order")

    def __repr__(self):
        fam = self.tag.get("family", "structure")
        return f"<{fam}: {self.num_points} points, {self.num_blocks} blocks>"
