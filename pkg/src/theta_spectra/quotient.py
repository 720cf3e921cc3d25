"""Special partitions of signed complete graphs and their quotient matrices.

A special partition splits the vertices into ``p`` positive cliques followed
by ``q`` negative cliques, with a single sign on all edges between any two
blocks. The characteristic polynomial then factors as

    (x + 1)^(sum_{i<=p} n_i - p) * (x - 1)^(sum_{i>p} n_i - q) * charpoly(Q)
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .exactpoly import IntPoly, char_poly_exact
from .graphs import SignedCompleteGraph


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class SpecialPartition:
    blocks: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if any(not b for b in blocks):
            raise PartitionError("empty block")
        if not 0 <= self.p <= len(blocks):
            raise PartitionError(f"p={self.p} out of range for {len(blocks)} blocks")
        object.__setattr__(self, "blocks", blocks)

    @property
    def q(self) -> int:
        return len(self.blocks) - self.p

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def to_json(self) -> str:
        return json.dumps({"blocks": [list(b) for b in self.blocks], "p": self.p})

    @classmethod
    def from_json(cls, text: str) -> "SpecialPartition":
        data = json.loads(text)
        return cls(tuple(tuple(b) for b in data["blocks"]), data["p"])


@dataclass(frozen=True)
class PartitionViolation:
    kind: str                  # "internal" or "cross"
    blocks: tuple[int, ...]
    example: tuple[int, int]
    detail: str


def _check_cover(g: SignedCompleteGraph, part: SpecialPartition) -> None:
    seen = [v for b in part.blocks for v in b]
    if sorted(seen) != list(range(g.n)):
        raise PartitionError("blocks do not partition the vertex set")


def validate_special_partition(g: SignedCompleteGraph, part: SpecialPartition) -> PartitionViolation | None:
    """``None`` when ``part`` is special for ``g``, else the first violation found."""
    _check_cover(g, part)
    for i, block in enumerate(part.blocks):
        want = 1 if i < part.p else -1
        for u, v in combinations(block, 2):
            if g.sign(u, v) != want:
                kind = "positive" if want == 1 else "negative"
                return PartitionViolation("internal", (i,), (u, v),
                                          f"block {i} should be a {kind} clique")
    for i, j in combinations(range(len(part.blocks)), 2):
        ref = g.sign(part.blocks[i][0], part.blocks[j][0])
        for u in part.blocks[i]:
            for v in part.blocks[j]:
                if g.sign(u, v) != ref:
                    return PartitionViolation("cross", (i, j), (u, v),
                                              f"mixed signs between blocks {i} and {j}")
    return None


def quotient_matrix(g: SignedCompleteGraph, part: SpecialPartition) -> list[list[int]]:
    bad = validate_special_partition(g, part)
    if bad is not None:
        raise PartitionError(bad.detail + f" (pair {bad.example})")
    m = len(part.blocks)
    q = [[0] * m for _ in range(m)]
    for i, bi in enumerate(part.blocks):
        for j, bj in enumerate(part.blocks):
            if i == j:
                q[i][i] = (len(bi) - 1) * (1 if i < part.p else -1)
            else:
                # row sums of an equitable block are constant; compute one and
                # confirm it equals the sign-times-size shortcut
                row = sum(g.sign(bi[0], v) for v in bj)
                assert row == g.sign(bi[0], bj[0]) * len(bj)
                q[i][j] = row
    return q


def char_poly_from_quotient(g: SignedCompleteGraph, part: SpecialPartition) -> IntPoly:
    q = quotient_matrix(g, part)
    pos = sum(part.sizes[:part.p]) - part.p
    neg = sum(part.sizes[part.p:]) - part.q
    return IntPoly((1, 1)) ** pos * IntPoly((-1, 1)) ** neg * char_poly_exact(q)
