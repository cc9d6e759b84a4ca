"""Partitions, nodes, residues and the ladder words that build w_λ.

Diagrams are English: row 1 is the longest row, and the node (r, c) has
residue (c - r) mod l.
"""
from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from typing import NamedTuple


class Node(NamedTuple):
    row: int
    col: int


class Step(NamedTuple):
    """One divided power f_residue^(mult)."""

    residue: int
    mult: int


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; ``Partition()`` is ∅."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        if any(p == 0 for p in parts):
            raise ValueError(f"zero part inside partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based row length, 0 past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def nodes(self) -> list[Node]:
        return [Node(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1)]

    def add_node(self, node: Node) -> Partition:
        r = node.row
        parts = list(self) + [0] * (r - len(self))
        if parts[r - 1] != node.col - 1:
            raise ValueError(f"{node} is not addable to {self}")
        parts[r - 1] += 1
        return Partition(parts)

    def remove_node(self, node: Node) -> Partition:
        parts = list(self)
        if node.row > len(parts) or parts[node.row - 1] != node.col:
            raise ValueError(f"{node} is not removable from {self}")
        parts[node.row - 1] -= 1
        return Partition(parts)

    def all_addable(self) -> list[Node]:
        out = []
        for r in range(1, len(self) + 2):
            c = self.part(r) + 1
            if r == 1 or self.part(r - 1) >= c:
                out.append(Node(r, c))
        return out

    def all_removable(self) -> list[Node]:
        return [Node(r, p) for r, p in enumerate(self, 1) if self.part(r + 1) < p]

    def conjugate(self) -> Partition:
        return Partition(sum(1 for p in self if p >= c) for c in range(1, (self[0] if self else 0) + 1))

    def to_json(self) -> str:
        return json.dumps(list(self), separators=(",", ":"))

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(json.loads(text))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"

    __str__ = __repr__


def residue(node: Node, l: int) -> int:
    return (node.col - node.row) % l


def addable_nodes(lam: Partition, i: int, l: int) -> list[Node]:
    return [n for n in lam.all_addable() if residue(n, l) == i % l]


def removable_nodes(lam: Partition, i: int, l: int) -> list[Node]:
    return [n for n in lam.all_removable() if residue(n, l) == i % l]


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """lam ⊴ mu: every partial sum of mu is at least that of lam."""
    if lam.size != mu.size:
        raise ValueError(f"dominance compares partitions of one size, got {lam} and {mu}")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam.part(k + 1)
        b += mu.part(k + 1)
        if a > b:
            return False
    return True


def is_l_regular(lam: Partition, l: int) -> bool:
    return all(v < l for v in Counter(lam).values())


def ladder(node: Node, l: int) -> int:
    """James' l-ladder: nodes (r, c) and (r - (l-1), c + 1) share a ladder."""
    return node.row + (l - 1) * (node.col - 1)


def ladder_word(lam: Partition, l: int) -> tuple[Step, ...]:
    """Divided-power word whose action on ∅ has leading term |lam>.

    Steps are in written order, so the last step is applied first.
    """
    if not is_l_regular(lam, l):
        raise ValueError(f"{lam} is not {l}-regular")
    counts = Counter(ladder(n, l) for n in lam.nodes())
    applied = [Step((1 - v) % l, counts[v]) for v in sorted(counts)]
    return tuple(reversed(applied))


def ladder_path(lam: Partition, l: int) -> list[Partition]:
    """Partitions ∅ = ν_0 ⊂ ν_1 ⊂ ... ⊂ ν_k = lam, one per ladder of lam."""
    lam = Partition(lam)
    by_ladder: dict[int, list[Node]] = {}
    for n in lam.nodes():
        by_ladder.setdefault(ladder(n, l), []).append(n)
    path = [Partition()]
    cur: set[Node] = set()
    for v in sorted(by_ladder):
        cur.update(by_ladder[v])
        rows = Counter(n.row for n in cur)
        path.append(Partition(rows[r] for r in range(1, len(lam) + 1)))
    return path


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, regular_only: bool = False, l: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order (a descending extension of ⊴)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if regular_only and (l is None or l < 2):
        raise ValueError("regular_only needs l >= 2")
    parts = [Partition(p) for p in _partitions(n, n)]
    if regular_only:
        parts = [p for p in parts if is_l_regular(p, l)]
    return parts
