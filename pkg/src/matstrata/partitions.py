"""Integer partitions: the index set of both Jordan block data and strata."""

from __future__ import annotations

from typing import Iterator

from .errors import WeightMismatch


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "(%s)" % ",".join(str(p) for p in self)


def conjugate_partition(p: Partition) -> Partition:
    """Transpose of the Young diagram: part j of the result counts the
    parts of ``p`` that are >= j."""
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: every prefix sum of ``p`` is >= that of ``q``.

    Both partitions must have the same weight (shorter one is padded
    with zeros).
    """
    p, q = Partition(p), Partition(q)
    if p.weight != q.weight:
        raise WeightMismatch(
            "comparing partitions of %d and %d" % (p.weight, q.weight)
        )
    sum_p = sum_q = 0
    for k in range(max(len(p), len(q))):
        sum_p += p[k] if k < len(p) else 0
        sum_q += q[k] if k < len(q) else 0
        if sum_p < sum_q:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n == 0:
        yield Partition()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))
