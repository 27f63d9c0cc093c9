"""Exact arithmetic on integer partitions.

A partition is stored as a tuple of weakly decreasing positive integers.
Throughout this package the parts are the COLUMN lengths of the Young
diagram, so the diagram of (3, 2) has two columns of heights 3 and 2 and
its row lengths -- read off with :func:`transpose` -- are (2, 2, 1).
Row ``r`` always means the r-th row from the top.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a canonical partition tuple.

    Trailing zeros are dropped, so the empty tuple is the unique
    partition of weight 0.  Negative entries and increasing runs are
    rejected.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"parts must be positive integers, got {parts!r}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
    return p


def weight(p: Partition) -> int:
    """Total number of boxes."""
    return sum(p)


def transpose(p: Partition) -> Partition:
    """Conjugate partition: entry j counts the parts of size >= j."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def natural_leq(p: Partition, q: Partition) -> bool:
    """Natural (dominance-style) partial order via partial sums of transposes.

    Partitions of different weight are allowed; only the partial-sum
    inequalities are checked.
    """
    sp = sq = 0
    for a, b in zip_longest(transpose(p), transpose(q), fillvalue=0):
        sp += a
        sq += b
        if sp > sq:
            return False
    return True


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of the columns, sorted weakly decreasing."""
    return tuple(sorted(p + q, reverse=True))


def restrict(p: Partition, r: int) -> Partition:
    """First r rows of p, i.e. every column capped at length r."""
    if r < 0:
        raise ValueError("row count must be nonnegative")
    return partition(min(x, r) for x in p)


def contains(outer: Partition, inner: Partition) -> bool:
    """Columnwise containment: inner[i] <= outer[i] for all i."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of n with parts bounded by ``max_part``."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for head in range(top, 0, -1):
        for tail in partitions_of(n - head, head):
            yield (head,) + tail


def to_json(p: Partition) -> list[int]:
    return list(p)


def from_json(data) -> Partition:
    if not isinstance(data, (list, tuple)):
        raise ValueError(f"a partition must be a JSON array, got {data!r}")
    return partition(data)
