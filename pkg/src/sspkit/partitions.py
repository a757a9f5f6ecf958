"""Integer partitions, skew-shape predicates and Frobenius coordinates.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ``()``.  Parts beyond the stored length read as 0.  All values
are immutable, so they can be shared freely between workers and used as
dict keys.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, Tuple

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable into a partition tuple, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def part(p: Partition, i: int) -> int:
    """i-th part (1-based); 0 beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Partition) -> int:
    return sum(p)


def length(p: Partition) -> int:
    return len(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def intersect(p: Partition, q: Partition) -> Partition:
    """Componentwise min: the largest partition contained in both."""
    return tuple(min(a, b) for a, b in zip(p, q))


def is_horizontal_strip(lam: Partition, kap: Partition) -> bool:
    """True iff kap <= lam and lam/kap has at most one cell per column."""
    if not contains(lam, kap):
        return False
    return all(part(lam, i + 1) <= part(kap, i) for i in range(1, len(lam)))


def frobenius(p: Partition) -> Tuple[Partition, Partition]:
    """Frobenius coordinates (a | b): arm and leg lengths along the diagonal."""
    q = conjugate(p)
    a = []
    b = []
    d = 1
    while part(p, d) >= d:
        a.append(part(p, d) - d)
        b.append(part(q, d) - d)
        d += 1
    return tuple(a), tuple(b)


def from_frobenius(a: Sequence[int], b: Sequence[int]) -> Partition:
    """Rebuild the partition from Frobenius coordinates."""
    if len(a) != len(b):
        raise ValueError("arm and leg lists must have equal length")
    d = len(a)
    rows = [a[i] + i + 1 for i in range(d)]
    # legs determine column heights below the diagonal
    cols = [b[i] + i + 1 for i in range(d)]
    height = cols[0] if cols else 0
    out = []
    for r in range(1, height + 1):
        if r <= d:
            out.append(rows[r - 1])
        else:
            out.append(sum(1 for c in cols if c >= r))
    return partition(out)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_length: int | None = None) -> Tuple[Partition, ...]:
    """All partitions of exactly n (optionally with at most max_length rows)."""
    if n < 0:
        return ()
    out: list[Partition] = []

    def rec(rem: int, mx: int, acc: Tuple[int, ...]):
        if rem == 0:
            out.append(acc)
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for k in range(min(rem, mx), 0, -1):
            rec(rem - k, k, acc + (k,))

    rec(n, n, ())
    return tuple(sorted(out))


def enumerate_partitions(max_size: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of size <= max_size, ordered by (size, lex)."""
    out: list[Partition] = []
    for n in range(max_size + 1):
        out.extend(partitions_of(n, max_length))
    return out


def is_frobenius_staircase(p: Partition) -> bool:
    """True iff the Frobenius coordinates satisfy b_i = a_i + 1."""
    a, b = frobenius(p)
    return all(bi == ai + 1 for ai, bi in zip(a, b))


def enumerate_frobenius_staircase(max_size: int) -> list[Partition]:
    """Partitions with Frobenius legs = arms + 1, up to the given size.

    These index the signed skew expansion of the universal symplectic
    characters; each such partition has even size.
    """
    return [p for p in enumerate_partitions(max_size) if is_frobenius_staircase(p)]


def to_json(p: Partition) -> list[int]:
    return list(p)


def from_json(data: Sequence[int]) -> Partition:
    return partition(data)
