"""Symplectic tableaux over the ordered alphabet 1 < 1bar < 2 < 2bar < ...

Letters are encoded as ints: letter i unbarred -> 2*i, barred -> 2*i + 1,
so the natural int order matches the alphabet order.  A tableau stores its
rows as lists of codes; rows weakly increase, columns strictly increase,
and every entry in row r is >= letter r (the symplectic condition).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .partitions import Partition, partition


@dataclass(frozen=True, order=True)
class Letter:
    index: int
    barred: bool = False

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("letter index starts at 1")

    @property
    def code(self) -> int:
        return 2 * self.index + (1 if self.barred else 0)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code // 2, bool(code % 2))

    @classmethod
    def from_str(cls, s: str) -> "Letter":
        s = s.strip()
        if s.endswith("b"):
            return cls(int(s[:-1]), True)
        return cls(int(s), False)

    def __str__(self):
        return f"{self.index}b" if self.barred else str(self.index)


def letter_code(index: int, barred: bool) -> int:
    return 2 * index + (1 if barred else 0)


class SymplecticTableau:
    """Mutable symplectic tableau; rows hold int letter codes."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence[int]] = (), n: int | None = None):
        self.rows: List[List[int]] = [list(r) for r in rows]
        while self.rows and not self.rows[-1]:
            self.rows.pop()
        if n is None:
            n = max((c // 2 for r in self.rows for c in r), default=1)
        self.n = n

    @classmethod
    def empty(cls, n: int) -> "SymplecticTableau":
        return cls((), n)

    @classmethod
    def from_letters(cls, rows: Sequence[Sequence[Letter]], n: int | None = None):
        return cls([[l.code for l in r] for r in rows], n)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], n: int | None = None):
        return cls([[Letter.from_str(s).code for s in r] for r in rows], n)

    def copy(self) -> "SymplecticTableau":
        return SymplecticTableau([list(r) for r in self.rows], self.n)

    def shape(self) -> Partition:
        return partition(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_valid(self) -> bool:
        """Check all three tableau conditions."""
        for r, row in enumerate(self.rows, start=1):
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                return False
            if any(c < letter_code(r, False) for c in row):
                return False
            if any(c // 2 > self.n for c in row):
                return False
        for r in range(len(self.rows) - 1):
            if len(self.rows[r + 1]) > len(self.rows[r]):
                return False
            for j, c in enumerate(self.rows[r + 1]):
                if c <= self.rows[r][j]:
                    return False
        return True

    def weight(self) -> Tuple[int, ...]:
        """wt(P)_i = (# of i) - (# of i-bar), i = 1..n."""
        w = [0] * self.n
        for row in self.rows:
            for c in row:
                i = c // 2
                w[i - 1] += -1 if c % 2 else 1
        return tuple(w)

    def __eq__(self, other):
        return isinstance(other, SymplecticTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def to_json(self) -> list:
        return [[str(Letter.from_code(c)) for c in row] for row in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]], n: int | None = None):
        return cls.from_strings(data, n)

    def __repr__(self):
        return "SymplecticTableau(" + "; ".join(
            " ".join(str(Letter.from_code(c)) for c in row) for row in self.rows
        ) + f" | n={self.n})"


def word_weight(codes: Sequence[int], n: int) -> Tuple[int, ...]:
    w = [0] * n
    for c in codes:
        i = c // 2
        w[i - 1] += -1 if c % 2 else 1
    return tuple(w)


def is_weakly_increasing(codes: Sequence[int]) -> bool:
    return all(codes[i] <= codes[i + 1] for i in range(len(codes) - 1))


def enumerate_symplectic_tableaux(lam: Partition, n: int) -> Iterator[SymplecticTableau]:
    """All symplectic tableaux of shape lam over the 2n-letter alphabet.

    Row-by-row backtracking; the symplectic condition prunes each row at
    its minimum letter.
    """
    lam = partition(lam)
    if len(lam) > n:
        return
    rows: List[List[int]] = []

    def fill_row(r: int) -> Iterator[SymplecticTableau]:
        if r == len(lam):
            yield SymplecticTableau([list(x) for x in rows], n)
            return
        width = lam[r]
        above = rows[r - 1] if r > 0 else None
        lo = letter_code(r + 1, False)
        hi = letter_code(n, True)
        row = [0] * width

        def fill_cell(j: int) -> Iterator[SymplecticTableau]:
            if j == width:
                rows.append(row)
                yield from fill_row(r + 1)
                rows.pop()
                return
            start = max(lo, row[j - 1] if j > 0 else lo)
            if above is not None:
                start = max(start, above[j] + 1)
            for c in range(start, hi + 1):
                row[j] = c
                yield from fill_cell(j + 1)

        yield from fill_cell(0)

    yield from fill_row(0)
