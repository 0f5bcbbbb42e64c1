"""Stirling numbers of the second kind, one triangle row at a time."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class StirlingRow:
    """Row ``n`` of the triangle; ``row[i]`` is S(n, i) for i in 1..n."""

    n: int
    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"S({self.n}, {i}) is outside 1..{self.n}")
        return self.entries[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def bell(self) -> int:
        """Total number of partitions of an n-set."""
        return sum(self.entries)


def stirling_row(n: int) -> StirlingRow:
    """Build row ``n`` bottom-up with S(k, i) = i*S(k-1, i) + S(k-1, i-1).

    Only the previous row is kept in memory.
    """
    if n < 1:
        raise DomainError(f"stirling row needs n >= 1, got {n}")
    row = [1]
    for k in range(2, n + 1):
        nxt = [1] * k
        for i in range(2, k):
            nxt[i - 1] = i * row[i - 1] + row[i - 2]
        row = nxt
    return StirlingRow(n, tuple(row))


def bell(n: int) -> int:
    return stirling_row(n).bell()
