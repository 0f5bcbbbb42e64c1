"""Brute-force ground truth for very small carriers.

Every reflexive relation on ``{0..n-1}`` is one bitmask over the ``n*n - n``
off-diagonal cells.  All masks are materialised at once and filtered with
vectorised bit operations, which keeps n = 5 (about a million candidates)
well under a second.  A relation is stored as a tuple of row bitmasks:
bit ``y`` of ``rows[x]`` is set iff ``x <= y``.

Zero-dimensionality is decided directly from the order: a finite space has
covering dimension 0 iff its Kolmogorov quotient order splits into
components that each have a greatest element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

MAX_ORDER_N = 5
MAX_PREORDER_N = 4


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def is_reflexive(self) -> bool:
        return all(self.leq(x, x) for x in range(self.n))

    def is_antisymmetric(self) -> bool:
        return all(
            not (self.leq(x, y) and self.leq(y, x))
            for x in range(self.n)
            for y in range(x + 1, self.n)
        )

    def is_transitive(self) -> bool:
        n = self.n
        return all(
            not (self.leq(x, y) and self.leq(y, z)) or self.leq(x, z)
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def has_greatest(self, among: list[int] | None = None) -> bool:
        pts = list(range(self.n)) if among is None else among
        return any(all(self.leq(x, g) for x in pts) for g in pts)

    def components(self) -> list[list[int]]:
        """Connected components of the comparability graph."""
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in range(self.n):
                    if not seen[y] and (self.leq(x, y) or self.leq(y, x)):
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def quotient(self) -> "Relation":
        """Identify x and y when x <= y and y <= x; classes ordered by least member."""
        cls = [-1] * self.n
        reps: list[int] = []
        for x in range(self.n):
            if cls[x] >= 0:
                continue
            cls[x] = len(reps)
            reps.append(x)
            for y in range(x + 1, self.n):
                if self.leq(x, y) and self.leq(y, x):
                    cls[y] = cls[x]
        k = len(reps)
        rows = tuple(
            sum(1 << b for b in range(k) if self.leq(reps[a], reps[b])) for a in range(k)
        )
        return Relation(k, rows)


def is_zero_dimensional_order(rel: Relation) -> bool:
    """Disjoint union of posets each having a greatest element."""
    return all(rel.has_greatest(comp) for comp in rel.components())


def _guard(n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise DomainError(f"brute force refuses n={n}; supported range is 1..{limit}")


def _reflexive_transitive(n: int, antisymmetric: bool) -> np.ndarray:
    """Row bitmasks of every reflexive transitive relation, shape (count, n)."""
    cells = [(x, y) for x in range(n) for y in range(n) if x != y]
    masks = np.arange(1 << len(cells), dtype=np.int64)
    rows = np.empty((n, masks.size), dtype=np.int64)
    for x in range(n):
        rows[x] = 1 << x
    for bit, (x, y) in enumerate(cells):
        rows[x] |= ((masks >> bit) & 1) << y
    keep = np.ones(masks.size, dtype=bool)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            x_le_y = (rows[x] >> y) & 1 == 1
            if antisymmetric and x < y:
                keep &= ~(x_le_y & ((rows[y] >> x) & 1 == 1))
            # x <= y forces every successor of y to be a successor of x
            keep &= ~x_le_y | (rows[y] & ~rows[x] == 0)
    return rows[:, keep].T


def partial_orders(n: int) -> list[Relation]:
    _guard(n, MAX_ORDER_N)
    return [Relation(n, tuple(int(v) for v in r)) for r in _reflexive_transitive(n, True)]


def preorders(n: int) -> list[Relation]:
    _guard(n, MAX_PREORDER_N)
    return [Relation(n, tuple(int(v) for v in r)) for r in _reflexive_transitive(n, False)]


def count_posets(n: int) -> int:
    _guard(n, MAX_ORDER_N)
    return int(_reflexive_transitive(n, True).shape[0])


def count_posets_with_greatest(n: int) -> int:
    _guard(n, MAX_ORDER_N)
    rows = _reflexive_transitive(n, True)
    # bit g survives the AND iff every x satisfies x <= g
    common = np.bitwise_and.reduce(rows, axis=1)
    return int(np.count_nonzero(common))


def count_zerodim_t0(n: int) -> int:
    return sum(1 for rel in partial_orders(n) if is_zero_dimensional_order(rel))


def count_zerodim(n: int) -> int:
    total = 0
    for rel in preorders(n):
        q = rel.quotient()
        assert q.is_partial_order(), "quotient of a pre-order must be a partial order"
        if is_zero_dimensional_order(q):
            total += 1
    return total
