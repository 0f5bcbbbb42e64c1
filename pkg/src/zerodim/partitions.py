"""Set-partition generators over restricted growth strings.

A partition of ``{1..n}`` is encoded by its codeword ``c``: ``c[k] = j`` iff
``k`` lies in block ``j``, with blocks numbered in order of their smallest
element.  Its block-size vector ``d`` holds ``d[j] = |{k : c[k] = j}|``.

Three generators are provided:

* :func:`generate_iterative` is the loop-based ``setpart1`` scheme with its
  two sentinel arrays, emitting codewords in the order of the classic n=4
  table ``(1,1,1,1), (1,1,1,2), ..., (1,2,3,4)``.
* :func:`generate_recursive_codewords` is the plain backtracking scheme that
  appends either an existing label or ``max + 1``.
* :func:`generate_recursive` is the same backtracking scheme with the
  codeword dropped; only ``m`` (number of blocks so far) and the
  incrementally maintained ``d`` survive.

Visitors are called synchronously.  The buffers they see are owned by the
generator and reused, so copy anything that must outlive the call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError

Codeword = tuple[int, ...]


@dataclass(slots=True)
class GeneratorState:
    """State of the recursive generator after placing the first ``i`` points.

    ``d`` has length ``n``; ``d[j]`` is the size of block ``j + 1`` of the
    prefix partition and is zero for ``j >= m``.
    """

    n: int
    m: int
    d: list[int]
    i: int

    @classmethod
    def root(cls, n: int) -> "GeneratorState":
        """The empty prefix: nothing placed yet."""
        return cls(n, 0, [0] * n, 0)

    def clone(self) -> "GeneratorState":
        return GeneratorState(self.n, self.m, list(self.d), self.i)

    def children(self) -> list["GeneratorState"]:
        """Fresh copies of every one-point extension, existing blocks first."""
        out = []
        for j in range(self.m):
            child = GeneratorState(self.n, self.m, list(self.d), self.i + 1)
            child.d[j] += 1
            out.append(child)
        child = GeneratorState(self.n, self.m + 1, list(self.d), self.i + 1)
        child.d[self.m] = 1
        out.append(child)
        return out

    @property
    def is_leaf(self) -> bool:
        return self.i >= self.n


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"partitions need n >= 1, got {n}")


def generate_iterative(n: int, visit: Callable[[Codeword], object]) -> None:
    """Visit every codeword of length ``n`` in ``setpart1`` order.

    ``g[r]`` tracks the largest label among ``c[1..r]``.  The first pass of
    the repeat loop only primes the sentinels ``c[0]``/``g[0]``; the codeword
    it builds is produced again on the second pass, so ``calc`` suppresses it.
    """
    _check_n(n)
    if n == 1:
        visit((1,))
        return
    calc = False
    c = [0] * (n + 1)
    g = [0] * (n + 1)
    r = 0
    while True:
        while r < n - 1:
            r += 1
            c[r] = 1
            g[r] = g[r - 1]
        for j in range(1, g[n - 1] + 2):
            c[n] = j
            if calc:
                visit(tuple(c[1:]))
            calc = True
        # r > 0 stands in for reading g[-1] during the priming pass
        while r > 0 and c[r] > g[r - 1]:
            r -= 1
        c[r] += 1
        if c[r] > g[r]:
            g[r] = c[r]
        if r == 1:
            break


def generate_recursive_codewords(n: int, visit: Callable[[Codeword], object]) -> None:
    """Backtracking generator that still carries the codeword array."""
    _check_n(n)
    c = [0] * (n + 1)

    def rec(m: int, i: int) -> None:
        if i == n:
            visit(tuple(c[1:]))
            return
        for j in range(1, m + 1):
            c[i + 1] = j
            rec(m, i + 1)
        c[i + 1] = m + 1
        rec(m + 1, i + 1)

    c[1] = 1
    rec(1, 1)


def descend(state: GeneratorState, visit: Callable[[GeneratorState], object]) -> None:
    """Run the codeword-free backtracking below ``state``, visiting each leaf.

    ``state`` is mutated during the walk and restored on return.
    """
    n = state.n
    d = state.d

    def rec(i: int) -> None:
        if i >= n:
            state.i = i
            visit(state)
            return
        m = state.m
        for j in range(m):
            d[j] += 1
            rec(i + 1)
            d[j] -= 1
        state.m = m + 1
        d[m] = 1
        rec(i + 1)
        d[m] = 0
        state.m = m

    start = state.i
    rec(start)
    state.i = start


def generate_recursive(n: int, visit: Callable[[GeneratorState], object]) -> None:
    """Visit the block-size state of every partition of ``{1..n}``."""
    _check_n(n)
    descend(GeneratorState.root(n), visit)


def block_sizes(codeword: Sequence[int]) -> list[int]:
    """Recompute ``d`` from a codeword with the clear-then-count double loop."""
    n = len(codeword)
    d = [0] * n
    for label in codeword:
        d[label - 1] += 1
    return d


def is_restricted_growth(codeword: Sequence[int]) -> bool:
    if not codeword or codeword[0] != 1:
        return False
    top = 0
    for label in codeword:
        if label < 1 or label > top + 1:
            return False
        top = max(top, label)
    return True
