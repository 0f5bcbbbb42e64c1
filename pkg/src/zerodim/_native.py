"""Compiled counting kernels with exact residue accumulation.

The kernels walk the same loops as the pure-Python generators but keep the
running sum as residues modulo ``2**64`` and four primes just below
``2**32``.  Every product of two residues fits an unsigned 64-bit word, and
the combined modulus (about ``2**192``) exceeds ``Bell(n) * max leaf
product`` for every n the ORD* table supports, so the Chinese remainder
reconstruction returns the exact integer.  :func:`check_capacity` enforces
that bound before a kernel is used.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numba import njit

from .order_tables import OrdStarTable
from .stirling import bell

_Q1 = np.uint64(4294967291)
_Q2 = np.uint64(4294967279)
_Q3 = np.uint64(4294967231)
_Q4 = np.uint64(4294967197)
_ONE = np.uint64(1)

MODULI = (2**64, int(_Q1), int(_Q2), int(_Q3), int(_Q4))
LANES = len(MODULI)
CAPACITY = 2**64 * int(_Q1) * int(_Q2) * int(_Q3) * int(_Q4)


@njit(nogil=True, cache=True)
def _add_leaf(d, top, pres, acc):
    # lane 0 wraps mod 2**64 by construction
    a0 = _ONE
    a1 = _ONE
    a2 = _ONE
    a3 = _ONE
    a4 = _ONE
    for j in range(top):
        s = d[j]
        if s > 1:
            a0 = a0 * pres[0, s]
            a1 = a1 * pres[1, s] % _Q1
            a2 = a2 * pres[2, s] % _Q2
            a3 = a3 * pres[3, s] % _Q3
            a4 = a4 * pres[4, s] % _Q4
    acc[0] += a0
    acc[1] = (acc[1] + a1) % _Q1
    acc[2] = (acc[2] + a2) % _Q2
    acc[3] = (acc[3] + a3) % _Q3
    acc[4] = (acc[4] + a4) % _Q4


@njit(nogil=True, cache=True)
def recursive_kernel(n, m, d, i, pres, acc):
    """Backtracking over block sizes from prefix length ``i`` with ``m`` blocks."""
    if i >= n:
        _add_leaf(d, m, pres, acc)
        return
    for j in range(m):
        d[j] += 1
        recursive_kernel(n, m, d, i + 1, pres, acc)
        d[j] -= 1
    d[m] = 1
    recursive_kernel(n, m + 1, d, i + 1, pres, acc)
    d[m] = 0


@njit(nogil=True, cache=True)
def iterative_kernel(n, pres, acc):
    """``setpart1`` loop with ``d`` recounted from ``c`` at every codeword (n >= 2)."""
    c = np.zeros(n + 1, dtype=np.int64)
    g = np.zeros(n + 1, dtype=np.int64)
    d = np.zeros(n + 1, dtype=np.int64)
    calc = False
    r = 0
    while True:
        while r < n - 1:
            r += 1
            c[r] = 1
            g[r] = g[r - 1]
        for j in range(1, g[n - 1] + 2):
            c[n] = j
            if calc:
                for k in range(1, n + 1):
                    d[k] = 0
                for k in range(1, n + 1):
                    d[c[k]] += 1
                _add_leaf(d[1:], n, pres, acc)
            calc = True
        while r > 0 and c[r] > g[r - 1]:
            r -= 1
        c[r] += 1
        if c[r] > g[r]:
            g[r] = c[r]
        if r == 1:
            break


def new_accumulator() -> np.ndarray:
    return np.zeros(LANES, dtype=np.uint64)


def residue_table(ord_star: OrdStarTable, n: int) -> np.ndarray:
    """``pres[lane, s] = ORD*(s) mod MODULI[lane]`` for s in 1..n; column 0 unused."""
    pres = np.ones((LANES, n + 1), dtype=np.uint64)
    for s in range(1, n + 1):
        value = ord_star[s]
        for lane, mod in enumerate(MODULI):
            pres[lane, s] = value % mod
    return pres


def reconstruct(acc: np.ndarray) -> int:
    """Chinese remainder reconstruction of the accumulated residues."""
    x, modulus = 0, 1
    for r, p in zip(acc.tolist(), MODULI):
        t = ((r - x) * pow(modulus, -1, p)) % p
        x += modulus * t
        modulus *= p
    return x


@lru_cache(maxsize=None)
def leaf_bound(n: int, ord_star: OrdStarTable) -> int:
    """Upper bound on the sum: ``Bell(n)`` times the largest single-partition product."""
    best = [1] * (n + 1)
    for k in range(1, n + 1):
        best[k] = max(ord_star[p] * best[k - p] for p in range(1, k + 1))
    return bell(n) * best[n]


def check_capacity(n: int, ord_star: OrdStarTable) -> None:
    if leaf_bound(n, ord_star) >= CAPACITY:
        raise OverflowError(f"residue lanes cannot represent the sum for n={n} exactly")
