"""Independent reference computations used only by the tests."""

from itertools import product
from math import comb


def exponential_formula(ord_star, n_max):
    """ZDIM_T0(0..n_max) from the block decomposition recurrence.

    The block containing point 1 has some size k; choose its other k-1
    members, put one of ORD*(k) rooted orders on it, recurse on the rest.
    """
    a = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        a[n] = sum(comb(n - 1, k - 1) * ord_star[k] * a[n - k] for k in range(1, n + 1))
    return a


def rgs_brute_force(n):
    """All restricted growth strings of length n, by filtering {1..n}^n."""
    out = []
    for word in product(range(1, n + 1), repeat=n):
        top = 0
        for x in word:
            if x > top + 1:
                break
            top = max(top, x)
        else:
            out.append(word)
    return out


def stirling_by_sum(n, k):
    """S(n, k) from the inclusion-exclusion closed form."""
    from math import factorial

    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)
