"""Exact integer formulas: divisor counts, binomials, and maxima totals.

The totals of strict and weak left-to-right maxima over all Dyck paths of
semi-length n collapse to short sums of divisor-count differences against
a row of ballot numbers:

    strict_total(n) = sum_{r=1..n} (d(r+1) - d(r)) * ballot(n, r)
    weak_total(n)   = sum_{r=1..n} (d(r+2) - d(r)) * ballot(n, r)

where d(k) is the number of divisors of k and

    ballot(n, r) = C(2n-1, n-r) - C(2n-1, n-r-1).

Everything here is exact integer arithmetic; these functions are the fast
route the generating-function and brute-force routes are compared against.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional


class DivisorTable:
    """Divisor counts d(1)..d(capacity) from one sweep of a sieve."""

    __slots__ = ("capacity", "_counts")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        counts = [0] * (capacity + 1)
        for d in range(1, capacity + 1):
            for m in range(d, capacity + 1, d):
                counts[m] += 1
        self.capacity = capacity
        self._counts = counts

    def __getitem__(self, r: int) -> int:
        if not 1 <= r <= self.capacity:
            raise IndexError("divisor count requested outside 1..%d" % self.capacity)
        return self._counts[r]

    def __len__(self) -> int:
        return self.capacity


def divisor_table(capacity: int) -> DivisorTable:
    return DivisorTable(capacity)


def binomial(a: int, b: int) -> int:
    """C(a, b) with the usual zero outside 0 <= b <= a."""
    if a < 0:
        raise ValueError("binomial expects a non-negative top index")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    """Number of Dyck paths of semi-length n."""
    if n < 0:
        raise ValueError("semi-length must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def ballot(n: int, r: int) -> int:
    """C(2n-1, n-r) - C(2n-1, n-r-1) for 1 <= r <= n."""
    if not 1 <= r <= n:
        raise ValueError("ballot(n, r) needs 1 <= r <= n")
    return binomial(2 * n - 1, n - r) - binomial(2 * n - 1, n - r - 1)


def ballot_row(n: int) -> Iterator[tuple[int, int]]:
    """Yield (r, ballot(n, r)) for r = 1..n.

    One binomial evaluation starts the row; after that each entry follows
    by a multiplicative update, C(2n-1, n-r-1) = C(2n-1, n-r)*(n-r)/(n+r),
    so walking the whole row costs O(n) big-integer operations.
    """
    if n < 1:
        raise ValueError("semi-length must be >= 1")
    cur = math.comb(2 * n - 1, n - 1)
    for r in range(1, n + 1):
        nxt = cur * (n - r) // (n + r)
        yield r, cur - nxt
        cur = nxt


def strict_total(n: int, table: Optional[DivisorTable] = None) -> int:
    """Total strict left-to-right maxima over all paths of semi-length n."""
    if n < 1:
        raise ValueError("semi-length must be >= 1")
    d = _table_for(n, table)
    return sum((d[r + 1] - d[r]) * w for r, w in ballot_row(n))


def weak_total(n: int, table: Optional[DivisorTable] = None) -> int:
    """Total weak left-to-right maxima over all paths of semi-length n."""
    if n < 1:
        raise ValueError("semi-length must be >= 1")
    d = _table_for(n, table)
    return sum((d[r + 2] - d[r]) * w for r, w in ballot_row(n))


def _table_for(n: int, table: Optional[DivisorTable]) -> DivisorTable:
    # weak_total reads d(n+2), hence the +2 capacity.
    if table is None:
        return DivisorTable(n + 2)
    if table.capacity < n + 2:
        raise ValueError("divisor table too small: need capacity >= %d" % (n + 2))
    return table
