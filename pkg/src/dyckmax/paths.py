"""Dyck paths by brute force: enumeration and per-path peak statistics.

A Dyck path of semi-length n is a word of n up-steps ('u') and n
down-steps ('d') whose running height never dips below zero.  A peak is an
up-step immediately followed by a down-step; its apex is the lattice point
between them.

Two flavours of left-to-right maximum are counted:

* strict: the apex is higher than every lattice point before it;
* weak: the apex is at least as high as every earlier peak apex.

This module is the ground truth the closed forms and generating functions
are checked against, so it stays deliberately naive; only the enumeration
loop is written with some care because it walks Catalan-many paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Iterator

UP = "u"
DOWN = "d"

DEFAULT_MAX_SEMI_LENGTH = 16
ENV_LIMIT = "DYCKMAX_MAX_N"


class EnumerationLimit(RuntimeError):
    """The requested semi-length exceeds the enumeration resource guard."""


def semi_length_limit() -> int:
    """Largest semi-length `enumerate_paths` accepts.

    Defaults to 16; the DYCKMAX_MAX_N environment variable overrides it.
    """
    raw = os.environ.get(ENV_LIMIT)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_SEMI_LENGTH
    return int(raw)


class DyckPath:
    """An immutable Dyck path, stored as its step word.

    Validation happens on construction: the word must consist of 'u'/'d'
    only, balance out, and never go below the ground line.
    """

    __slots__ = ("steps",)

    def __init__(self, steps):
        word = "".join(steps)
        h = 0
        for c in word:
            if c == UP:
                h += 1
            elif c == DOWN:
                h -= 1
                if h < 0:
                    raise ValueError("path dips below the ground line: %r" % word)
            else:
                raise ValueError("steps must be %r or %r, got %r" % (UP, DOWN, c))
        if h != 0:
            raise ValueError("path does not return to the ground line: %r" % word)
        self.steps = word

    @classmethod
    def _trusted(cls, word: str) -> "DyckPath":
        # Internal fast path for the enumerator, which only builds valid words.
        p = object.__new__(cls)
        p.steps = word
        return p

    @property
    def semi_length(self) -> int:
        return len(self.steps) // 2

    @property
    def height(self) -> int:
        h = best = 0
        for c in self.steps:
            h = h + 1 if c == UP else h - 1
            if h > best:
                best = h
        return best

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        if not isinstance(other, DyckPath):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __str__(self):
        return self.steps

    def __repr__(self):
        return "DyckPath(%r)" % self.steps


@dataclass(frozen=True)
class PathStats:
    semi_length: int
    height: int
    strict_ltr: int
    weak_ltr: int
    returns: int


@dataclass(frozen=True)
class HeightBucket:
    paths: int
    strict: int
    weak: int


@dataclass(frozen=True)
class TotalCounts:
    semi_length: int
    paths: int
    strict_total: int
    weak_total: int
    by_height: Dict[int, HeightBucket]


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semi-length n, in lexicographic step order (up < down).

    The resource guard is checked up front, before the first path is asked
    for; the walk itself is lazy.
    """
    limit = semi_length_limit()
    if n < 0:
        raise ValueError("semi-length must be >= 0")
    if n > limit:
        raise EnumerationLimit(
            "semi-length %d exceeds the enumeration guard %d "
            "(set %s to raise it)" % (n, limit, ENV_LIMIT)
        )
    return _walk(n)


def _walk(n: int) -> Iterator[DyckPath]:
    # Iterative successor walk over one mutable buffer: descend by always
    # taking the smallest step that still completes, then flip the rightmost
    # up-step whose down-alternative stays above ground.
    if n == 0:
        yield DyckPath._trusted("")
        return
    total = 2 * n
    steps: list[str] = []
    ups = downs = 0
    while True:
        while len(steps) < total:
            if ups < n:
                steps.append(UP)
                ups += 1
            else:
                steps.append(DOWN)
                downs += 1
        yield DyckPath._trusted("".join(steps))
        while steps:
            c = steps.pop()
            if c == UP:
                ups -= 1
                if ups > downs:  # height before this slot stays positive after 'd'
                    steps.append(DOWN)
                    downs += 1
                    break
            else:
                downs -= 1
        else:
            return


def stats(path: DyckPath) -> PathStats:
    """One pass over the word collecting height, both maxima counts, returns.

    The strict test used here is the literal one: the apex must exceed the
    maximum over all earlier lattice points.  `strict_maxima_peak_rule`
    implements the peak-to-peak reduction; the test suite asserts the two
    agree on every path.
    """
    h = 0
    max_incl = 0  # max height over points up to and including the previous one
    max_excl = 0  # same, excluding the previous point
    apex_best = 0
    strict = weak = rets = 0
    prev_up = False
    for c in path.steps:
        if c == UP:
            nh = h + 1
        else:
            nh = h - 1
            if prev_up:  # peak with apex at the previous point, height h
                if h > max_excl:
                    strict += 1
                if h >= apex_best:
                    weak += 1
                    apex_best = h
        if nh == 0:
            rets += 1
        max_excl = max_incl
        if nh > max_incl:
            max_incl = nh
        h = nh
        prev_up = c == UP
    return PathStats(
        semi_length=path.semi_length,
        height=max_incl,
        strict_ltr=strict,
        weak_ltr=weak,
        returns=rets,
    )


def strict_maxima(path: DyckPath) -> int:
    return stats(path).strict_ltr


def weak_maxima(path: DyckPath) -> int:
    return stats(path).weak_ltr


def returns(path: DyckPath) -> int:
    return stats(path).returns


def peaks(path: DyckPath) -> int:
    """Number of up-down corners."""
    return path.steps.count(UP + DOWN)


def strict_maxima_peak_rule(path: DyckPath) -> int:
    """Strict maxima counted by comparing each apex against earlier apexes only.

    Equivalent to the lattice-point definition: any earlier running maximum
    is itself realised at some peak apex.
    """
    best = 0
    count = 0
    h = 0
    prev_up = False
    for c in path.steps:
        if c == UP:
            h += 1
        else:
            if prev_up and h > best:
                count += 1
                best = h
            h -= 1
        prev_up = c == UP
    return count


def totals(n: int) -> TotalCounts:
    """Aggregate statistics over every path of semi-length n."""
    buckets: Dict[int, list[int]] = {}
    paths_seen = 0
    strict_sum = 0
    weak_sum = 0
    for p in enumerate_paths(n):
        s = stats(p)
        paths_seen += 1
        strict_sum += s.strict_ltr
        weak_sum += s.weak_ltr
        b = buckets.get(s.height)
        if b is None:
            buckets[s.height] = [1, s.strict_ltr, s.weak_ltr]
        else:
            b[0] += 1
            b[1] += s.strict_ltr
            b[2] += s.weak_ltr
    by_height = {
        h: HeightBucket(paths=b[0], strict=b[1], weak=b[2])
        for h, b in sorted(buckets.items())
    }
    return TotalCounts(
        semi_length=n,
        paths=paths_seen,
        strict_total=strict_sum,
        weak_total=weak_sum,
        by_height=by_height,
    )
