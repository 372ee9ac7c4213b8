"""Independent reference implementations shared by the test modules.

Nothing here imports from dyckmax: these are the little oracles the
package is held against, kept deliberately different from the code under
test (recurrences instead of binomials, dictionary walks instead of
series).
"""

from functools import lru_cache
from typing import List


def catalan_numbers(n_max: int) -> List[int]:
    """Catalan numbers C_0..C_n_max via the convolution recurrence."""
    out = [1]
    for n in range(n_max):
        out.append(sum(out[i] * out[n - i] for i in range(n + 1)))
    return out


def divisor_count(r: int) -> int:
    """Number of divisors by trial division."""
    return sum(1 for k in range(1, r + 1) if r % k == 0)


@lru_cache(maxsize=None)
def completions(steps_left: int, height: int) -> int:
    """Nonnegative +-1 walks of `steps_left` steps from `height` down to 0."""
    if height < 0 or height > steps_left:
        return 0
    if steps_left == 0:
        return 1
    return completions(steps_left - 1, height + 1) + completions(steps_left - 1, height - 1)


def unrank_dyck(n: int, index: int) -> str:
    """The index-th Dyck word of semi-length n in lexicographic order (u < d)."""
    word = []
    h = 0
    for pos in range(2 * n):
        left = 2 * n - pos - 1
        ways_up = completions(left, h + 1)
        if index < ways_up:
            word.append("u")
            h += 1
        else:
            index -= ways_up
            word.append("d")
            h -= 1
    assert index == 0 and h == 0
    return "".join(word)


def bounded_walks(length: int, hmax: int, end: int) -> int:
    """+-1 walks from 0 staying inside [0, hmax], ending at `end`."""
    counts = {0: 1}
    for _ in range(length):
        nxt: dict = {}
        for h, c in counts.items():
            if h + 1 <= hmax:
                nxt[h + 1] = nxt.get(h + 1, 0) + c
            if h - 1 >= 0:
                nxt[h - 1] = nxt.get(h - 1, 0) + c
        counts = nxt
    return counts.get(end, 0)
