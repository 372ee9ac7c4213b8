"""Every Dyck path of semi-length 4, with its maxima counted by hand.

A Dyck path is a string of u (up) and d (down) steps that starts and ends
on the axis and never dips below it.  A peak is an up step immediately
followed by a down step.  A peak is a strict left-to-right maximum when
its apex tops every lattice point before it, and a weak one when its apex
is at least as high as every earlier peak's apex.

Running this script lists all 14 paths of semi-length 4 with their
statistics, then aggregates: 19 strict and 29 weak maxima in total,
split by path height.
"""

from dyckmax import enumerate_paths, stats, totals


def main() -> None:
    n = 4
    print("All Dyck paths of semi-length %d:\n" % n)
    print("%-10s %6s %7s %5s %7s" % ("path", "height", "strict", "weak", "returns"))
    for p in enumerate_paths(n):
        s = stats(p)
        print(
            "%-10s %6d %7d %5d %7d"
            % (p.steps, s.height, s.strict_ltr, s.weak_ltr, s.returns)
        )

    t = totals(n)
    print("\npaths=%d  strict total=%d  weak total=%d" % (t.paths, t.strict_total, t.weak_total))

    print("\nBy height:")
    print("%6s %6s %7s %5s" % ("height", "paths", "strict", "weak"))
    for h in sorted(t.by_height):
        b = t.by_height[h]
        print("%6d %6d %7d %5d" % (h, b.paths, b.strict, b.weak))
    print(
        "\nEvery weak count dominates its strict count, and a path of height h"
        "\ncan hold at most h strict maxima (each must climb strictly higher)."
    )


if __name__ == "__main__":
    main()
