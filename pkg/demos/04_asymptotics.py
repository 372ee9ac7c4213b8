"""How quickly the asymptotic mean formulas close in on the exact means.

For a uniform random Dyck path of semi-length n, the expected number of
strict maxima grows like sqrt(pi n)/2 - log(n)/4 + const, and the weak
mean like sqrt(pi n) - log(n) + const.  Exact means come from big-integer
closed forms divided at 40-digit precision, so every digit printed is
trustworthy.

The script also shows the Catalan coefficient scale estimate sharpening,
and the small-t expansion of the sum f1(t) = sum_{r>=2} e^{-rt}/(1-e^{-rt})
gaining a factor of ~8 per halving of t.
"""

import math

from dyckmax import asympt


def mean_table() -> None:
    print("Exact versus asymptotic mean number of maxima:\n")
    header = "%6s %12s %12s %9s %12s %12s %9s" % (
        "n", "strict", "asympt", "gap", "weak", "asympt", "gap"
    )
    print(header)
    for n in (10, 50, 100, 200, 500, 1000, 2000):
        s = asympt.compare_strict_mean(n)
        w = asympt.compare_weak_mean(n)
        print(
            "%6d %12.6f %12.6f %9.2e %12.6f %12.6f %9.2e"
            % (n, float(s.exact_mean), s.asympt_mean, s.abs_gap,
               float(w.exact_mean), w.asympt_mean, w.abs_gap)
        )
    print("\nBoth gaps shrink as n grows; the weak formula converges more slowly")
    print("because its correction terms carry larger constants.")


def catalan_scale() -> None:
    from fractions import Fraction

    from dyckmax.exact import catalan

    print("\nCatalan(n)/4**n against its three-term estimate:\n")
    for n in (10, 100, 1000):
        exact_ratio = float(Fraction(catalan(n), 4 ** n))
        approx = asympt.catalan_asympt(n)
        rel = abs(approx - exact_ratio) / exact_ratio
        print("  n=%-5d exact %.6e  estimate %.6e  rel err %.2e" % (n, exact_ratio, approx, rel))


def mellin_sum() -> None:
    print("\nDirect evaluation of f1(t) versus its small-t expansion:\n")
    print("%8s %16s %16s %10s" % ("t", "direct", "expansion", "abs err"))
    prev = None
    for t in (0.4, 0.2, 0.1, 0.05, 0.025):
        direct = asympt.f1_direct(t)
        approx = asympt.f1_expansion(t)
        err = abs(direct - approx)
        note = "" if prev is None else "  (x%.1f smaller)" % (prev / err)
        print("%8.3f %16.8f %16.8f %10.2e%s" % (t, direct, approx, err, note))
        prev = err


def half_height() -> None:
    n = 10 ** 6
    ratio = asympt.strict_mean_asympt(n) / math.sqrt(math.pi * n)
    print(
        "\nAt n=%d the strict mean sits at %.6f of sqrt(pi n): the expected"
        "\nnumber of strict maxima is asymptotically half the typical height."
        % (n, ratio)
    )


def main() -> None:
    mean_table()
    catalan_scale()
    mellin_sum()
    half_height()


if __name__ == "__main__":
    main()
