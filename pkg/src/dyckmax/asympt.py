"""Asymptotics for the average number of maxima, and exact/asymptotic bridges.

For a path drawn uniformly among the Catalan(n) Dyck paths of semi-length n:

    mean strict maxima  ~  sqrt(pi n)/2 - log(n)/4 + (1 - 3 gamma)/4
    mean weak maxima    ~  sqrt(pi n)   - log(n)   + (5 - 6 gamma)/2

with gamma the Euler-Mascheroni constant.  The helpers below also expose
the Catalan coefficient scale, the leading behaviour of the strict total,
and the Mellin-type sum f1 whose small-t expansion drives the error terms.

Floating point is fine here; the exact means come from `exact` and are
divided once inside a high-precision Decimal context.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from . import exact

#: Euler-Mascheroni constant, to well past double precision.
EULER_GAMMA = 0.5772156649015328606065120900824024

_SQRT_PI = math.sqrt(math.pi)


def strict_mean_asympt(n: int) -> float:
    """Asymptotic mean number of strict maxima at semi-length n."""
    _check_n(n)
    return math.sqrt(math.pi * n) / 2 - math.log(n) / 4 + (1 - 3 * EULER_GAMMA) / 4


def weak_mean_asympt(n: int) -> float:
    """Asymptotic mean number of weak maxima at semi-length n."""
    _check_n(n)
    return math.sqrt(math.pi * n) - math.log(n) + (5 - 6 * EULER_GAMMA) / 2


def catalan_asympt(n: int) -> float:
    """Catalan(n) / 4**n, three asymptotic terms:
    n**-1.5/sqrt(pi) * (1 - 9/(8n) + 145/(128 n**2)).
    """
    _check_n(n)
    return (1 - 9 / (8 * n) + 145 / (128 * n * n)) / (n * math.sqrt(n) * _SQRT_PI)


def strict_total_coeff_asympt(n: int) -> float:
    """strict_total(n) / 4**n, leading terms:
    1/(2n) - log(n)/(4 sqrt(pi) n**1.5) + (1 - 3 gamma)/(4 sqrt(pi) n**1.5).
    """
    _check_n(n)
    n15 = n * math.sqrt(n)
    return 1 / (2 * n) + (1 - 3 * EULER_GAMMA - math.log(n)) / (4 * _SQRT_PI * n15)


def f1_direct(t: float) -> float:
    """f1(t) = sum_{r>=2} exp(-r t)/(1 - exp(-r t)), summed to convergence.

    Terms drop geometrically; summation stops once a term falls below
    1e-16 of the running total.
    """
    if t <= 0:
        raise ValueError("f1 needs t > 0")
    total = 0.0
    r = 2
    while True:
        x = math.exp(-r * t)
        term = x / -math.expm1(-r * t)
        total += term
        if term < 1e-16 * total:
            return total
        r += 1


def f1_expansion(t: float) -> float:
    """Small-t expansion of f1: (-1 + gamma - log t)/t + 3/4 - 13 t/144."""
    if t <= 0:
        raise ValueError("f1 needs t > 0")
    return (-1 + EULER_GAMMA - math.log(t)) / t + 0.75 - 13 * t / 144


# ---------- exact-versus-asymptotic comparisons ----------

@dataclass(frozen=True)
class MeanComparison:
    """An exact mean next to its asymptotic estimate at one semi-length."""

    n: int
    exact_mean: Decimal
    asympt_mean: float
    abs_gap: float
    rel_gap: float


def exact_strict_mean(n: int, digits: int = 40) -> Decimal:
    """strict_total(n)/catalan(n) as one high-precision decimal division."""
    return _exact_ratio(exact.strict_total(n), exact.catalan(n), digits)


def exact_weak_mean(n: int, digits: int = 40) -> Decimal:
    """weak_total(n)/catalan(n) as one high-precision decimal division."""
    return _exact_ratio(exact.weak_total(n), exact.catalan(n), digits)


def compare_strict_mean(n: int) -> MeanComparison:
    return _compare(n, exact_strict_mean(n), strict_mean_asympt(n))


def compare_weak_mean(n: int) -> MeanComparison:
    return _compare(n, exact_weak_mean(n), weak_mean_asympt(n))


def _compare(n: int, exact_mean: Decimal, approx: float) -> MeanComparison:
    gap = abs(float(exact_mean) - approx)
    return MeanComparison(
        n=n,
        exact_mean=exact_mean,
        asympt_mean=approx,
        abs_gap=gap,
        rel_gap=gap / float(exact_mean),
    )


def _exact_ratio(num: int, den: int, digits: int) -> Decimal:
    if digits < 1:
        raise ValueError("need at least one digit")
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(num) / Decimal(den)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("asymptotics are defined for semi-length n >= 1")
