"""Strict and weak left-to-right maxima in Dyck paths.

A peak of a Dyck path is an up-step followed by a down-step; its apex is a
strict left-to-right maximum when it rises above everything before it, and
a weak one when no earlier apex is higher.  This package counts both kinds
four independent ways and checks the routes against each other:

* `paths`: brute-force enumeration, the ground truth;
* `genfun`: exact generating functions in a rationalising variable;
* `exact`: closed-form totals from divisor counts and ballot numbers;
* `asympt`: asymptotic means and coefficient scales;
* `series`: the exact truncated-power-series engine underneath;
* `cli`: the `dyckmax` command.
"""

from .asympt import (
    EULER_GAMMA,
    MeanComparison,
    catalan_asympt,
    compare_strict_mean,
    compare_weak_mean,
    exact_strict_mean,
    exact_weak_mean,
    f1_direct,
    f1_expansion,
    strict_mean_asympt,
    strict_total_coeff_asympt,
    weak_mean_asympt,
)
from .exact import (
    DivisorTable,
    ballot,
    ballot_row,
    binomial,
    catalan,
    divisor_table,
    strict_total,
    weak_total,
)
from .paths import (
    DyckPath,
    EnumerationLimit,
    HeightBucket,
    PathStats,
    TotalCounts,
    enumerate_paths,
    peaks,
    stats,
    strict_maxima,
    strict_maxima_peak_rule,
    totals,
    weak_maxima,
)
from .series import (
    DivergentComposition,
    Jet,
    NotInvertible,
    Series,
    VariableMismatch,
    sqrt_one_plus,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA",
    "MeanComparison",
    "catalan_asympt",
    "compare_strict_mean",
    "compare_weak_mean",
    "exact_strict_mean",
    "exact_weak_mean",
    "f1_direct",
    "f1_expansion",
    "strict_mean_asympt",
    "strict_total_coeff_asympt",
    "weak_mean_asympt",
    "DivisorTable",
    "ballot",
    "ballot_row",
    "binomial",
    "catalan",
    "divisor_table",
    "strict_total",
    "weak_total",
    "DyckPath",
    "EnumerationLimit",
    "HeightBucket",
    "PathStats",
    "TotalCounts",
    "enumerate_paths",
    "peaks",
    "stats",
    "strict_maxima",
    "strict_maxima_peak_rule",
    "totals",
    "weak_maxima",
    "DivergentComposition",
    "Jet",
    "NotInvertible",
    "Series",
    "VariableMismatch",
    "sqrt_one_plus",
    "__version__",
]
