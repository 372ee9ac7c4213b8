"""Tests pinning the asymptotic formulas against exact values and frozen oracles."""

import math
from decimal import Decimal
from fractions import Fraction

import pytest

from dyckmax.asympt import (
    EULER_GAMMA,
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
from dyckmax.exact import catalan, strict_total, weak_total


# ---------- reference values at semi-length 200 ----------

def test_means_at_200():
    strict = compare_strict_mean(200)
    weak = compare_weak_mean(200)
    assert float(strict.exact_mean) == pytest.approx(11.050253669268926, rel=1e-12)
    assert strict.asympt_mean == pytest.approx(11.025650282841845, rel=1e-12)
    assert float(weak.exact_mean) == pytest.approx(20.36822364407227, rel=1e-12)
    assert weak.asympt_mean == pytest.approx(20.53631838505737, rel=1e-12)
    # four-figure checkpoints
    assert abs(float(strict.exact_mean) - 11.0503) < 1e-4
    assert abs(strict.asympt_mean - 11.0257) < 1e-4
    assert abs(float(weak.exact_mean) - 20.368) < 5e-4
    assert abs(weak.asympt_mean - 20.536) < 5e-4


def test_exact_mean_is_high_precision():
    expect = Fraction(strict_total(50), catalan(50))
    got = Fraction(exact_strict_mean(50, digits=40))
    assert abs(got - expect) < Fraction(1, 10 ** 25)
    expect_w = Fraction(weak_total(50), catalan(50))
    got_w = Fraction(exact_weak_mean(50, digits=40))
    assert abs(got_w - expect_w) < Fraction(1, 10 ** 25)


def test_comparison_record_coherence():
    mc = compare_weak_mean(100)
    assert mc.n == 100
    assert isinstance(mc.exact_mean, Decimal)
    assert mc.abs_gap == pytest.approx(abs(float(mc.exact_mean) - mc.asympt_mean))
    assert mc.rel_gap == pytest.approx(mc.abs_gap / float(mc.exact_mean))


def test_gap_shrinks_with_n():
    assert compare_strict_mean(400).abs_gap < compare_strict_mean(100).abs_gap
    assert compare_weak_mean(500).abs_gap < compare_weak_mean(200).abs_gap


def test_weak_mean_under_twice_strict():
    # (weak - 2*strict)/1 = (4 - 3*gamma - log n)/2 < 0 once log n clears 4 - 3*gamma
    for n in range(10, 500, 7):
        assert weak_mean_asympt(n) < 2 * strict_mean_asympt(n)
    assert float(exact_weak_mean(50)) < 2 * float(exact_strict_mean(50))
    assert float(exact_weak_mean(200)) < 2 * float(exact_strict_mean(200))


# ---------- coefficient-scale asymptotics ----------

def _rel_err(approx, exact):
    return abs(approx - exact) / exact


def test_catalan_asympt_accuracy():
    errs = {}
    for n in (10, 50, 100, 200):
        exact_ratio = float(Fraction(catalan(n), 4 ** n))
        errs[n] = _rel_err(catalan_asympt(n), exact_ratio)
    assert errs[10] < 2e-3
    assert errs[100] < 1e-5
    assert errs[200] < errs[50]


def test_strict_total_coeff_accuracy():
    n = 200
    exact_ratio = float(Fraction(strict_total(n), 4 ** n))
    assert _rel_err(strict_total_coeff_asympt(n), exact_ratio) < 0.01


def test_strict_total_coeff_half_limit():
    scaled = 10 ** 6 * strict_total_coeff_asympt(10 ** 6)
    assert scaled == pytest.approx(0.49794816130963904, rel=1e-12)
    assert abs(scaled - 0.5) < 0.01


# ---------- the Mellin-type sum ----------

def test_f1_direct_frozen_value():
    got = f1_direct(5.0)
    assert got == pytest.approx(4.570996855955e-05, rel=1e-10)
    # first three terms dominate at t = 5; the tail is below 5e-11
    oracle = 0.0
    for r in (2, 3, 4):
        x = math.exp(-5.0 * r)
        oracle += x / (1 - x)
    assert abs(got - oracle) < 5e-11
    assert got > oracle


def test_f1_expansion_converges_at_small_t():
    errs = [abs(f1_direct(t) - f1_expansion(t)) for t in (0.2, 0.1, 0.05, 0.025)]
    for bigger, smaller in zip(errs, errs[1:]):
        assert bigger / smaller >= 3


def test_f1_domain():
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            f1_direct(bad)
        with pytest.raises(ValueError):
            f1_expansion(bad)


# ---------- argument checking ----------

def test_rejects_nonpositive_n():
    for fn in (strict_mean_asympt, weak_mean_asympt, catalan_asympt, strict_total_coeff_asympt):
        with pytest.raises(ValueError):
            fn(0)
    with pytest.raises(ValueError):
        exact_strict_mean(0)
    with pytest.raises(ValueError):
        exact_strict_mean(5, digits=0)


def test_euler_gamma_constant():
    # gamma = lim (H_m - log m); the partial with the 1/(2m) correction pins 12 digits
    m = 10 ** 6
    harmonic = sum(1.0 / k for k in range(1, m + 1))
    est = harmonic - math.log(m) - 1 / (2 * m)
    assert EULER_GAMMA == pytest.approx(est, abs=1e-12)
