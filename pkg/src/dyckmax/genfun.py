"""Generating functions for Dyck-path maxima, exact in a rationalising variable.

Counting series for Dyck paths by semi-length live in z, with one path of
semi-length n contributing z**(2n).  The substitution

    z**2 = u/(1+u)**2,    inverse  u = (1 - 2 z**2 - sqrt(1 - 4 z**2)) / (2 z**2)

turns every square root the height decomposition produces into a rational
function, so all work happens on exact rational series in u.  The two
weights a single step pair can carry,

    lam1 = (1 + sqrt(1-4z**2))/2 = 1/(1+u),
    lam2 = (1 - sqrt(1-4z**2))/2 = u/(1+u),

give the height-bounded building blocks

    height_at_most(h) = (1+u) (1-u**(h+1)) / (1-u**(h+2)),
    climb_factor(h)   = (1-u) (1+u)**(h+1) / (1-u**(h+2)),

the latter carrying an implicit z**h prefactor (paths that end at their
ceiling height h use h unmatched up-steps).  Jets from `series` track one
marked statistic through the products; `val` is the plain counting series,
`dx` the series of statistic totals.

Coefficients come back to the z domain either by composing with u_from_z
or through the residue rule implemented in `z_coefficients`:

    [z**(2n)] f = [u**n] (1-u) (1+u)**(2n-1) f(u).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .exact import ballot_row
from .series import Jet, Series, sqrt_one_plus

U = "u"
Z = "z"

#: Working order used by verification runs when nothing finer is requested.
DEFAULT_ORDER = 60


# ---------- u-domain building blocks ----------

def _one(order: int) -> Series:
    return Series.one(U, order)


def _one_minus_power(k: int, order: int) -> Series:
    """1 - u**k truncated at `order` (just 1 when k is out of range)."""
    if k > order:
        return _one(order)
    return _one(order) - Series.monomial(U, k, order)


def _one_plus_u(order: int) -> Series:
    return _one(order) + Series.monomial(U, 1, order)


def z_square(order: int) -> Series:
    """z**2 written in the u domain: u/(1+u)**2."""
    return Series.monomial(U, 1, order) * _one_plus_u(order).invert() ** 2


def height_at_most(h: int, order: int) -> Series:
    """Counting series of Dyck paths of height <= h, in u.

    (1+u)(1-u**(h+1))/(1-u**(h+2)); height_at_most(0) is the constant 1
    (only the empty path stays at height zero).
    """
    if h < 0:
        raise ValueError("height bound must be >= 0")
    return (
        _one_plus_u(order)
        * _one_minus_power(h + 1, order)
        * _one_minus_power(h + 2, order).invert()
    )


def climb_factor(h: int, order: int) -> Series:
    """u part of the series for walks of height <= h that end at height h.

    The full series is z**h * climb_factor(h); the polynomial prefactor is
    kept implicit because every assembled quantity below pairs it with a
    matching power of z and only even powers survive.
    """
    if h < 0:
        raise ValueError("height bound must be >= 0")
    return (
        (_one(order) - Series.monomial(U, 1, order))
        * _one_plus_u(order) ** (h + 1)
        * _one_minus_power(h + 2, order).invert()
    )


# ---------- strict maxima ----------

def strict_maxima_jet(r: int, order: int) -> Jet:
    """Paths of height exactly r with their strict maxima marked.

    Assembled as  marker * z**r * climb_factor(r) *
    prod_{h=1}^{r-1} (1 + marker*(height_at_most(h) - 1)):
    the first peak at the ceiling is always a strict maximum, and every
    height-h stretch before it contributes either nothing or one earlier
    strict maximum.  `val` counts paths of height exactly r; `dx` totals
    their strict maxima.
    """
    if r < 1:
        raise ValueError("height slice must have r >= 1")
    base = z_square(order) ** r * climb_factor(r, order)
    jet = Jet.tracker(base)
    one = _one(order)
    for h in range(1, r):
        jet = jet * (Jet.const(one) + Jet.tracker(height_at_most(h, order) - one))
    return jet


def strict_total_at_height(r: int, order: int) -> Series:
    """Closed form for the strict-maxima total over paths of height exactly r.

    (1-u)**2 u**r (1+u) / ((1-u**(1+r))(1-u**(2+r))) *
    (r - sum_{i=1}^{r-1} (1-u**(2+i)) / ((1+u)(1-u**(1+i)))).

    Must agree with strict_maxima_jet(r).dx; the test suite holds the two
    routes against each other.
    """
    if r < 1:
        raise ValueError("height slice must have r >= 1")
    inner = Series.zero(U, order)
    for i in range(1, r):
        inner = inner + _inverse_bounded_block(i, order)
    return _strict_slice_prefactor(r, order) * (Series.constant(U, r, order) - inner)


def _inverse_bounded_block(i: int, order: int) -> Series:
    # (1-u**(2+i)) / ((1+u)(1-u**(1+i))): reciprocal of height_at_most(i).
    return _one_minus_power(i + 2, order) * (
        _one_plus_u(order) * _one_minus_power(i + 1, order)
    ).invert()


def _strict_slice_prefactor(r: int, order: int) -> Series:
    one_minus_u = _one(order) - Series.monomial(U, 1, order)
    return (
        one_minus_u ** 2
        * Series.monomial(U, r, order)
        * _one_plus_u(order)
        * (_one_minus_power(r + 1, order) * _one_minus_power(r + 2, order)).invert()
    )


def strict_total_gf_raw(order: int) -> Series:
    """Sum of strict_total_at_height over r = 1..order.

    Truncating the height sum at the working order is exact: the slice for
    height r starts at u**r.
    """
    total = Series.zero(U, order)
    inner = Series.zero(U, order)
    for r in range(1, order + 1):
        bracket = Series.constant(U, r, order) - inner
        total = total + _strict_slice_prefactor(r, order) * bracket
        inner = inner + _inverse_bounded_block(r, order)
    return total


def strict_total_gf(order: int) -> Series:
    """Telescoped strict-maxima total: sum_r (1-u) u**r / (1-u**(1+r))."""
    one_minus_u = _one(order) - Series.monomial(U, 1, order)
    total = Series.zero(U, order)
    for r in range(1, order + 1):
        total = total + (
            one_minus_u
            * Series.monomial(U, r, order)
            * _one_minus_power(r + 1, order).invert()
        )
    return total


# ---------- weak maxima ----------

def single_return_gf(h: int, order: int) -> Series:
    """Arches of height <= h: an up-step, a path of height <= h-1, a down-step.

    z**2 * height_at_most(h-1), in u.
    """
    if h < 1:
        raise ValueError("arch height must be >= 1")
    return z_square(order) * height_at_most(h - 1, order)


def return_count_jet(h: int, order: int) -> Jet:
    """Sequences of height <= h arches with each arch marked: 1/(1 - marker*arch)."""
    one = Jet.const(_one(order))
    return (one - Jet.tracker(single_return_gf(h, order))).invert()


def weak_maxima_jet(r: int, order: int) -> Jet:
    """Paths of height exactly r with their weak maxima marked.

    marker * z**(r+1) * climb_factor(r-1) * prod_{h=1}^{r} E_h where E_h
    marks arch counts; `val` again counts paths of height exactly r, `dx`
    totals their weak maxima.
    """
    if r < 1:
        raise ValueError("height slice must have r >= 1")
    base = z_square(order) ** r * climb_factor(r - 1, order)
    jet = Jet.tracker(base)
    for h in range(1, r + 1):
        jet = jet * return_count_jet(h, order)
    return jet


def weak_total_gf_raw(order: int) -> Series:
    """Weak-maxima total assembled slice by slice before telescoping.

    sum_r (1-u) u**r (1-u**2) / ((1-u**(1+r))(1-u**(2+r))) *
    (1 - r + (1+u) sum_{i=1}^{r} (1-u**(1+i))/(1-u**(2+i))).
    """
    one_minus_u = _one(order) - Series.monomial(U, 1, order)
    one_plus_u = _one_plus_u(order)
    total = Series.zero(U, order)
    inner = Series.zero(U, order)
    for r in range(1, order + 1):
        inner = inner + _one_minus_power(r + 1, order) * _one_minus_power(
            r + 2, order
        ).invert()
        pref = (
            one_minus_u
            * Series.monomial(U, r, order)
            * _one_minus_power(2, order)
            * (_one_minus_power(r + 1, order) * _one_minus_power(r + 2, order)).invert()
        )
        bracket = Series.constant(U, 1 - r, order) + one_plus_u * inner
        total = total + pref * bracket
    return total


def weak_total_gf(order: int) -> Series:
    """Telescoped weak-maxima total: sum_r (1-u**2) u**r / (1-u**(2+r))."""
    total = Series.zero(U, order)
    for r in range(1, order + 1):
        total = total + (
            _one_minus_power(2, order)
            * Series.monomial(U, r, order)
            * _one_minus_power(r + 2, order).invert()
        )
    return total


# ---------- moving between domains ----------

def divisor_sum_gf(order: int) -> Series:
    """sum_{r>=1} u**r/(1-u**r), the series whose u**m coefficient is d(m)."""
    total = Series.zero(U, order)
    for r in range(1, order + 1):
        total = total + Series.monomial(U, r, order) * _one_minus_power(r, order).invert()
    return total


def u_from_z(order: int) -> Series:
    """The substitution variable as a z-series:
    u = (1 - 2 z**2 - sqrt(1 - 4 z**2)) / (2 z**2) = z**2 + 2 z**4 + 5 z**6 + ...

    Built two orders high so the division by z**2 lands exactly on `order`.
    """
    work = order + 2
    root = sqrt_one_plus(Series.monomial(Z, 2, work, -4))
    numerator = Series.one(Z, work) - Series.monomial(Z, 2, work, 2) - root
    return numerator.shifted(-2) / 2


def z_coefficients(f: Series, n_max: int) -> List[int]:
    """[z**(2n)] for n = 1..n_max of the z-even series written as f(u).

    Residue rule: [z**(2n)] = [u**n] (1-u)(1+u)**(2n-1) f(u), which unrolls
    to sum_{r=1}^{n} f_r * ballot(n, r); the constant coefficient of f
    never contributes.  Needs f known through n_max.
    """
    if f.variable != U:
        raise ValueError("z_coefficients expects a series in %r" % U)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if f.order < n_max:
        raise ValueError(
            "series order %d is too low for n_max %d" % (f.order, n_max)
        )
    out: List[int] = []
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for r, w in ballot_row(n):
            c = f.coeffs[r]
            if c:
                acc += c * w
        if acc.denominator != 1:
            raise ValueError("non-integer z coefficient at n=%d: %s" % (n, acc))
        out.append(int(acc))
    return out
