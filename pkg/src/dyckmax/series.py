"""Exact truncated power series in one formal variable, plus first-order jets.

This is the arithmetic substrate for the generating-function work in this
package: dense coefficient arrays of `fractions.Fraction`, an explicitly
tracked truncation order, and a variable tag that keeps series living in
different domains from being mixed by accident.

Truncation semantics: a Series knows its coefficients for exponents
0..order inclusive and nothing beyond them.  Binary operations therefore
return a result whose order is the minimum of the operands' orders; there
is no silent zero-extension.  All arithmetic is exact.

A Jet pairs a series with its derivative in a suppressed marking variable,
both evaluated with the marker set to 1.  It is how per-object statistics
are accumulated through products without ever expanding in the marker.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class VariableMismatch(ValueError):
    """Two series in different formal variables were combined."""


class NotInvertible(ValueError):
    """Inversion was asked of a series whose constant term is zero."""


class DivergentComposition(ValueError):
    """Composition with an inner series whose constant term is nonzero."""


def _coerce(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        "exact coefficient expected (int or Fraction), got %s" % type(value).__name__
    )


class Series:
    """A power series known exactly through ``order``.

    ``coeffs[k]`` is the coefficient of ``variable**k`` for k = 0..order.
    Instances are immutable by convention: no method mutates, every
    operation returns a fresh Series.
    """

    __slots__ = ("variable", "coeffs")

    def __init__(self, variable: str, coeffs: Iterable[Scalar]):
        self.variable = variable
        cs = tuple(_coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = cs

    # ---------- constructors ----------

    @classmethod
    def constant(cls, variable: str, value: Scalar, order: int) -> "Series":
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls(variable, (value,) + (0,) * order)

    @classmethod
    def zero(cls, variable: str, order: int) -> "Series":
        return cls.constant(variable, 0, order)

    @classmethod
    def one(cls, variable: str, order: int) -> "Series":
        return cls.constant(variable, 1, order)

    @classmethod
    def monomial(cls, variable: str, exponent: int, order: int, coeff: Scalar = 1) -> "Series":
        """coeff * variable**exponent known through `order`."""
        if not 0 <= exponent <= order:
            raise ValueError("monomial exponent must lie within 0..order")
        coeffs = [0] * (order + 1)
        coeffs[exponent] = coeff
        return cls(variable, coeffs)

    # ---------- basic queries ----------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise ValueError(
                "coefficient of %s^%d is beyond the tracked order %d"
                % (self.variable, k, self.order)
            )
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        """Drop knowledge above `order` (which must not exceed the current one)."""
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        if order == self.order:
            return self
        return Series(self.variable, self.coeffs[: order + 1])

    def agrees(self, other: "Series", through: int | None = None) -> bool:
        """Coefficient-wise equality as far as both series are known.

        An optional `through` caps the comparison range.  Comparing series
        in different variables is a programming error and raises.
        """
        n = self._compatible(other)
        if through is not None:
            n = min(n, through)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    # ---------- arithmetic ----------

    def _compatible(self, other: "Series") -> int:
        if self.variable != other.variable:
            raise VariableMismatch(
                "cannot combine a series in %r with one in %r"
                % (self.variable, other.variable)
            )
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] = out[0] + other
            return Series(self.variable, out)
        if not isinstance(other, Series):
            return NotImplemented
        self._compatible(other)
        return Series(self.variable, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.variable, (-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__add__(-other)
        if not isinstance(other, Series):
            return NotImplemented
        self._compatible(other)
        return Series(self.variable, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _coerce(other)
            return Series(self.variable, (f * c for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        n = self._compatible(other)
        out = [_ZERO] * (n + 1)
        bcs = other.coeffs
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            top = n - i
            for j, b in enumerate(bcs[: top + 1]):
                if b:
                    out[i + j] += a * b
        return Series(self.variable, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("series divided by zero scalar")
            return self * (_ONE / _coerce(other))
        if isinstance(other, Series):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers take non-negative integer exponents")
        result = Series.one(self.variable, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shifted(self, k: int) -> "Series":
        """Multiply by variable**k.

        A positive shift extends the order by k: the monomial factor is an
        exact polynomial, so no knowledge is lost.  A negative shift divides
        and requires the first |k| coefficients to vanish; the order drops
        accordingly.
        """
        if k == 0:
            return self
        if k > 0:
            return Series(self.variable, (_ZERO,) * k + self.coeffs)
        k = -k
        if k > self.order or any(self.coeffs[:k]):
            raise ValueError("cannot shift down: low-order coefficients are nonzero")
        return Series(self.variable, self.coeffs[k:])

    def invert(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term.

        Standard recurrence: with a0*b0 = 1,
        b_m = -(1/a0) * sum_{k>=1} a_k * b_{m-k}.
        Zero coefficients of the input are skipped, which makes inverses of
        sparse polynomials (the common case here) linear-time per term.
        """
        a0 = self.coeffs[0]
        if not a0:
            raise NotInvertible("series with zero constant term has no inverse")
        inv0 = _ONE / a0
        nonzero = [(k, c) for k, c in enumerate(self.coeffs) if k and c]
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = _ZERO
            for k, c in nonzero:
                if k > m:
                    break
                acc += c * out[m - k]
            out.append(-inv0 * acc)
        return Series(self.variable, out)

    def compose(self, inner: "Series") -> "Series":
        """self(inner); the inner series must have zero constant term.

        Evaluated by Horner's scheme.  The result lives in the inner
        series' variable and is exact through min(self.order, inner.order).
        """
        if inner.coeffs[0]:
            raise DivergentComposition(
                "composition needs an inner series with zero constant term"
            )
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        acc = Series.constant(inner.variable, self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner_t + self.coeffs[k]
        return acc

    # ---------- dunder plumbing ----------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.variable == other.variable and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    def __repr__(self):
        shown = []
        for k, c in enumerate(self.coeffs):
            if c:
                shown.append("%s*%s^%d" % (c, self.variable, k))
            if len(shown) == 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return "<%s + O(%s^%d)>" % (body, self.variable, self.order + 1)


def sqrt_one_plus(a: Series) -> Series:
    """The square root of 1 + a with constant term +1; a must have a[0] = 0.

    Coefficient recurrence from squaring s = sqrt(1 + a):
    s_m = ((1+a)_m - sum_{i=1}^{m-1} s_i s_{m-i}) / 2.
    """
    if a.coeffs[0]:
        raise ValueError("sqrt_one_plus expects a series with zero constant term")
    out = [_ONE]
    half = Fraction(1, 2)
    for m in range(1, a.order + 1):
        acc = _ZERO
        for i in range(1, m):
            acc += out[i] * out[m - i]
        out.append((a.coeffs[m] - acc) * half)
    return Series(a.variable, out)


def _as_jet(value, like: "Jet") -> "Jet":
    if isinstance(value, Jet):
        return value
    if isinstance(value, Series):
        return Jet.const(value)
    if isinstance(value, (int, Fraction)):
        v = like.val
        return Jet.const(Series.constant(v.variable, value, v.order))
    raise TypeError("cannot promote %s to a jet" % type(value).__name__)


class Jet:
    """A series and its derivative in a suppressed marking variable.

    `val` is the series with the marker set to 1; `dx` is the derivative
    with respect to the marker, also at marker = 1.  Products follow the
    product rule, so multiplying jets accumulates marked statistics
    without carrying a second polynomial variable around.
    """

    __slots__ = ("val", "dx")

    def __init__(self, val: Series, dx: Series):
        if val.variable != dx.variable:
            raise VariableMismatch("jet components must share a variable")
        n = min(val.order, dx.order)
        self.val = val.truncate(n)
        self.dx = dx.truncate(n)

    @classmethod
    def const(cls, s: Series) -> "Jet":
        """A marker-independent factor: derivative zero."""
        return cls(s, Series.zero(s.variable, s.order))

    @classmethod
    def tracker(cls, s: Series) -> "Jet":
        """The factor marker*s, seen at marker = 1: value s, derivative s."""
        return cls(s, s)

    @property
    def order(self) -> int:
        return self.val.order

    def __add__(self, other):
        other = _as_jet(other, self)
        return Jet(self.val + other.val, self.dx + other.dx)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_jet(other, self)
        return Jet(self.val - other.val, self.dx - other.dx)

    def __rsub__(self, other):
        other = _as_jet(other, self)
        return Jet(other.val - self.val, other.dx - self.dx)

    def __mul__(self, other):
        other = _as_jet(other, self)
        return Jet(
            self.val * other.val,
            self.dx * other.val + self.val * other.dx,
        )

    __rmul__ = __mul__

    def invert(self) -> "Jet":
        """Reciprocal jet: d(1/f) = -df / f**2."""
        v = self.val.invert()
        return Jet(v, -(self.dx * v * v))

    def __repr__(self):
        return "Jet(val=%r, dx=%r)" % (self.val, self.dx)
