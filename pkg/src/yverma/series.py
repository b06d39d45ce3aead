"""Truncated formal series in u^{-1} with constant term 1, over exact rationals.

A ``SeriesU`` stores coefficients of u^0, u^{-1}, ..., u^{-order}.  The
``exact`` flag records whether the series is known *completely*: an exact
series is a polynomial in u^{-1} and every coefficient beyond its stored
window is literally zero, while an inexact series only certifies the stored
window and raises ``TruncationError`` beyond it.

Arithmetic propagates truncation honestly: an exact operand never limits
the result's window, an inexact one clamps the result to its own order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .errors import InputError, TruncationError
from .rational import PolyQ, RationalFn, Scalar, format_rat, rat

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class SeriesU:
    """Series 1 + c_1 u^{-1} + ... + c_order u^{-order}; see module docstring."""

    coeffs: tuple[Fraction, ...]
    exact: bool = False

    def __init__(self, coeffs: Iterable[Scalar], exact: bool = False):
        cs = [rat(c) for c in coeffs]
        if not cs or cs[0] != 1:
            raise InputError("series must have constant term 1")
        if exact:
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "exact", exact)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, r: int) -> Fraction:
        """Coefficient of u^{-r}; zero beyond the window only if exact."""
        if r < 0:
            return _ZERO
        if r < len(self.coeffs):
            return self.coeffs[r]
        if self.exact:
            return _ZERO
        raise TruncationError(r, self.order)

    def is_one(self) -> bool:
        return self.exact and len(self.coeffs) == 1

    def truncate(self, order: int) -> "SeriesU":
        """Forget everything beyond ``order`` (result is inexact).

        An inexact window never extends, so the result's order is clamped
        to what is available; exact input pads with its true zeros.
        """
        if order < 0:
            raise InputError("truncation order must be nonnegative")
        if not self.exact:
            order = min(order, self.order)
        cs = [self.coeff(r) for r in range(order + 1)]
        return SeriesU(cs, exact=False)

    def __str__(self) -> str:
        return render_series(self)

    def __repr__(self) -> str:
        return f"SeriesU({render_series(self)!r})"


SERIES_ONE = SeriesU((1,), exact=True)


def series_from_tail(tail: Iterable[Scalar], exact: bool = False) -> SeriesU:
    """Build 1 + t_1 u^{-1} + t_2 u^{-2} + ... from the tail coefficients."""
    return SeriesU([_ONE, *tail], exact=exact)


def series_mul(a: SeriesU, b: SeriesU) -> SeriesU:
    """Exact product; the window is clamped by inexact operands only."""
    if a.exact and b.exact:
        order = a.order + b.order
        exact = True
    else:
        order = min(s.order for s in (a, b) if not s.exact)
        exact = False
    out = []
    for r in range(order + 1):
        acc = _ZERO
        for i in range(r + 1):
            ai = a.coeff(i) if i <= a.order else _ZERO
            if ai:
                bj = b.coeff(r - i) if r - i <= b.order else _ZERO
                if bj:
                    acc += ai * bj
        out.append(acc)
    return SeriesU(out, exact=exact)


def series_inverse(a: SeriesU, order: Optional[int] = None) -> SeriesU:
    """Multiplicative inverse through the given order.

    The default order is ``a.order``.  The inverse of a nontrivial exact
    series is an infinite series, so the result is exact only for the
    constant series 1.
    """
    if order is None:
        order = a.order
    if a.is_one():
        return SERIES_ONE
    out = [_ONE]
    for r in range(1, order + 1):
        acc = _ZERO
        for c in range(1, r + 1):
            ac = a.coeff(c)
            if ac:
                acc += ac * out[r - c]
        out.append(-acc)
    return SeriesU(out, exact=False)


def shifted_power_coeff(s: int, x: int, c: Fraction) -> Fraction:
    """Coefficient of u^{-x} in (u + c)^{-s}, for s >= 1 and x >= s.

    Expanding (u+c)^{-s} = u^{-s} (1 + c/u)^{-s} gives the weight
    binom(-s, x-s) c^{x-s} = (-1)^{x-s} binom(x-1, s-1) c^{x-s}.
    """
    if s < 1 or x < s:
        return _ZERO
    j = x - s
    sign = -1 if j % 2 else 1
    return Fraction(sign * comb(x - 1, s - 1)) * c**j


def series_shift_argument(a: SeriesU, c: Scalar, order: Optional[int] = None) -> SeriesU:
    """The series u |-> a(u + c), re-expanded in powers of u^{-1}.

    A zero shift returns ``a`` unchanged.  For c != 0 each basis power
    u^{-r} re-expands into an infinite tail, so the result is inexact
    with window ``order`` (default ``a.order``).
    """
    c = rat(c)
    if c == 0:
        return a
    if a.is_one():
        return SERIES_ONE
    if order is None:
        order = a.order
    if not a.exact and order > a.order:
        # the u^{-x} output coefficient needs every input coefficient up to x
        raise TruncationError(order, a.order)
    out = [_ONE]
    for x in range(1, order + 1):
        acc = _ZERO
        for r in range(1, min(x, a.order) + 1):
            ar = a.coeffs[r]
            if ar:
                acc += ar * shifted_power_coeff(r, x, c)
        out.append(acc)
    return SeriesU(out, exact=False)


def expand_rational(f: RationalFn, order: int) -> SeriesU:
    """Expansion of P(u)/Q(u) at u = infinity through u^{-order}.

    The result is exact when the denominator is the pure power u^p and the
    window covers degree p, because then the expansion terminates.
    """
    if order < 0:
        raise InputError("expansion order must be nonnegative")
    p = f.degree
    # descending coefficients: a_k multiplies u^{p-k}
    a = [f.num.coeff(p - k) for k in range(p + 1)]
    b = [f.den.coeff(p - k) for k in range(p + 1)]
    out = [_ONE]
    for r in range(1, order + 1):
        acc = a[r] if r <= p else _ZERO
        for k in range(1, min(r, p) + 1):
            if b[k]:
                acc -= b[k] * out[r - k]
        out.append(acc)
    den_is_power = all(f.den.coeff(k) == 0 for k in range(p))
    exact = den_is_power and order >= p
    return SeriesU(out, exact=exact)


def series_eq_through(a: SeriesU, b: SeriesU, order: int) -> bool:
    """Exact coefficientwise equality through the given order."""
    return all(a.coeff(r) == b.coeff(r) for r in range(order + 1))


def render_series(s: SeriesU) -> str:
    """Human-readable exact form: ``1 + 1*u^-1 - 1*u^-2 + ...``.

    The trailing ellipsis appears exactly when the series is inexact.
    """
    parts = ["1"]
    for r in range(1, s.order + 1):
        c = s.coeffs[r]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign} {format_rat(abs(c))}*u^-{r}")
    text = " ".join(parts)
    if not s.exact:
        text += " + ..."
    return text


def series_coeff_strings(s: SeriesU) -> list[str]:
    return [format_rat(c) for c in s.coeffs]
