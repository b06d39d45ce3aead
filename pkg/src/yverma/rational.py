"""Exact rationals, polynomials over Q, and ratios of monic polynomials.

Conventions used throughout the package:

* scalars are ``fractions.Fraction`` (arbitrary precision, always reduced);
* ``PolyQ`` stores coefficients ascending by degree, with no trailing zeros;
* ``RationalFn`` is a ratio P(u)/Q(u) of *monic* polynomials of equal degree
  with gcd(P, Q) = 1.  Equal degrees and equal (monic) leading coefficients
  make the expansion of P/Q at u = infinity start with constant term 1,
  which is the normalization every highest-weight ratio in this package
  carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import InputError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

Scalar = Union[int, Fraction, str]


def rat(x: Scalar) -> Fraction:
    """Coerce an int, Fraction, or string like ``-3/2`` to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {x!r}") from exc
    raise InputError(f"cannot interpret {x!r} as a rational number")


def format_rat(q: Fraction) -> str:
    """Render exactly: ``3``, ``-3``, or ``3/2`` (never a float)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class PolyQ:
    """Polynomial over Q in the variable u, coefficients ascending by degree.

    The zero polynomial is the empty tuple; otherwise the last coefficient
    is nonzero.  Instances are immutable and hashable.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned degree -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __call__(self, x: Scalar) -> Fraction:
        x = rat(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "PolyQ") -> "PolyQ":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if not self or not other:
            return PolyQ()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    def scaled(self, c: Scalar) -> "PolyQ":
        c = rat(c)
        return PolyQ(a * c for a in self.coeffs)

    def __divmod__(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        if dq < 0:
            return PolyQ(), self
        quot = [_ZERO] * (dq + 1)
        inv_lead = 1 / other.leading
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] * inv_lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= c * b
        return PolyQ(quot), PolyQ(rem)

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def monic(self) -> "PolyQ":
        if not self or self.leading == 1:
            return self
        return self.scaled(1 / self.leading)

    def shift_arg(self, c: Scalar) -> "PolyQ":
        """The polynomial u |-> P(u + c), computed by Horner recombination."""
        c = rat(c)
        shift = PolyQ((c, _ONE))
        acc = PolyQ()
        for a in reversed(self.coeffs):
            acc = acc * shift + PolyQ((a,))
        return acc

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"PolyQ({render_poly(self)!r})"


POLY_ZERO = PolyQ()
POLY_ONE = PolyQ((1,))
POLY_U = PolyQ((0, 1))


def poly_from_desc(*coeffs: Scalar) -> PolyQ:
    """Build a PolyQ from coefficients written highest degree first."""
    return PolyQ(reversed([rat(c) for c in coeffs]))


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor (gcd(0, 0) = 0)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_pow(base: PolyQ, n: int) -> PolyQ:
    if n < 0:
        raise InputError("negative polynomial power")
    out = POLY_ONE
    for _ in range(n):
        out = out * base
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(p: PolyQ) -> Optional[list[Fraction]]:
    """All roots with multiplicity if ``p`` splits over Q, else ``None``.

    Uses the rational root bound on the integer-rescaled polynomial and
    deflates exactly on each hit.  The returned list is sorted.
    """
    if not p:
        raise InputError("zero polynomial has no root list")
    roots: list[Fraction] = []
    while p.degree > 0:
        # strip root 0 cheaply
        if p.coeff(0) == 0:
            roots.append(_ZERO)
            p = PolyQ(p.coeffs[1:])
            continue
        denom_lcm = 1
        for c in p.coeffs:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in p.coeffs]
        found = None
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for sign in (1, -1):
                    cand = Fraction(sign * num, den)
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        p = p // PolyQ((-found, _ONE))
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class RationalFn:
    """Ratio P(u)/Q(u) of monic polynomials of equal degree, gcd(P, Q) = 1.

    Construction accepts any polynomial pair with equal degrees and equal
    leading coefficients and normalizes it (monic rescale, gcd cancel).
    Anything else is rejected: these ratios must expand at u = infinity
    as 1 + O(1/u).
    """

    num: PolyQ
    den: PolyQ

    def __init__(self, num: PolyQ, den: PolyQ):
        if not den:
            raise InputError("denominator polynomial is zero")
        if not num:
            raise InputError("numerator polynomial is zero")
        if num.degree != den.degree:
            raise InputError(
                "numerator and denominator degrees differ "
                f"({num.degree} vs {den.degree}); the ratio does not tend to 1"
            )
        if num.leading != den.leading:
            raise InputError(
                "leading coefficients differ; the ratio does not tend to 1"
            )
        num = num.monic()
        den = den.monic()
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def degree(self) -> int:
        """Common degree p of numerator and denominator after reduction."""
        return self.num.degree

    def is_one(self) -> bool:
        return self.num == self.den

    def __str__(self) -> str:
        return render_rational_fn(self)

    def __repr__(self) -> str:
        return f"RationalFn({render_rational_fn(self)!r})"


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render_term(c: Fraction, k: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if k == 0:
        body = format_rat(mag)
    else:
        var = "u" if k == 1 else f"u^{k}"
        body = var if mag == 1 else f"{format_rat(mag)}*{var}"
    return sign + body


def render_poly(p: PolyQ) -> str:
    """Compact exact form, highest degree first: ``u^2+3*u+1``."""
    if not p:
        return "0"
    parts = []
    first = True
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        parts.append(_render_term(c, k, first))
        first = False
    return "".join(parts)


def render_rational_fn(f: RationalFn) -> str:
    return f"({render_poly(f.num)})/({render_poly(f.den)})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor (('*'|'/') factor | factor-adjacent)*
# factor := atom ('^' uint)?
# atom   := 'u' | uint | '(' expr ')' | '-' factor
#
# Values during parsing are exact fractions of polynomials, so inputs like
# "(u+2)^2/(u+1)^2" or "1+1/(u+1)" all work; the final pair is handed to
# RationalFn, which enforces the monic equal-degree normalization.


class _Tok:
    def __init__(self, text: str):
        self.toks: list[str] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "()+-*/^u":
                self.toks.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(text[i:j])
                i = j
            else:
                raise InputError(f"unexpected character {ch!r} in {text!r}")
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        t = self.peek()
        if t is None:
            raise InputError("unexpected end of expression")
        self.pos += 1
        return t


_PFrac = tuple[PolyQ, PolyQ]  # numerator, denominator (denominator nonzero)


def _pf_add(a: _PFrac, b: _PFrac, sign: int) -> _PFrac:
    if sign > 0:
        return a[0] * b[1] + b[0] * a[1], a[1] * b[1]
    return a[0] * b[1] - b[0] * a[1], a[1] * b[1]


def _pf_mul(a: _PFrac, b: _PFrac) -> _PFrac:
    return a[0] * b[0], a[1] * b[1]


def _pf_div(a: _PFrac, b: _PFrac) -> _PFrac:
    if not b[0]:
        raise InputError("division by zero in rational-function expression")
    return a[0] * b[1], a[1] * b[0]


def _parse_expr(tk: _Tok) -> _PFrac:
    if tk.peek() in ("+", "-"):
        sign = tk.take()
        value = _parse_term(tk)
        if sign == "-":
            value = (-value[0], value[1])
    else:
        value = _parse_term(tk)
    while tk.peek() in ("+", "-"):
        op = tk.take()
        value = _pf_add(value, _parse_term(tk), 1 if op == "+" else -1)
    return value


def _parse_term(tk: _Tok) -> _PFrac:
    value = _parse_factor(tk)
    while True:
        nxt = tk.peek()
        if nxt in ("*", "/"):
            op = tk.take()
            rhs = _parse_factor(tk)
            value = _pf_mul(value, rhs) if op == "*" else _pf_div(value, rhs)
        elif nxt == "u" or nxt == "(" or (nxt is not None and nxt.isdigit()):
            # juxtaposition: "3u", "2(u+1)"
            value = _pf_mul(value, _parse_factor(tk))
        else:
            return value


def _parse_factor(tk: _Tok) -> _PFrac:
    base = _parse_atom(tk)
    while tk.peek() == "^":
        tk.take()
        exp_tok = tk.take()
        if not exp_tok.isdigit():
            raise InputError(f"exponent must be a nonnegative integer, got {exp_tok!r}")
        n = int(exp_tok)
        base = (poly_pow(base[0], n), poly_pow(base[1], n))
    return base


def _parse_atom(tk: _Tok) -> _PFrac:
    t = tk.take()
    if t == "u":
        return POLY_U, POLY_ONE
    if t == "(":
        inner = _parse_expr(tk)
        if tk.take() != ")":
            raise InputError("unbalanced parentheses")
        return inner
    if t == "-":
        inner = _parse_factor(tk)
        return -inner[0], inner[1]
    if t.isdigit():
        return PolyQ((int(t),)), POLY_ONE
    raise InputError(f"unexpected token {t!r}")


def parse_rational_fn(text: str) -> RationalFn:
    """Parse an expression over Q(u) into a normalized ``RationalFn``.

    Examples: ``(u+2)/(u+1)``, ``(u^2+3*u+1)/(u^2+1)``, ``(u+2)^2/(u+1)^2``,
    ``1``.  The result must tend to 1 at u = infinity or ``InputError``
    is raised.
    """
    tk = _Tok(text)
    if tk.peek() is None:
        raise InputError("empty rational-function expression")
    num, den = _parse_expr(tk)
    if tk.peek() is not None:
        raise InputError(f"trailing input at token {tk.peek()!r}")
    return RationalFn(num, den)
