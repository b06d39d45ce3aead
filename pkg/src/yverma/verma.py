"""Verma modules over the Yangian of gl(2) in the RTT presentation.

The algebra is generated by t_ij^(r) (i, j in {1,2}, r >= 1), packaged as
t_ij(u) = delta_ij + sum_r t_ij^(r) u^{-r}, with defining relations

    [t_ij^(r), t_kl^(s)] = sum_{a=1}^{min(r,s)}
        ( t_kj^(a-1) t_il^(r+s-a)  -  t_kj^(r+s-a) t_il^(a-1) ),

where t_ij^(0) = delta_ij.  The Verma module M(lambda1, lambda2) attached
to a pair of coefficient series has a highest vector killed by every
t_12^(r), on which t_ii^(r) acts by lambda_i^(r); a PBW basis is given by
ordered products t_21^(r_1) ... t_21^(r_k) with 1 <= r_1 <= ... <= r_k
applied to the highest vector (the t_21^(r) commute pairwise).

``act_generator`` computes the action of any t_ij^(r) on a basis vector by
structural recursion on the leftmost t_21 factor:

    t_ij^(r) (t_21^(s) w) = t_21^(s) (t_ij^(r) w) + [t_ij^(r), t_21^(s)] w,

with the commutator expanded by the defining relation.  Every recursive
call strictly decreases (generator index r) + (monomial degree), which
proves termination: the commutator terms have generator indices a-1 < r
or act on the shorter monomial w.
"""

from __future__ import annotations

from collections import namedtuple
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import InputError
from .rational import RationalFn, Scalar, format_rat, rat
from .series import SeriesU, series_inverse, series_mul, shifted_power_coeff

_ZERO = Fraction(0)
_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)

#: A PBW basis monomial: the sorted tuple of t_21 indices (each >= 1).
Monomial = tuple[int, ...]


def monomial(indices: Iterable[int]) -> Monomial:
    """Normalize an index multiset into a basis monomial (sorted tuple)."""
    idx = sorted(int(r) for r in indices)
    if idx and idx[0] < 1:
        raise InputError("t_21 indices must be >= 1")
    return tuple(idx)


def _insert(mono: Monomial, r: int) -> Monomial:
    out = list(mono)
    insort(out, r)
    return tuple(out)


def monomial_level(mono: Monomial) -> int:
    return len(mono)


def monomial_degree(mono: Monomial) -> int:
    return sum(mono)


def _mono_sort_key(mono: Monomial) -> tuple:
    return (len(mono), mono)


class ModuleVector:
    """Finite exact linear combination of PBW basis monomials.

    Treated as immutable: all arithmetic returns fresh vectors and the
    ``terms`` mapping must not be mutated by callers.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coef in items:
                c = rat(coef) if not isinstance(coef, Fraction) else coef
                if c:
                    key = tuple(mono)
                    prev = data.get(key)
                    total = c if prev is None else prev + c
                    if total:
                        data[key] = total
                    elif prev is not None:
                        del data[key]
        self._terms = data

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls) -> "ModuleVector":
        return cls()

    @classmethod
    def basis(cls, mono: Iterable[int]) -> "ModuleVector":
        return cls({monomial(mono): _ONE})

    @classmethod
    def highest(cls) -> "ModuleVector":
        return cls({(): _ONE})

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return self._terms

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(mono), _ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def levels(self) -> list[int]:
        return sorted({len(m) for m in self._terms})

    def max_degree(self) -> int:
        """Largest index sum among supported monomials (-1 for zero)."""
        return max((sum(m) for m in self._terms), default=-1)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=_mono_sort_key)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        acc = dict(self._terms)
        for m, c in other._terms.items():
            total = acc.get(m, _ZERO) + c
            if total:
                acc[m] = total
            elif m in acc:
                del acc[m]
        out = ModuleVector()
        out._terms = acc
        return out

    def __neg__(self) -> "ModuleVector":
        out = ModuleVector()
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scaled(self, c: Scalar) -> "ModuleVector":
        c = rat(c)
        out = ModuleVector()
        if c:
            out._terms = {m: c * v for m, v in self._terms.items()}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f"ModuleVector({format_vector(self)!r})"

    # -- serialization ------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "terms": [
                {"mono": list(m), "coef": format_rat(c)}
                for m, c in sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))
            ]
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "ModuleVector":
        try:
            return cls({tuple(t["mono"]): rat(t["coef"]) for t in obj["terms"]})
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed vector object: {exc}") from exc


def format_vector(v: ModuleVector) -> str:
    """Readable exact form, e.g. ``t21(2)*1 - t21(1)*1``."""
    if v.is_zero():
        return "0"
    parts = []
    for m in v.monomials():
        c = v.terms[m]
        word = "*".join(f"t21({r})" for r in m)
        body = f"{word}*1" if word else "1"
        mag = abs(c)
        coef = "" if mag == 1 else f"{format_rat(mag)}*"
        if not parts:
            sign = "-" if c < 0 else ""
            parts.append(f"{sign}{coef}{body}")
        else:
            sign = "-" if c < 0 else "+"
            parts.append(f" {sign} {coef}{body}")
    return "".join(parts)


@dataclass(frozen=True)
class HighestWeightGL2:
    """The pair of coefficient series (lambda1(u), lambda2(u)) of a Verma module."""

    lambda1: SeriesU
    lambda2: SeriesU

    def coeff(self, i: int, r: int) -> Fraction:
        """lambda_i^(r); raises TruncationError past an inexact window."""
        if i == 1:
            return self.lambda1.coeff(r)
        if i == 2:
            return self.lambda2.coeff(r)
        raise InputError(f"diagonal index must be 1 or 2, got {i}")

    def mu(self, order: Optional[int] = None) -> SeriesU:
        """The ratio lambda1/lambda2 as a series, through ``order``."""
        if self.lambda2.is_one():
            return self.lambda1 if order is None else self.lambda1.truncate(order)
        if order is None:
            if self.lambda1.exact and self.lambda2.exact:
                order = self.lambda1.order + self.lambda2.order
            else:
                order = min(
                    s.order for s in (self.lambda1, self.lambda2) if not s.exact
                )
        return series_mul(self.lambda1, series_inverse(self.lambda2, order))


def canonical_polynomial_weights(mu: RationalFn) -> HighestWeightGL2:
    """The polynomial realization lambda1 = u^-p P(u), lambda2 = u^-p Q(u).

    Both series are exact polynomials in u^{-1} of degree <= p = deg(mu),
    with ratio lambda1/lambda2 = mu.
    """
    p = mu.degree
    l1 = SeriesU([mu.num.coeff(p - k) for k in range(p + 1)], exact=True)
    l2 = SeriesU([mu.den.coeff(p - k) for k in range(p + 1)], exact=True)
    return HighestWeightGL2(l1, l2)


def twist(hw: HighestWeightGL2, phi: SeriesU) -> HighestWeightGL2:
    """Rescale both weight series by phi(u); the ratio mu is unchanged."""
    return HighestWeightGL2(
        series_mul(phi, hw.lambda1), series_mul(phi, hw.lambda2)
    )


class ActionCache:
    """Memo for single-generator actions on basis monomials.

    Bound to one highest weight; keys are (i, j, r, monomial) and values
    are the resulting coefficient dicts, which are never mutated after
    insertion.  Recomputing a key yields an identical value, so concurrent
    use from threads is harmless.
    """

    __slots__ = ("hw", "data")

    def __init__(self, hw: HighestWeightGL2):
        self.hw = hw
        self.data: dict = {}

    def check(self, hw: HighestWeightGL2) -> None:
        if self.hw is not hw and self.hw != hw:
            raise InputError("action cache is bound to a different highest weight")


def _check_indices(i: int, j: int, r: int) -> None:
    if i not in (1, 2) or j not in (1, 2):
        raise InputError(f"generator indices must be in {{1,2}}, got ({i},{j})")
    if r < 0:
        raise InputError(f"generator degree must be >= 0, got {r}")


def _add_into(acc: dict, mono: Monomial, c: Fraction) -> None:
    total = acc.get(mono, _ZERO) + c
    if total:
        acc[mono] = total
    elif mono in acc:
        del acc[mono]


def _act_mono(
    i: int, j: int, r: int, mono: Monomial, hw: HighestWeightGL2, cache
) -> dict:
    """Action of t_ij^(r) on one basis monomial, as a coefficient dict."""
    if cache is not None:
        key = (i, j, r, mono)
        hit = cache.data.get(key)
        if hit is not None:
            return hit
    if r == 0:
        res = {mono: _ONE} if i == j else {}
    elif i == 2 and j == 1:
        res = {_insert(mono, r): _ONE}
    elif not mono:
        if i == 1 and j == 2:
            res = {}
        else:
            c = hw.coeff(i, r)
            res = {(): c} if c else {}
    else:
        s = mono[0]
        rest = mono[1:]
        acc: dict = {}
        for m2, c in _act_mono(i, j, r, rest, hw, cache).items():
            _add_into(acc, _insert(m2, s), c)
        for a in range(1, min(r, s) + 1):
            x, y = a - 1, r + s - a
            # [t_ij^(r), t_21^(s)] = sum_a ( t_2j^(a-1) t_i1^(r+s-a)
            #                                - t_2j^(r+s-a) t_i1^(a-1) )
            _compose_into(acc, (2, j, x), (i, 1, y), rest, hw, cache, _ONE)
            _compose_into(acc, (2, j, y), (i, 1, x), rest, hw, cache, _MINUS_ONE)
        res = acc
    if cache is not None:
        cache.data[key] = res
    return res


def _compose_into(
    acc: dict, outer: tuple, inner: tuple, mono: Monomial, hw, cache, sign: Fraction
) -> None:
    """Accumulate sign * (outer generator)(inner generator) mono into acc."""
    i2, j2, r2 = inner
    i1, j1, r1 = outer
    for m1, c1 in _act_mono(i2, j2, r2, mono, hw, cache).items():
        cs = c1 * sign
        for m2, c2 in _act_mono(i1, j1, r1, m1, hw, cache).items():
            _add_into(acc, m2, cs * c2)


def act_generator(
    i: int,
    j: int,
    r: int,
    v: ModuleVector,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply t_ij^(r) to a vector, returning its PBW normal form.

    The degree-0 convention t_ij^(0) = delta_ij is honored, so r = 0 gives
    the identity (i == j) or zero (i != j).
    """
    _check_indices(i, j, r)
    if cache is not None:
        cache.check(hw)
    acc: dict = {}
    for mono, c in v.terms.items():
        for m2, c2 in _act_mono(i, j, r, mono, hw, cache).items():
            _add_into(acc, m2, c * c2)
    out = ModuleVector()
    out._terms = acc
    return out


def act_word(
    word: Sequence[tuple[int, int, int]],
    v: ModuleVector,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply a product of generators; the last word entry acts first."""
    for i, j, r in reversed(list(word)):
        v = act_generator(i, j, r, v, hw, cache)
    return v


def act_quantum_det(
    r: int,
    v: ModuleVector,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply the u^{-r} coefficient of the quantum determinant

        qdet(u) = t_11(u) t_22(u-1) - t_21(u) t_12(u-1).

    The argument shift u-1 re-expands each t^(s) (u-1)^{-s} over powers of
    u^{-1} with the same binomial weights used for series argument shifts.
    On the highest vector this gives lambda1(u) lambda2(u-1); centrality on
    the whole module is a tested consequence of the defining relations.
    """
    if r < 0:
        raise InputError("quantum determinant degree must be >= 0")
    if r == 0:
        return v
    if cache is not None:
        cache.check(hw)
    acc: dict = {}
    for mono, c0 in v.terms.items():
        for y in range(0, r + 1):
            x = r - y
            if x == 0:
                for m2, c2 in _act_mono(1, 1, y, mono, hw, cache).items():
                    _add_into(acc, m2, c0 * c2)
                continue
            for s in range(1, x + 1):
                w = shifted_power_coeff(s, x, _MINUS_ONE)
                if not w:
                    continue
                _compose_into(
                    acc, (1, 1, y), (2, 2, s), mono, hw, cache, c0 * w
                )
                if y >= 1:
                    _compose_into(
                        acc, (2, 1, y), (1, 2, s), mono, hw, cache, -c0 * w
                    )
    out = ModuleVector()
    out._terms = acc
    return out


def in_tail_submodule(v: ModuleVector, p: int) -> bool:
    """True iff every monomial of v contains some index exceeding p.

    The span of such monomials is a proper submodule whenever both weight
    series are polynomials in u^{-1} of degree <= p (the zero vector
    belongs to it vacuously).
    """
    if p < 0:
        raise InputError("p must be >= 0")
    return all(any(idx > p for idx in m) for m in v.terms)


def basis_monomials(max_level: int, max_degree: int) -> list[Monomial]:
    """All PBW basis monomials with level <= max_level and degree <= max_degree.

    Ordered by (level, lexicographic), starting with the empty monomial
    (the highest vector).
    """
    out: list[Monomial] = []

    def extend(prefix: list[int], smallest: int, budget: int) -> None:
        out.append(tuple(prefix))
        if len(prefix) == max_level:
            return
        for r in range(smallest, budget + 1):
            prefix.append(r)
            extend(prefix, r, budget - r)
            prefix.pop()

    extend([], 1, max_degree)
    return sorted(out, key=_mono_sort_key)


WeightInfo = namedtuple("WeightInfo", ["level", "eigenvalue"])


def weight_of(v: ModuleVector, hw: HighestWeightGL2) -> WeightInfo:
    """Level and t_11^(1) - t_22^(1) eigenvalue of a homogeneous vector.

    Level-k monomials all have eigenvalue lambda1^(1) - lambda2^(1) - 2k;
    mixed-level (or zero) vectors are rejected.
    """
    levels = v.levels()
    if len(levels) != 1:
        raise InputError("weight is defined only for nonzero single-level vectors")
    k = levels[0]
    base = hw.coeff(1, 1) - hw.coeff(2, 1)
    return WeightInfo(level=k, eigenvalue=base - 2 * k)
