"""Weight-space dimensions of the irreducible quotient, two ways.

*Gram route.*  The module carries a contravariant bilinear form fixed by
``<1,1> = 1`` and the transposition anti-automorphism t_12 <-> t_21: the
pairing of two PBW monomials of equal level applies the t_12-word of one
to the other and reads off the highest-vector coefficient.  The radical of
this form is the maximal proper submodule, so for a rational weight mu of
degree p, monomials with all indices in {1..p} span the irreducible
quotient and the rank of their exact Gram matrix at level k is the
dimension of its weight space mu^(0) - 2k.

*Product-formula route.*  Writing mu(u) = prod_i (u + a_i) / (u + b_i)
with the pairs greedily reordered so that a_1 - b_1, ..., a_l - b_l are
the nonnegative integer differences (smallest difference first, ties by
smaller a), the character of the irreducible quotient factors as

    prod_{i<=l} (x^{d_i+1} - x^{-d_i-1})/(x - x^{-1})
    * prod_{i>l} x^{d_i+1}/(x - x^{-1}),        d_i = a_i - b_i,

whose level-k coefficient is a convolution of truncated all-ones
sequences.  Agreement of the two routes is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from . import linalg
from .errors import InputError
from .parallel import pmap
from .rational import RationalFn, rational_roots
from .verma import (
    ActionCache,
    HighestWeightGL2,
    Monomial,
    ModuleVector,
    act_generator,
    canonical_polynomial_weights,
)

_ZERO = Fraction(0)


def contravariant_pairing(
    m1: Monomial,
    m2: Monomial,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache] = None,
) -> Fraction:
    """<m1, m2>: apply the t_12-word of m1 to m2, read the 1-coefficient.

    Defined for monomials of equal level; the t_12^(r) commute, so the
    application order within the word is immaterial.
    """
    m1 = tuple(m1)
    m2 = tuple(m2)
    if len(m1) != len(m2):
        raise InputError("pairing requires equal levels")
    v = ModuleVector.basis(m2)
    for r in m1:
        v = act_generator(1, 2, r, v, hw, cache)
        if v.is_zero():
            return _ZERO
    return v.coefficient(())


def pair_vectors(
    v1: ModuleVector,
    v2: ModuleVector,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache] = None,
) -> Fraction:
    """Bilinear extension of the monomial pairing; unequal levels pair to zero."""
    total = _ZERO
    for m1, c1 in v1.terms.items():
        for m2, c2 in v2.terms.items():
            if len(m1) == len(m2):
                total += c1 * c2 * contravariant_pairing(m1, m2, hw, cache)
    return total


@dataclass(frozen=True)
class GramReport:
    """Exact Gram data of the level-k spanning set of the irreducible quotient."""

    level: int
    spanning_size: int
    rank: int


def irreducible_weight_dims(
    mu: RationalFn, max_level: int, *, workers: int = 1
) -> list[GramReport]:
    """dim of the weight space mu^(0) - 2k of the irreducible quotient, k <= max_level.

    Uses the canonical polynomial realization: level-k monomials with all
    indices in {1..p} span the quotient's weight space, and the exact rank
    of their Gram matrix is its dimension.
    """
    if max_level < 0:
        raise InputError("max_level must be >= 0")
    hw = canonical_polynomial_weights(mu)
    p = mu.degree
    cache = ActionCache(hw)
    reports = []
    for k in range(max_level + 1):
        monos = list(combinations_with_replacement(range(1, p + 1), k))
        n = len(monos)
        flat = pmap(
            lambda ab: contravariant_pairing(ab[0], ab[1], hw, cache),
            [(m1, m2) for m1 in monos for m2 in monos],
            workers,
        )
        gram = [flat[i * n : (i + 1) * n] for i in range(n)]
        reports.append(GramReport(level=k, spanning_size=n, rank=linalg.rank(gram)))
    return reports


def reorder_strings(
    alphas: Sequence[Fraction], betas: Sequence[Fraction]
) -> tuple[tuple[tuple[Fraction, Fraction], ...], int]:
    """Greedy pairing of numerator/denominator shifts for the character product.

    Repeatedly extracts the pair (a, b) whose difference a - b is the
    smallest nonnegative integer (ties broken by smaller a); stops when no
    remaining pair has a nonnegative integer difference and pairs the rest
    by descending value.  Returns the ordered pairs and the count l of
    integer-difference leading pairs.
    """
    if len(alphas) != len(betas):
        raise InputError("need equally many numerator and denominator shifts")
    rem_a = sorted(alphas)
    rem_b = sorted(betas)
    pairs: list[tuple[Fraction, Fraction]] = []
    while rem_a:
        best = None
        for a in rem_a:
            for b in rem_b:
                d = a - b
                if d >= 0 and d.denominator == 1:
                    key = (d, a)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        d, a = best
        b = a - d
        rem_a.remove(a)
        rem_b.remove(b)
        pairs.append((a, b))
    l = len(pairs)
    pairs.extend(zip(sorted(rem_a, reverse=True), sorted(rem_b, reverse=True)))
    return tuple(pairs), l


@dataclass(frozen=True)
class CharacterResult:
    """Shift pairs in formula order, the integer-pair count, and level dims."""

    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]
    integer_pair_count: int
    dims: tuple[int, ...]


def character_formula(mu: RationalFn, max_level: int) -> CharacterResult:
    """Level dimensions of the irreducible quotient via the product formula.

    Requires both numerator and denominator of mu to split over Q;
    otherwise the input is unsupported and ``InputError`` is raised.
    ``dims[k]`` is the dimension at weight mu^(0) - 2k for k <= max_level.
    """
    if max_level < 0:
        raise InputError("max_level must be >= 0")
    num_roots = rational_roots(mu.num)
    den_roots = rational_roots(mu.den)
    if num_roots is None or den_roots is None:
        raise InputError(
            "character formula needs mu to factor into rational linear factors"
        )
    alphas = [-r for r in num_roots]
    betas = [-r for r in den_roots]
    pairs, l = reorder_strings(alphas, betas)

    dims = [1] + [0] * max_level
    for i, (a, b) in enumerate(pairs):
        if i < l:
            d = int(a - b)
            factor = [1] * min(d + 1, max_level + 1)
        else:
            factor = [1] * (max_level + 1)
        dims = _convolve_trunc(dims, factor, max_level)
    return CharacterResult(
        alphas=tuple(a for a, _ in pairs),
        betas=tuple(b for _, b in pairs),
        integer_pair_count=l,
        dims=tuple(dims),
    )


def _convolve_trunc(a: list[int], b: list[int], max_k: int) -> list[int]:
    out = [0] * (max_k + 1)
    for i, x in enumerate(a[: max_k + 1]):
        if x:
            for j, y in enumerate(b[: max_k + 1 - i]):
                out[i + j] += x * y
    return out
