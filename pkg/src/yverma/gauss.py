"""The sl(2) generators e(u), f(u), h(u) inside the gl(2) Yangian.

The Gauss decomposition of the generator matrix gives

    e(u) = t_22(u)^{-1} t_12(u),
    f(u) = t_21(u) t_22(u)^{-1},
    h(u) = t_11(u) t_22(u)^{-1} - t_21(u) t_22(u)^{-1} t_12(u) t_22(u)^{-1},

expanded as e(u) = sum_{r>=0} e^(r) u^{-r-1} (same for f) and
h(u) = 1 + sum_{r>=0} h^(r) u^{-r-1}.  The operator coefficients of
t_22(u)^{-1} are computed by the inverse recursion

    [t22inv]^(0) = id,
    [t22inv]^(a) = - sum_{c=1}^{a} t_22^(c) [t22inv]^(a-c),

and factors of each product are applied right to left.

Only the ratio mu(u) = lambda1(u)/lambda2(u) matters for this restricted
action up to isomorphism; an sl(2) highest weight is therefore given either
as a ``RationalFn`` (realized by the polynomial weight pair) or as a
truncated ``SeriesU`` (realized as the pair (mu, 1)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from .errors import InputError
from .rational import RationalFn
from .series import SERIES_ONE, SeriesU, shifted_power_coeff
from .verma import (
    ActionCache,
    HighestWeightGL2,
    ModuleVector,
    act_generator,
    act_quantum_det,
    basis_monomials,
    canonical_polynomial_weights,
)

#: An sl(2) highest weight: the series mu(u), exactly or in truncation.
SL2Weight = Union[SeriesU, RationalFn]


def as_gl2_weights(mu: SL2Weight) -> HighestWeightGL2:
    """A gl(2) weight pair realizing the given ratio mu."""
    if isinstance(mu, RationalFn):
        return canonical_polynomial_weights(mu)
    if isinstance(mu, SeriesU):
        return HighestWeightGL2(mu, SERIES_ONE)
    raise InputError(f"not an sl(2) highest weight: {mu!r}")


def _t22_inverse_chain(
    v: ModuleVector,
    max_a: int,
    hw: HighestWeightGL2,
    cache: Optional[ActionCache],
) -> list[ModuleVector]:
    """[t22inv]^(a) v for a = 0..max_a, via the inverse recursion."""
    chain = [v]
    for a in range(1, max_a + 1):
        acc = ModuleVector.zero()
        for c in range(1, a + 1):
            acc = acc - act_generator(2, 2, c, chain[a - c], hw, cache)
        chain.append(acc)
    return chain


def act_f(
    r: int,
    v: ModuleVector,
    hw_or_mu: Union[HighestWeightGL2, SL2Weight],
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply f^(r) = sum_{a+b=r+1, b>=1} t_21^(b) [t22inv]^(a), r >= 0."""
    if r < 0:
        raise InputError("f index must be >= 0")
    hw = _coerce_hw(hw_or_mu)
    n = r + 1
    chain = _t22_inverse_chain(v, n - 1, hw, cache)
    out = ModuleVector.zero()
    for b in range(1, n + 1):
        out = out + act_generator(2, 1, b, chain[n - b], hw, cache)
    return out


def act_e(
    r: int,
    v: ModuleVector,
    hw_or_mu: Union[HighestWeightGL2, SL2Weight],
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply e^(r) = sum_{a+b=r+1, b>=1} [t22inv]^(a) t_12^(b), r >= 0."""
    if r < 0:
        raise InputError("e index must be >= 0")
    hw = _coerce_hw(hw_or_mu)
    n = r + 1
    out = ModuleVector.zero()
    for b in range(1, n + 1):
        vb = act_generator(1, 2, b, v, hw, cache)
        if vb.is_zero():
            continue
        chain = _t22_inverse_chain(vb, n - b, hw, cache)
        out = out + chain[n - b]
    return out


def act_h(
    r: int,
    v: ModuleVector,
    hw_or_mu: Union[HighestWeightGL2, SL2Weight],
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """Apply h^(r), the u^{-r-1} coefficient of h(u), r >= 0."""
    if r < 0:
        raise InputError("h index must be >= 0")
    hw = _coerce_hw(hw_or_mu)
    n = r + 1
    chain = _t22_inverse_chain(v, n, hw, cache)
    out = ModuleVector.zero()
    # t_11(u) t_22(u)^{-1}: the t^(0)_11 = id term contributes chain[n]
    for a in range(0, n + 1):
        out = out + act_generator(1, 1, n - a, chain[a], hw, cache)
    # - t_21(u) t_22(u)^{-1} t_12(u) t_22(u)^{-1}, rightmost factor first
    for a2 in range(0, n - 1):
        for b2 in range(1, n - a2):
            z = act_generator(1, 2, b2, chain[a2], hw, cache)
            if z.is_zero():
                continue
            inner = _t22_inverse_chain(z, n - a2 - b2 - 1, hw, cache)
            for a1 in range(0, n - a2 - b2):
                b1 = n - a1 - b2 - a2
                out = out - act_generator(2, 1, b1, inner[a1], hw, cache)
    return out


def act_h_via_quantum_det(
    r: int,
    v: ModuleVector,
    hw_or_mu: Union[HighestWeightGL2, SL2Weight],
    cache: Optional[ActionCache] = None,
) -> ModuleVector:
    """h^(r) computed along the alternative route

        h(u) = t_22(u)^{-1} t_22(u-1)^{-1} qdet(u),

    where the middle factor re-expands [t22inv]^(s) (u-1)^{-s} with the
    usual binomial shift weights.  Exists for cross-checking ``act_h``.
    """
    if r < 0:
        raise InputError("h index must be >= 0")
    hw = _coerce_hw(hw_or_mu)
    n = r + 1
    out = ModuleVector.zero()
    for z in range(0, n + 1):
        vz = act_quantum_det(z, v, hw, cache) if z else v
        rem = n - z
        # u^{-w} coefficient of t_22(u-1)^{-1} applied next
        chain_z = _t22_inverse_chain(vz, rem, hw, cache)
        for w in range(0, rem + 1):
            if w == 0:
                piece = vz
            else:
                piece = ModuleVector.zero()
                for s in range(1, w + 1):
                    coef = shifted_power_coeff(s, w, Fraction(-1))
                    if coef:
                        piece = piece + chain_z[s].scaled(coef)
            # then the plain t_22(u)^{-1} coefficient a = n - z - w
            a = rem - w
            piece_chain = _t22_inverse_chain(piece, a, hw, cache)
            out = out + piece_chain[a]
    return out


def _coerce_hw(hw_or_mu: Union[HighestWeightGL2, SL2Weight]) -> HighestWeightGL2:
    if isinstance(hw_or_mu, HighestWeightGL2):
        return hw_or_mu
    return as_gl2_weights(hw_or_mu)


def restriction_check(
    mu: SL2Weight,
    max_r: int,
    max_level: int,
    max_degree: Optional[int] = None,
    cache: Optional[ActionCache] = None,
) -> bool:
    """Verify the sl(2)-type relations on a window of basis monomials:

        [e^(r), f^(s)] = h^(r+s)   and   [h^(r), h^(s)] = 0

    for all r, s <= max_r, on every basis monomial with level <= max_level
    and degree <= max_degree (default 2 * max_level).
    """
    hw = _coerce_hw(mu)
    if max_degree is None:
        max_degree = 2 * max_level
    if cache is None:
        cache = ActionCache(hw)
    for mono in basis_monomials(max_level, max_degree):
        v = ModuleVector({mono: 1})
        for r in range(max_r + 1):
            for s in range(max_r + 1):
                ef = act_e(r, act_f(s, v, hw, cache), hw, cache)
                fe = act_f(s, act_e(r, v, hw, cache), hw, cache)
                if ef - fe != act_h(r + s, v, hw, cache):
                    return False
                hh = act_h(r, act_h(s, v, hw, cache), hw, cache)
                hh2 = act_h(s, act_h(r, v, hw, cache), hw, cache)
                if hh != hh2:
                    return False
    return True
