"""Exact polynomial and rational-function layer."""

import random
from fractions import Fraction

import pytest

from yverma import (
    InputError,
    POLY_ONE,
    POLY_U,
    POLY_ZERO,
    PolyQ,
    RationalFn,
    parse_rational_fn,
    poly_gcd,
    rat,
    rational_roots,
    render_poly,
    render_rational_fn,
)


class TestPolyQ:
    def test_trailing_zeros_stripped(self):
        assert PolyQ([1, 2, 0, 0]) == PolyQ([1, 2])
        assert PolyQ([0, 0]).degree == -1
        assert PolyQ([]) == POLY_ZERO

    def test_degree_and_leading(self):
        p = PolyQ([3, 0, 2])
        assert p.degree == 2
        assert p.leading == 2
        assert POLY_ZERO.degree == -1

    def test_coeff_beyond_degree_is_zero(self):
        p = PolyQ([1, 2])
        assert p.coeff(5) == 0
        assert p.coeff(0) == 1

    def test_ring_ops(self):
        a = PolyQ([1, 1])          # u + 1
        b = PolyQ([2, 1])          # u + 2
        assert a * b == PolyQ([2, 3, 1])
        assert a + b == PolyQ([3, 2])
        assert b - a == PolyQ([1])
        assert (-a) + a == POLY_ZERO
        assert a.scaled(Fraction(1, 2)) == PolyQ([Fraction(1, 2), Fraction(1, 2)])

    def test_eval(self):
        p = PolyQ([2, 3, 1])
        assert p(Fraction(-1)) == 0
        assert p(Fraction(-2)) == 0
        assert p(Fraction(1)) == 6

    def test_divmod(self):
        num = PolyQ([2, 3, 1])
        q, r = divmod(num, PolyQ([1, 1]))
        assert q == PolyQ([2, 1]) and r == POLY_ZERO
        q, r = divmod(PolyQ([1, 0, 1]), PolyQ([1, 1]))
        assert q == PolyQ([-1, 1]) and r == PolyQ([2])
        assert num % PolyQ([1, 1]) == POLY_ZERO
        assert num // PolyQ([1, 1]) == PolyQ([2, 1])

    def test_division_identity_random(self):
        rng = random.Random(3)
        for _ in range(25):
            a = PolyQ([rng.randint(-5, 5) for _ in range(rng.randint(0, 5))])
            b = PolyQ([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1])
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.degree < b.degree

    def test_shift_arg(self):
        p = PolyQ([0, 0, 1])  # u^2
        assert p.shift_arg(1) == PolyQ([1, 2, 1])
        assert p.shift_arg(-1) == PolyQ([1, -2, 1])
        q = PolyQ([2, 3, 1])
        assert q.shift_arg(0) == q
        # shift is a ring homomorphism
        a, b = PolyQ([1, 2, 1]), PolyQ([-1, 1])
        assert (a * b).shift_arg(2) == a.shift_arg(2) * b.shift_arg(2)

    def test_monic(self):
        assert PolyQ([2, 4]).monic() == PolyQ([Fraction(1, 2), 1])
        assert POLY_ZERO.monic() == POLY_ZERO  # zero is fixed, not an error

    def test_poly_gcd(self):
        a = PolyQ([2, 3, 1])   # (u+1)(u+2)
        b = PolyQ([3, 4, 1])   # (u+1)(u+3)
        assert poly_gcd(a, b) == PolyQ([1, 1])
        assert poly_gcd(a, POLY_ZERO) == a.monic()
        assert poly_gcd(PolyQ([1, 1]), PolyQ([2, 1])) == POLY_ONE


class TestRationalRoots:
    def test_splitting(self):
        p = PolyQ([2, 3, 1])
        assert rational_roots(p) == [Fraction(-2), Fraction(-1)]

    def test_multiplicity(self):
        p = PolyQ([1, 2, 1])  # (u+1)^2
        assert rational_roots(p) == [Fraction(-1), Fraction(-1)]

    def test_zero_roots(self):
        p = PolyQ([0, 0, 1, 1])  # u^2 (u+1)
        assert rational_roots(p) == [Fraction(-1), Fraction(0), Fraction(0)]

    def test_non_splitting_is_none(self):
        assert rational_roots(PolyQ([1, 0, 1])) is None        # u^2 + 1
        assert rational_roots(PolyQ([-2, 0, 1])) is None       # u^2 - 2

    def test_fractional_roots(self):
        p = PolyQ([1, 2]) * PolyQ([-1, 3])  # (2u+1)(3u-1)
        assert rational_roots(p) == [Fraction(-1, 2), Fraction(1, 3)]

    def test_constant(self):
        assert rational_roots(POLY_ONE) == []


class TestRationalFn:
    def test_canonical_form(self):
        f = RationalFn(PolyQ([4, 6, 2]), PolyQ([2, 4, 2]))  # 2(u+1)(u+2) / 2(u+1)^2
        assert f.num == PolyQ([2, 1])
        assert f.den == PolyQ([1, 1])

    def test_rejects_unequal_degrees(self):
        with pytest.raises(InputError):
            RationalFn(PolyQ([1, 1]), PolyQ([1, 1, 1]))

    def test_rejects_unequal_leading(self):
        with pytest.raises(InputError):
            RationalFn(PolyQ([0, 2]), PolyQ([1, 1]))

    def test_rejects_zero(self):
        with pytest.raises(InputError):
            RationalFn(POLY_ZERO, POLY_ONE)

    def test_is_one(self):
        assert RationalFn(PolyQ([1, 1]), PolyQ([1, 1])).is_one()
        assert not RationalFn(PolyQ([2, 1]), PolyQ([1, 1])).is_one()

    def test_equality_of_equivalent_forms(self):
        a = RationalFn(PolyQ([2, 1]), PolyQ([1, 1]))
        b = RationalFn(PolyQ([2, 3, 1]), PolyQ([1, 2, 1]))  # multiplied by (u+1)
        assert a == b


class TestParser:
    def test_basic(self):
        f = parse_rational_fn("(u+2)/(u+1)")
        assert f.num == PolyQ([2, 1]) and f.den == PolyQ([1, 1])

    def test_powers_and_products(self):
        f = parse_rational_fn("(u+2)^2/(u+1)^2")
        assert f.num == PolyQ([4, 4, 1]) and f.den == PolyQ([1, 2, 1])
        g = parse_rational_fn("(u+1)(u+3)/(u(u+2))")
        assert g.num == PolyQ([3, 4, 1]) and g.den == PolyQ([0, 2, 1])

    def test_fractional_coefficients(self):
        f = parse_rational_fn("(u+1/2)/u")
        assert f.num == PolyQ([Fraction(1, 2), 1])

    def test_juxtaposition_coefficient(self):
        f = parse_rational_fn("(u^2+3u+1)/(u^2+1)")
        assert f.num == PolyQ([1, 3, 1]) and f.den == PolyQ([1, 0, 1])

    def test_unary_minus_and_spaces(self):
        f = parse_rational_fn(" (u - 1) / (u + 2) ")
        assert f.num == PolyQ([-1, 1])
        g = parse_rational_fn("(-1+u)/(u+2)")
        assert g == f

    def test_one(self):
        assert parse_rational_fn("1").is_one()

    def test_rejects_garbage(self):
        for bad in ["", "u+", "(u+2", "u/v", "2^u", "u^-1", "(u+2)//u", "3..5"]:
            with pytest.raises(InputError):
                parse_rational_fn(bad)

    def test_rejects_degree_mismatch(self):
        with pytest.raises(InputError):
            parse_rational_fn("(u+1)/(u^2+1)")

    def test_roundtrip_via_render(self):
        rng = random.Random(5)
        for _ in range(25):
            deg = rng.randint(1, 4)
            num = PolyQ([Fraction(rng.randint(-9, 9)) for _ in range(deg)] + [1])
            den = PolyQ([Fraction(rng.randint(-9, 9)) for _ in range(deg)] + [1])
            if num.degree != deg or den.degree != deg:
                continue
            try:
                f = RationalFn(num, den)
            except InputError:
                continue
            assert parse_rational_fn(str(f)) == f


class TestRender:
    def test_poly(self):
        assert render_poly(PolyQ([1, 3, 1])) == "u^2+3*u+1"
        assert render_poly(PolyQ([0, -1])) == "-u"
        assert render_poly(POLY_ZERO) == "0"
        assert render_poly(PolyQ([Fraction(1, 2)])) == "1/2"

    def test_rational_fn(self):
        f = RationalFn(PolyQ([2, 1]), PolyQ([1, 1]))
        assert render_rational_fn(f) == "(u+2)/(u+1)"
        assert str(f) == "(u+2)/(u+1)"
        one = RationalFn(POLY_ONE, POLY_ONE)
        assert render_rational_fn(one) == "(1)/(1)"


def test_rat_coercion():
    assert rat(3) == Fraction(3)
    assert rat("2/5") == Fraction(2, 5)
    assert rat(Fraction(1, 7)) == Fraction(1, 7)
    with pytest.raises(InputError):
        rat(0.5)
