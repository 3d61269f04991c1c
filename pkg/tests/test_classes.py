"""Membership predicates, generators and the sampling grid."""

import math
from fractions import Fraction as F
from random import Random

import pytest

from srgft.classes import (DEFAULT_GRID, FunctionUnderTest, SamplingGrid,
                           caratheodory_extremal, caratheodory_extremal_quotient,
                           caratheodory_mixture_evaluator,
                           caratheodory_mixture_parts, certify_small_coeff,
                           generate_caratheodory,
                           generate_close_to_convex,
                           generate_starlike_small_coeff, is_caratheodory,
                           is_close_to_convex, is_one_slice,
                           is_slice_preserving, is_starlike, koebe,
                           koebe_quotient, random_exact_unit,
                           rogosinski_extremal, rogosinski_extremal_quotient,
                           small_coeff_margin)
from srgft.errors import DomainError, PreconditionError
from srgft.quat import I, J, K, ONE, Quaternion
from srgft.series import SliceSeries, odd_part, slice_derivative


def exact(w=0, x=0, y=0, z=0):
    return Quaternion(F(w), F(x), F(y), F(z))


def series(coeffs, valuation=0):
    return SliceSeries.from_coeffs([c if isinstance(c, Quaternion) else exact(c)
                                    for c in coeffs], valuation)


class TestGrid:
    def test_default_shape(self):
        g = DEFAULT_GRID
        for required in (0.1, 0.5, 0.9, 0.95, 0.99):
            assert required in g.radii
        assert len(g.units) == 3
        assert len(g.angles) == 8
        assert all(float(q.norm_sq()) < 1.0 for q in g.points)

    def test_directions_are_units(self):
        for u in DEFAULT_GRID.directions:
            assert abs(float(u.norm_sq()) - 1.0) < 1e-12

    def test_negative_real_direction_present(self):
        assert any(abs(u + ONE.to_float()) < 1e-12 for u in DEFAULT_GRID.directions)

    def test_extra_units(self):
        g = SamplingGrid.default(unit_count=6)
        assert len(g.units) == 6

    def test_invalid_radii(self):
        with pytest.raises(DomainError):
            SamplingGrid.default(radii=(0.5, 0.2))
        with pytest.raises(DomainError):
            SamplingGrid.default(radii=(1.2,))


class TestCaratheodoryPredicate:
    def test_constant_one(self):
        v = is_caratheodory(SliceSeries.one(4))
        assert v.member and v.certificate == "sampled"
        assert abs(v.margin - 1.0) < 1e-12

    def test_extremal_member(self):
        quot = caratheodory_extremal_quotient(I)
        fut = FunctionUnderTest("extremal", caratheodory_extremal(I, 24),
                                value_fn=quot.eval)
        v = is_caratheodory(fut)
        assert v.member
        # sharp lower bound (1-r)/(1+r) at the largest radius
        assert abs(v.margin - (1 - 0.99) / (1 + 0.99)) < 1e-9

    def test_refuted_with_witness(self):
        v = is_caratheodory(series([1, 3]).pad_to(4))
        assert not v.member and v.certificate == "refuted"
        assert v.witness is not None
        # worst point is on the negative real axis at the largest radius
        assert v.witness["q"][0] < -0.9

    def test_wrong_constant_refuted(self):
        v = is_caratheodory(series([2, 1]))
        assert not v.member and v.witness["n"] == 0


class TestStarlikePredicate:
    def test_identity_member(self):
        v = is_starlike(SliceSeries.identity(4))
        assert v.member and v.margin > 0.9

    def test_half_square_member(self):
        f = series([ONE, exact(F(1, 2))], valuation=1)
        assert is_starlike(f).member

    def test_zero_inside_refuted(self):
        f = series([ONE, exact(2)], valuation=1)  # q + 2 q^2 vanishes at -1/2
        v = is_starlike(f)
        assert not v.member and v.certificate == "refuted"

    def test_orders(self):
        with pytest.raises(DomainError):
            is_starlike(SliceSeries.identity(4), alpha=1.0)
        assert is_starlike(SliceSeries.identity(4), alpha=0.9).member

    def test_bad_normalization(self):
        assert not is_starlike(series([2], valuation=1)).member
        assert not is_starlike(series([1, 1])).member


class TestCloseToConvexPredicate:
    def test_starlike_subset(self):
        f = generate_starlike_small_coeff(3, 16)
        assert is_close_to_convex(f, f).member

    def test_refuted(self):
        f = series([-1], valuation=1).pad_to(4)  # -q against h = q
        h = SliceSeries.identity(4)
        v = is_close_to_convex(f, h)
        assert not v.member and v.margin < 0

    def test_uncertified_reference_rejected(self):
        with pytest.raises(PreconditionError):
            is_close_to_convex(SliceSeries.identity(4), series([1, 1]))


class TestSlicePredicates:
    def test_slice_preserving(self):
        assert is_slice_preserving(koebe(ONE, 12)).member
        assert not is_slice_preserving(series([I], valuation=1)).member
        assert is_slice_preserving(SliceSeries.zero(3)).member

    def test_one_slice(self):
        v = is_one_slice(series([1, I, exact(0, 3)]))
        assert v.member and v.witness["axis"] == [1.0, 0.0, 0.0]
        assert not is_one_slice(series([I, J])).member
        v_real = is_one_slice(series([1, 2, 3]))
        assert v_real.member and v_real.witness["axis"] == [1.0, 0.0, 0.0]

    def test_koebe_directions(self):
        assert is_one_slice(koebe(I, 16)).member
        diag = (I + J).to_float() * (1 / math.sqrt(2))
        assert is_one_slice(koebe(diag, 16)).member


class TestGenerators:
    def test_small_coeff_certificate(self):
        f = generate_starlike_small_coeff(42, 32)
        margin = small_coeff_margin(f)
        assert margin >= F(257, 512)  # sum n|a_n| <= 255/512 by construction
        assert certify_small_coeff(f).certificate == "analytic-sufficient"
        assert is_starlike(f).member

    def test_small_coeff_deterministic(self):
        assert generate_starlike_small_coeff(7, 16) == generate_starlike_small_coeff(7, 16)
        assert generate_starlike_small_coeff(7, 16) != generate_starlike_small_coeff(8, 16)

    def test_caratheodory_extremal_coefficients(self):
        p = caratheodory_extremal(I, 16)
        power = I
        for n in range(1, 17):
            assert p.coeff(n) == power * 2
            assert p.coeff(n).norm_sq() == 4
            power = power * I

    def test_caratheodory_mixture_member(self):
        lams, units = caratheodory_mixture_parts(9, 3)
        assert sum(lams) == 1
        p = generate_caratheodory(9, 24, 3)
        fut = FunctionUnderTest("p", p, value_fn=caratheodory_mixture_evaluator(lams, units))
        assert is_caratheodory(fut).member
        # averaging conjugate extremals gives real coefficients
        u = random_exact_unit(Random(1))
        mix = caratheodory_extremal(u, 12).scale(F(1, 2)) + \
            caratheodory_extremal(u.conjugate(), 12).scale(F(1, 2))
        assert is_slice_preserving(mix).member

    def test_close_to_convex_identity_case(self):
        f = generate_close_to_convex(SliceSeries.identity(8), SliceSeries.one(8))
        assert f == SliceSeries.identity(8)

    def test_close_to_convex_koebe_factorization(self):
        # h = Koebe, p = its own radial quotient: reproduces Koebe
        u = I
        quot_k = koebe_quotient(u)
        h = FunctionUnderTest("koebe", koebe(u, 16), value_fn=quot_k.eval,
                              derivative_fn=quot_k.derivative().eval,
                              certificates=("starlike",))
        quot_p = caratheodory_extremal_quotient(u)
        p = FunctionUnderTest("extremal", caratheodory_extremal(u, 16),
                              value_fn=quot_p.eval, certificates=("caratheodory",))
        f = generate_close_to_convex(h, p)
        expected = koebe(u, 16)
        for n in range(1, 16):
            assert f.coeff(n) == expected.coeff(n)

    def test_close_to_convex_coefficient_identity(self):
        h = generate_starlike_small_coeff(5, 20)
        lams, units = caratheodory_mixture_parts(6, 2)
        p = generate_caratheodory(6, 20, 2)
        fut_p = FunctionUnderTest("p", p, value_fn=caratheodory_mixture_evaluator(lams, units))
        f = generate_close_to_convex(h, fut_p)
        for n in range(2, 20):
            acc = p.coeff(n - 1)
            for k in range(2, n):
                acc = acc + h.coeff(k) * p.coeff(n - k)
            acc = acc + h.coeff(n)
            assert f.coeff(n) * n == acc

    def test_close_to_convex_requires_certified_inputs(self):
        bad_h = series([ONE, exact(2)], valuation=1)
        with pytest.raises(PreconditionError):
            generate_close_to_convex(bad_h, SliceSeries.one(8))
        with pytest.raises(PreconditionError):
            generate_close_to_convex(SliceSeries.identity(8), series([1, 3]).pad_to(8))


class TestKoebe:
    def test_unit_one(self):
        f = koebe(ONE, 12)
        for n in range(1, 13):
            assert f.coeff(n) == exact(n)

    def test_unit_k_powers(self):
        f = koebe(K, 6)
        assert f.coeff(3) == exact(-3)  # 3 k^2 = -3

    def test_modulus_exact(self):
        u = random_exact_unit(Random(3))
        f = koebe(u, 24)
        for n in range(1, 25):
            assert f.coeff(n).norm_sq() == F(n * n)

    def test_non_unit_rejected(self):
        with pytest.raises(DomainError):
            koebe(exact(F(1, 2)), 8)
        with pytest.raises(DomainError):
            koebe(Quaternion(0.0, 0.7, 0.7, 0.0), 8)


class TestRogosinskiExtremal:
    def test_p_zero_collapses_to_linear(self):
        b = exact(0, F(1, 2))
        f = rogosinski_extremal(b, exact(0), 12)
        assert f.coeff(1) == b
        for n in range(2, 13):
            assert f.coeff(n).is_zero()

    def test_derivative_at_zero(self):
        rng = Random(14)
        for _ in range(5):
            u = random_exact_unit(rng)
            b = u * F(rng.randint(1, 7), 16)
            p = random_exact_unit(rng) * F(rng.randint(0, 8), 8)
            f = rogosinski_extremal(b, p, 10)
            assert f.coeff(1) == b

    def test_self_map_on_grid(self):
        b = exact(0, F(1, 2))
        quot, _ = rogosinski_extremal_quotient(b, ONE)
        for q in DEFAULT_GRID.points[::5]:
            assert abs(q * quot.eval(q)) < 1.0

    def test_zero_derivative_rejected(self):
        with pytest.raises(DomainError):
            rogosinski_extremal(exact(0), ONE, 8)


class TestOddPartBridge:
    def test_bridge(self):
        # f = q + c q^2 with small c: the half-difference screen holds,
        # the odd part is starlike and f is close-to-convex against it
        f = series([ONE, exact(F(1, 4))], valuation=1).pad_to(8)
        half_diff = odd_part(f)
        ff = f.to_float()
        df = slice_derivative(ff)
        hf = half_diff.to_float()
        for q in DEFAULT_GRID.points:
            lhs = hf.eval(q).inverse() * (q * df.eval(q))
            assert lhs.w > 0
        assert is_starlike(half_diff).member
        assert is_close_to_convex(f, half_diff).member
