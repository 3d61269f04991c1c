"""Quaternion arithmetic, parsing and algebraic invariants."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srgft.errors import DomainError, QuaternionParseError
from srgft.quat import (I, J, K, ONE, ImaginaryUnit, Quaternion,
                        format_quaternion, inner_product, parse_quaternion,
                        quaternion_from_json, quaternion_to_json)

# Independent oracle: hand-derived basis product table from
# i^2 = j^2 = k^2 = ijk = -1. Entries: table[a][b] = (sign, basis index).
_BASIS_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def oracle_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    out = [F(0)] * 4
    pc = (p.w, p.x, p.y, p.z)
    qc = (q.w, q.x, q.y, q.z)
    for a in range(4):
        for b in range(4):
            sign, target = _BASIS_TABLE[(a, b)]
            out[target] += sign * pc[a] * qc[b]
    return Quaternion(*out)


def exact(w=0, x=0, y=0, z=0):
    return Quaternion(F(w), F(x), F(y), F(z))


exact_scalars = st.fractions(min_value=-4, max_value=4, max_denominator=64)
exact_quats = st.builds(Quaternion, exact_scalars, exact_scalars,
                        exact_scalars, exact_scalars)
float_scalars = st.floats(min_value=-4, max_value=4, allow_nan=False)
float_quats = st.builds(Quaternion, float_scalars, float_scalars,
                        float_scalars, float_scalars)


class TestMultiplication:
    def test_basis_rules(self):
        assert I * J == K
        assert J * K == I
        assert K * I == J
        assert J * I == -K
        assert I * I == -ONE

    def test_identity(self):
        q = exact(1, 2, 3, 4)
        assert q * ONE == q
        assert ONE * q == q

    def test_half_units_against_oracle(self):
        a = exact(0, F(1, 2), 0, 0)
        q = exact(0, 0, F(1, 2), 0)
        assert a * q == exact(0, 0, 0, F(1, 4))
        assert a * q == oracle_mul(a, q)

    @given(exact_quats, exact_quats)
    @settings(max_examples=60)
    def test_matches_oracle(self, p, q):
        assert p * q == oracle_mul(p, q)

    @given(exact_quats, exact_quats)
    @settings(max_examples=60)
    def test_norm_multiplicative_exact(self, p, q):
        assert (p * q).norm_sq() == p.norm_sq() * q.norm_sq()

    @given(float_quats, float_quats)
    @settings(max_examples=60)
    def test_norm_multiplicative_float(self, p, q):
        lhs = float((p * q).norm_sq())
        rhs = float(p.norm_sq()) * float(q.norm_sq())
        assert abs(lhs - rhs) <= 2.0 ** -40 * max(1.0, abs(rhs))

    @given(exact_quats, exact_quats, exact_quats)
    @settings(max_examples=40)
    def test_associative_distributive_exact(self, p, q, r):
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(float_quats, float_quats, float_quats)
    @settings(max_examples=40)
    def test_associative_float(self, p, q, r):
        a = (p * q) * r
        b = p * (q * r)
        scale = max(1.0, abs(a), abs(b))
        assert abs(a - b) <= 2.0 ** -40 * scale

    @given(exact_quats, exact_quats)
    @settings(max_examples=60)
    def test_conjugation_antihomomorphism(self, p, q):
        assert (p * q).conjugate() == q.conjugate() * p.conjugate()


class TestInverse:
    def test_examples(self):
        assert ONE.inverse() == ONE
        assert I.inverse() == -I
        q = exact(1, 1, 1, 1)
        assert q.inverse() == exact(F(1, 4), F(-1, 4), F(-1, 4), F(-1, 4))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            exact(0).inverse()

    @given(exact_quats)
    @settings(max_examples=60)
    def test_round_trip(self, q):
        if q.is_zero():
            return
        assert q * q.inverse() == ONE
        assert q.inverse() * q == ONE


class TestDecompose:
    def test_simple(self):
        x, y, unit = exact(3, 4).decompose()
        assert (x, y) == (F(3), F(4))
        assert unit == ImaginaryUnit(F(1), F(0), F(0))

    def test_real_convention(self):
        x, y, unit = exact(5).decompose()
        assert (x, y) == (F(5), F(0))
        assert unit == ImaginaryUnit(F(1), F(0), F(0))

    def test_irrational_modulus(self):
        x, y, unit = exact(0, 0, 1, -1).decompose()
        assert x == 0.0
        assert abs(y - math.sqrt(2)) < 1e-15
        assert abs(float(unit.y) - 1 / math.sqrt(2)) < 1e-15
        assert abs(float(unit.z) + 1 / math.sqrt(2)) < 1e-15

    @given(exact_quats)
    @settings(max_examples=60)
    def test_recompose_identity(self, q):
        x, y, unit = q.decompose()
        rebuilt = Quaternion.from_real(x) + unit.as_quaternion() * y
        if q.is_exact and rebuilt.is_exact:
            assert rebuilt == q
        else:
            assert abs(rebuilt - q.to_float()) < 1e-12


class TestParsing:
    def test_rational_terms(self):
        assert parse_quaternion("1/2i") == exact(0, F(1, 2))
        phi = parse_quaternion("-204/225-96/225k")
        assert phi == exact(F(-204, 225), 0, 0, F(-96, 225))
        assert phi.is_exact

    def test_float_mode(self):
        q = parse_quaternion("0.5+0.25i-0.1k")
        assert not q.is_exact
        assert q == Quaternion(0.5, 0.25, 0.0, -0.1)

    def test_bare_units(self):
        assert parse_quaternion("i") == I
        assert parse_quaternion("-j+k") == -J + K
        assert parse_quaternion("3") == exact(3)

    @pytest.mark.parametrize("bad", ["", "1++2", "1i2", "qq", "1/0i", "i+i"])
    def test_errors_carry_position(self, bad):
        with pytest.raises(QuaternionParseError) as err:
            parse_quaternion(bad)
        assert err.value.position >= 0

    @given(exact_quats)
    @settings(max_examples=80)
    def test_round_trip_exact(self, q):
        assert parse_quaternion(format_quaternion(q)) == q

    @given(float_quats)
    @settings(max_examples=80)
    def test_round_trip_float(self, q):
        back = parse_quaternion(format_quaternion(q))
        if q.is_zero():
            assert back.is_zero()
        else:
            assert not back.is_exact
            assert back == q

    @given(exact_quats)
    @settings(max_examples=40)
    def test_json_round_trip(self, q):
        assert quaternion_from_json(quaternion_to_json(q)) == q
        qf = q.to_float()
        assert quaternion_from_json(quaternion_to_json(qf)) == qf


class TestImaginaryUnit:
    def test_square_is_minus_one(self):
        for unit in (ImaginaryUnit(1, 0, 0), ImaginaryUnit(0, 1, 0),
                     ImaginaryUnit(F(3, 5), F(4, 5), 0)):
            q = unit.as_quaternion()
            assert q * q == -ONE

    def test_norm_enforced(self):
        with pytest.raises(DomainError):
            ImaginaryUnit(F(1), F(1), F(0))
        with pytest.raises(DomainError):
            ImaginaryUnit(0.5, 0.5, 0.5)

    def test_inner_product(self):
        assert inner_product(ImaginaryUnit(1, 0, 0), ImaginaryUnit(0, 1, 0)) == 0
        assert inner_product(ImaginaryUnit(1, 0, 0), ImaginaryUnit(1, 0, 0)) == 1

    def test_circle_point(self):
        unit = ImaginaryUnit(0, 1, 0)
        q = unit.circle_point(math.pi / 2, 0.5)
        assert abs(q - Quaternion(0.0, 0.0, 0.5, 0.0)) < 1e-15


class TestNonFinite:
    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            Quaternion(float("nan"), 0.0, 0.0, 0.0)
        with pytest.raises(DomainError):
            Quaternion(0.0, float("inf"), 0.0, 0.0)

    def test_mixed_mode_promotes(self):
        q = Quaternion(F(1, 2), 0.5, F(0), F(0))
        assert not q.is_exact
        assert q.w == 0.5
