"""Theorem checks against their documented extremal and trivial cases."""

import json
from fractions import Fraction as F

import pytest

from srgft.checks import (SuiteConfig, SUITES, caratheodory_extremal_function,
                          check_bieberbach, check_bohr,
                          check_caratheodory_bounds,
                          check_convex_coefficients,
                          check_convex_covering_examples, check_fekete_szego,
                          check_growth_distortion, check_growth_order_m,
                          check_hayman, check_koebe_quarter,
                          check_monotone_modulus, check_quotient_equivalences,
                          check_rogosinski, check_schwarz,
                          check_schwarz_pick_coefficient,
                          check_schwarz_pick_counterexample,
                          check_sharper_caratheodory,
                          check_subordination_growth, close_to_convex_member,
                          constant_function, convex_function, convex_member,
                          identity_function, koebe_function, mobius_function,
                          mobius_times_unit_function, monomial_function,
                          odd_reference_function, quotient_pair,
                          rogosinski_function, run_suites, sample_lambdas,
                          starlike_member, caratheodory_member)
from srgft.classes import DEFAULT_GRID, SamplingGrid
from srgft.errors import PreconditionError
from srgft.quat import I, J, K, ONE, Quaternion
from srgft.series import EvalDomain, SliceSeries

SMALL_GRID = SamplingGrid.default(radii=(0.2, 0.5, 0.8, 0.95), angle_count=4)


def exact(w=0, x=0, y=0, z=0):
    return Quaternion(F(w), F(x), F(y), F(z))


class TestBieberbach:
    def test_koebe_all_equalities(self):
        report = check_bieberbach(koebe_function(ONE, 24))
        assert report.passed
        assert len(report.params["equalities"]) == 23

    def test_small_members_strict(self):
        report = check_bieberbach(starlike_member(3, 24))
        assert report.passed
        assert "equalities" not in report.params
        assert report.worst_margin > 1.0

    def test_identity_margins(self):
        report = check_bieberbach(identity_function(8))
        assert report.passed and report.worst_margin == 2.0

    def test_close_to_convex_members(self):
        report = check_bieberbach(close_to_convex_member(1, 24))
        assert report.passed


class TestConvexCoefficients:
    def test_reference_equalities(self):
        report = check_convex_coefficients(convex_function(16))
        assert report.passed
        assert len(report.params["equalities"]) == 15

    def test_identity(self):
        report = check_convex_coefficients(identity_function(8))
        assert report.passed and report.worst_margin == 1.0

    def test_members_strict(self):
        report = check_convex_coefficients(convex_member(4, 16))
        assert report.passed and report.worst_margin > 0.5


class TestFeketeSzego:
    def test_koebe_lambda_zero(self):
        report = check_fekete_szego(koebe_function(ONE, 8), [exact(0)])
        assert report.passed
        assert report.params["equalities"]  # |a_3| = 3 = max(1, 3)

    def test_koebe_lambda_three_quarters(self):
        report = check_fekete_szego(koebe_function(ONE, 8), [exact(F(3, 4))])
        assert report.passed
        assert report.worst_margin == 1.0  # |3 - 3| = 0 <= 1

    def test_real_lambda_equalities(self):
        fut = koebe_function(I, 8)
        for lam in (exact(0), exact(2), exact(-1)):
            report = check_fekete_szego(fut, [lam])
            gap = abs(4 * float(lam.w) - 3)
            assert report.passed
            if gap >= 1:
                assert report.params["equalities"]

    def test_quaternionic_lambdas(self):
        report = check_fekete_szego(koebe_function(I, 8), sample_lambdas(3, 40))
        assert report.passed


class TestSharperCaratheodory:
    def test_constant_one(self):
        report = check_sharper_caratheodory(constant_function(ONE, 4))
        assert report.passed and report.worst_margin == 2.0

    def test_extremal_equality(self):
        report = check_sharper_caratheodory(caratheodory_extremal_function(I, 8))
        assert report.passed
        assert abs(report.worst_margin) <= 1e-12
        assert report.params["equalities"]

    def test_members(self):
        report = check_sharper_caratheodory(caratheodory_member(5, 16))
        assert report.passed


class TestCaratheodoryBounds:
    def test_extremal_attains_three_at_half(self):
        report = check_caratheodory_bounds(caratheodory_extremal_function(I, 24),
                                           DEFAULT_GRID)
        assert report.passed
        by_radius = dict((r, m) for r, m in report.params["max_abs_by_radius"])
        assert abs(by_radius[0.5] - 3.0) < 1e-12

    def test_constant(self):
        report = check_caratheodory_bounds(constant_function(ONE, 4), SMALL_GRID)
        assert report.passed and report.worst_margin >= 0.0

    def test_members(self):
        report = check_caratheodory_bounds(caratheodory_member(8, 16), SMALL_GRID)
        assert report.passed


class TestGrowthDistortion:
    def test_koebe_equalities_at_half(self):
        report = check_growth_distortion(koebe_function(ONE, 16), DEFAULT_GRID)
        assert report.passed
        assert abs(report.worst_margin) <= 1e-9

        def attained(x):
            return any(abs(e["q"][0] - x) < 1e-12
                       and max(abs(c) for c in e["q"][1:]) < 1e-12
                       for e in report.params["equalities"])

        assert attained(0.5) and attained(-0.5)

    def test_identity_inside_bands(self):
        report = check_growth_distortion(identity_function(8), SMALL_GRID)
        assert report.passed and report.worst_margin > 0

    def test_members(self):
        report = check_growth_distortion(starlike_member(11, 24), SMALL_GRID)
        assert report.passed


class TestGrowthOrderM:
    def test_convex_reference_distortion(self):
        report = check_growth_order_m(convex_function(16), 1, DEFAULT_GRID, "distortion")
        assert report.passed
        assert abs(report.worst_margin) <= 1e-9  # sharp on the real axis

    def test_odd_reference_growth(self):
        report = check_growth_order_m(odd_reference_function(16), 2, DEFAULT_GRID, "growth")
        assert report.passed
        assert abs(report.worst_margin) <= 1e-9

    def test_identity_all_orders(self):
        for m in (1, 2, 3):
            report = check_growth_order_m(identity_function(8), m, SMALL_GRID, "growth")
            assert report.passed

    def test_gap_violation_rejected(self):
        fut = starlike_member(2, 16)  # generic: a_2 != 0
        with pytest.raises(PreconditionError):
            check_growth_order_m(fut, 2, SMALL_GRID, "growth")


class TestSchwarz:
    def test_monomial_equality(self):
        report = check_schwarz(monomial_function(K, 2, 8), 2, SMALL_GRID)
        assert report.passed
        assert report.params["extremal_form"]

    def test_half_monomial_strict(self):
        report = check_schwarz(monomial_function(exact(F(1, 2)), 2, 8), 2, SMALL_GRID)
        assert report.passed
        assert not report.params["extremal_form"]
        # worst margin is r^2/2 at the smallest radius
        assert abs(report.worst_margin - 0.2 ** 2 / 2) < 1e-12

    def test_rogosinski_extremal_order_one(self):
        fut = rogosinski_function(exact(0, F(1, 2)), ONE, 16)
        report = check_schwarz(fut, 1, SMALL_GRID)
        assert report.passed

    def test_low_order_coefficient_rejected(self):
        with pytest.raises(PreconditionError):
            check_schwarz(identity_function(8), 2, SMALL_GRID)


class TestSchwarzPick:
    def test_mobius_times_unit_equality(self):
        fut = mobius_times_unit_function(exact(0, F(1, 2)), J, 16)
        report = check_schwarz_pick_coefficient(fut, SMALL_GRID)
        assert report.passed
        assert abs(report.worst_margin) <= 1e-9

    def test_constant(self):
        report = check_schwarz_pick_coefficient(constant_function(exact(F(1, 2))),
                                                SMALL_GRID)
        assert report.passed and abs(report.worst_margin - 0.75) < 1e-12

    def test_half_identity(self):
        fut = monomial_function(exact(F(1, 2)), 1, 8)
        report = check_schwarz_pick_coefficient(fut, SMALL_GRID)
        assert report.passed and abs(report.worst_margin - 0.5) < 1e-12

    def test_counterexample_exact(self):
        report = check_schwarz_pick_counterexample()
        assert report.passed
        assert report.params["derivative_modulus_sq"] == "5648/5625"
        assert report.params["classical_bound"] == "68/75"
        assert F(report.params["derivative_modulus_sq"]) == F(50832, 50625)
        assert report.worst_margin > 0  # classical bound strictly violated


class TestRogosinski:
    def test_monomial_b_zero_analogue(self):
        fut = monomial_function(K, 2, 8)
        q0 = Quaternion(0.4, 0.1, 0.0, 0.0)
        report = check_rogosinski(fut, q0, SMALL_GRID)
        assert report.passed
        assert report.params["boundary_attained"]  # |f| = |q0|^2 exactly

    def test_extremal_boundary(self):
        fut = rogosinski_function(exact(0, F(1, 2)), ONE, 24)
        report = check_rogosinski(fut, Quaternion(0.0, 0.0, 0.5, 0.0), SMALL_GRID)
        assert report.passed
        assert report.params["boundary_attained"]

    def test_linear_interior(self):
        b = Quaternion(0.0, 0.3, 0.2, 0.0)
        fut = monomial_function(b, 1, 8)
        report = check_rogosinski(fut, Quaternion(0.5, 0.0, 0.1, 0.0), SMALL_GRID)
        assert report.passed
        assert not report.params["boundary_attained"]
        assert report.worst_margin > 0


class TestBohr:
    def test_identity(self):
        report = check_bohr(identity_function(8), SMALL_GRID)
        assert report.passed
        assert abs(report.worst_margin - 2.0 / 3.0) < 1e-12

    def test_constant(self):
        report = check_bohr(constant_function(exact(F(1, 2))), SMALL_GRID)
        assert report.passed and abs(report.worst_margin - 0.5) < 1e-12

    def test_mobius(self):
        report = check_bohr(mobius_function(exact(0, F(1, 2)), 32), SMALL_GRID)
        assert report.passed
        assert abs(report.worst_margin - 0.2) < 1e-6


class TestMonotoneHayman:
    def test_identity_monotone(self):
        report = check_monotone_modulus(identity_function(8), 0.0, SMALL_GRID)
        assert report.passed

    def test_koebe_monotone(self):
        report = check_monotone_modulus(koebe_function(ONE, 16), 0.0, DEFAULT_GRID)
        assert report.passed

    def test_members_monotone(self):
        report = check_monotone_modulus(starlike_member(17, 16), 0.0, SMALL_GRID)
        assert report.passed

    def test_koebe_phi_constant_one(self):
        report = check_hayman(koebe_function(ONE, 16), DEFAULT_GRID)
        assert report.passed
        assert report.params["constant"]
        assert all(abs(phi - 1.0) < 1e-9 for _, phi in
                   zip(DEFAULT_GRID.radii, report.params["phi"]))

    def test_identity_phi_decreasing(self):
        report = check_hayman(identity_function(8), DEFAULT_GRID)
        assert report.passed
        phis = report.params["phi"]
        assert all(abs(phi - (1 - r) ** 2) < 1e-12
                   for r, phi in zip(DEFAULT_GRID.radii, phis))
        assert not report.params["constant"]

    def test_members(self):
        report = check_hayman(starlike_member(23, 16), DEFAULT_GRID)
        assert report.passed


class TestKoebeQuarter:
    def test_reference_with_slit(self):
        report = check_koebe_quarter(koebe_function(ONE, 16), DEFAULT_GRID,
                                     check_omitted_slit=True)
        assert report.passed
        assert abs(report.params["min_modulus"] - 0.99 / 1.99 ** 2) < 1e-9
        assert report.params["omitted_point_min_residual"] >= 5e-4

    def test_identity(self):
        report = check_koebe_quarter(identity_function(8), DEFAULT_GRID)
        assert report.passed
        assert abs(report.params["min_modulus"] - 0.99) < 1e-12

    def test_members(self):
        report = check_koebe_quarter(starlike_member(29, 16), DEFAULT_GRID)
        assert report.passed


class TestConvexCovering:
    def test_examples(self):
        report = check_convex_covering_examples(DEFAULT_GRID)
        assert report.passed
        margins = report.params["half_plane_margins"]
        assert all(m > 0 for _, m in margins)
        # margins shrink towards the boundary along the negative real axis
        values = [m for _, m in margins]
        assert values == sorted(values, reverse=True)
        expected = (1 - 0.99) / (2 * (1 + 0.99))
        assert abs(values[-1] - expected) < 1e-12


class TestSubordination:
    def test_square_inner(self):
        w = SliceSeries.from_coeffs([ONE], valuation=2).pad_to(16)
        report = check_subordination_growth(koebe_function(ONE, 16), w, SMALL_GRID)
        assert report.passed and report.worst_margin > 0

    def test_half_inner(self):
        w = SliceSeries.from_coeffs([exact(F(1, 2))], valuation=1).pad_to(16)
        report = check_subordination_growth(koebe_function(ONE, 16), w, SMALL_GRID)
        assert report.passed

    def test_identity_inner_member(self):
        w = SliceSeries.identity(16)
        report = check_subordination_growth(close_to_convex_member(2, 16), w, SMALL_GRID)
        assert report.passed

    def test_non_slice_preserving_rejected(self):
        w = SliceSeries.from_coeffs([I], valuation=1)
        with pytest.raises(PreconditionError):
            check_subordination_growth(koebe_function(ONE, 8), w, SMALL_GRID)


class TestQuotientEquivalences:
    def test_trivial_pair(self):
        f = SliceSeries.one(8)
        g = SliceSeries.from_coeffs([ONE, exact(F(1, 2))])
        report = check_quotient_equivalences(f, g, SMALL_GRID)
        assert report.passed
        assert report.params["min_re_pointwise"] > 0
        assert report.params["min_re_star"] > 0

    def test_extremal_pair(self):
        f = SliceSeries.from_coeffs([ONE, -I])
        g = SliceSeries.from_coeffs([ONE, I])
        report = check_quotient_equivalences(f, g, DEFAULT_GRID)
        assert report.passed

    def test_random_pairs(self):
        for seed in range(6):
            f, g = quotient_pair(seed)
            report = check_quotient_equivalences(f, g, SMALL_GRID)
            assert report.passed, (seed, report.params)

    def test_inconclusive_when_guard_dominates(self):
        f, g = quotient_pair(0)
        report = check_quotient_equivalences(f, g, SMALL_GRID,
                                             domain=EvalDomain(1e6))
        assert report.status == "inconclusive"
        assert not report.passed
        assert report.witnesses


class TestSuitesAndReports:
    def test_all_suites_pass_small(self):
        cfg = SuiteConfig(degree=16, seed=3, random_count=1, grid=SMALL_GRID)
        reports = run_suites(list(SUITES), cfg)
        assert reports and all(r.passed for r in reports)

    def test_jobs_preserve_order_and_results(self):
        cfg = SuiteConfig(degree=12, seed=5, random_count=1, grid=SMALL_GRID)
        sequential = run_suites(["growth", "bohr"], cfg)
        pooled = run_suites(["growth", "bohr"], cfg, jobs=4)
        assert [r.to_json_dict() for r in sequential] == \
            [r.to_json_dict() for r in pooled]

    def test_report_json_contract(self):
        report = check_bieberbach(koebe_function(ONE, 8))
        data = report.to_json_dict()
        for key in ("check", "function", "passed", "worst_margin", "samples",
                    "valid_degree", "witnesses"):
            assert key in data
        json.dumps(data)  # serializable

    def test_failed_reports_carry_witnesses(self):
        fut = koebe_function(ONE, 8)
        bad = SliceSeries.from_coeffs([ONE, exact(5)], valuation=1).pad_to(8)
        # coefficient 5 breaks the bound; screen bypassed via certificates
        from srgft.classes import FunctionUnderTest
        cheat = FunctionUnderTest("bad", bad, certificates=("starlike",))
        report = check_bieberbach(cheat)
        assert not report.passed and report.witnesses
        assert report.status == "fail"
