"""Registry of named theorem checks.

Each check consumes a function (built-in extremal or generated member),
a sampling grid and a tolerance, and produces a :class:`CheckReport`
stating whether the corresponding inequality or identity held, with the
worst margin and witnesses for any violation.  Checks are pure: same
inputs, same report.

Equality cases are detected inside a relative band of 1e-9 and reported
in the parameter block; only the forward direction (the extremal attains
equality) is asserted, never the uniqueness converse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Callable, Optional

from .classes import (DEFAULT_GRID, FunctionLike, FunctionUnderTest,
                      SamplingGrid, as_function, bloch_eval, bloch_series,
                      caratheodory_extremal, caratheodory_extremal_quotient,
                      caratheodory_mixture_evaluator, caratheodory_mixture_parts,
                      convex_reference, convex_reference_quotient,
                      generate_caratheodory,
                      generate_starlike_small_coeff, is_caratheodory,
                      is_slice_preserving, is_starlike,
                      koebe, koebe_quotient, odd_reference,
                      odd_reference_quotient, random_float_unit,
                      rogosinski_extremal, rogosinski_extremal_quotient)
from .errors import DomainError, PreconditionError
from .quat import (ONE, I, J, K, Quaternion, format_quaternion,
                   quaternion_to_json)
from .series import (DEFAULT_DEGREE, DEFAULT_DOMAIN, EvalDomain, SliceSeries,
                     StarQuotient, full_star_mul, integrate_radial, mobius,
                     mobius_quotient, regular_conjugate,
                     slice_derivative, star_mul, symmetrize)

EQUALITY_BAND = 1e-9
POINT_TOL = 1e-9
COEFF_TOL = 1e-12


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one theorem check."""

    check_id: str
    function_id: str
    passed: bool
    worst_margin: float
    samples: int
    witnesses: tuple[dict, ...]
    valid_degree: int
    status: str = "pass"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError("failed reports must carry at least one witness")

    def to_json_dict(self) -> dict:
        return {
            "check": self.check_id,
            "function": self.function_id,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "samples": self.samples,
            "valid_degree": self.valid_degree,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "params": self.params,
        }


class _Collector:
    """Accumulates slack assertions; slack >= -tol passes."""

    def __init__(self, tol: float):
        self.tol = tol
        self.worst = math.inf
        self.samples = 0
        self.violations: list[dict] = []
        self.equalities: list[dict] = []

    def check(self, slack: float, witness: dict, equality_scale: float = 1.0):
        self.samples += 1
        if slack < self.worst:
            self.worst = slack
        if slack < -self.tol and len(self.violations) < 16:
            entry = dict(witness)
            entry["margin"] = slack
            self.violations.append(entry)
        if abs(slack) <= EQUALITY_BAND * max(equality_scale, 1.0) and len(self.equalities) < 64:
            entry = dict(witness)
            entry["margin"] = slack
            self.equalities.append(entry)

    def report(self, check_id: str, fut_id: str, valid_degree: int,
               params: Optional[dict] = None) -> CheckReport:
        passed = not self.violations and self.worst >= -self.tol
        all_params = dict(params or {})
        if self.equalities:
            all_params["equalities"] = self.equalities
        return CheckReport(
            check_id=check_id,
            function_id=fut_id,
            passed=passed,
            worst_margin=self.worst if self.samples else 0.0,
            samples=self.samples,
            witnesses=tuple(self.violations),
            valid_degree=valid_degree,
            status="pass" if passed else "fail",
            params=all_params,
        )


def _point_entry(q: Quaternion, lhs: float, rhs: float) -> dict:
    return {"q": quaternion_to_json(q.to_float()), "lhs": lhs, "rhs": rhs}


def _coeff_entry(n: int, lhs: float, rhs: float) -> dict:
    return {"n": n, "lhs": lhs, "rhs": rhs}


def _require_class(fut: FunctionUnderTest, class_name: str,
                   grid: SamplingGrid, predicate) -> None:
    if fut.certifies(class_name):
        return
    verdict = predicate(fut, grid)
    if not verdict.member:
        raise PreconditionError(
            f"{fut.fid} failed the {class_name} screen: {verdict.witness}")


# ---------------------------------------------------------------------------
# coefficient checks
# ---------------------------------------------------------------------------


def check_bieberbach(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                     tol: float = COEFF_TOL) -> CheckReport:
    """|a_n| <= n for every stored n >= 2, equality flagged."""
    fut = as_function(f)
    if not (fut.certifies("close-to-convex") or fut.certifies("starlike")):
        _require_class(fut, "starlike", grid, is_starlike)
    col = _Collector(tol)
    for n, a in fut.series.terms():
        if n < 2:
            continue
        col.check(n - abs(a), _coeff_entry(n, abs(a), float(n)), equality_scale=n)
    return col.report("bieberbach", fut.fid, fut.series.degree)


def check_convex_coefficients(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                              tol: float = COEFF_TOL) -> CheckReport:
    """|a_n| <= 1 for all n when q f'(q) is starlike."""
    fut = as_function(f)
    if not fut.certifies("derivative-starlike"):
        qfp = slice_derivative(fut.series).shift(1)
        verdict = is_starlike(qfp, grid)
        if not verdict.member:
            raise PreconditionError(f"q f' of {fut.fid} failed the starlike screen")
    col = _Collector(tol)
    for n, a in fut.series.terms():
        if n < 2:
            continue
        col.check(1.0 - abs(a), _coeff_entry(n, abs(a), 1.0))
    return col.report("convex-coefficients", fut.fid, fut.series.degree)


def check_fekete_szego(f: FunctionLike, lambdas: list[Quaternion],
                       grid: SamplingGrid = DEFAULT_GRID,
                       tol: float = COEFF_TOL) -> CheckReport:
    """|a_3 - lambda a_2^2| <= max(1, |4 lambda - 3|) for each lambda.

    The scalar multiplies from the left, matching the left-series
    convention.  For real lambda with |4 lambda - 3| >= 1 the extremal
    family attains equality, recorded in the equality block.
    """
    fut = as_function(f)
    _require_class(fut, "starlike", grid, is_starlike)
    a2, a3 = fut.series.coeff(2), fut.series.coeff(3)
    col = _Collector(tol)
    for lam in lambdas:
        lhs = abs(a3 - lam * (a2 * a2))
        four_lam = lam * 4 - Quaternion.from_real(3 if lam.is_exact else 3.0)
        rhs = max(1.0, abs(four_lam))
        col.check(rhs - lhs, {"lambda": quaternion_to_json(lam), "lhs": lhs, "rhs": rhs},
                  equality_scale=rhs)
    return col.report("fekete-szego", fut.fid, fut.series.degree,
                      params={"lambda_count": len(lambdas)})


def check_sharper_caratheodory(p: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                               tol: float = COEFF_TOL) -> CheckReport:
    """|a_2 - a_1^2 / 2| <= 2 - |a_1|^2 / 2 for Caratheodory-class p."""
    fut = as_function(p)
    _require_class(fut, "caratheodory", grid, is_caratheodory)
    a1, a2 = fut.series.coeff(1), fut.series.coeff(2)
    half = Fraction(1, 2) if a1.is_exact else 0.5
    lhs = abs(a2 - (a1 * a1) * half)
    rhs = 2.0 - float(a1.norm_sq()) / 2.0
    col = _Collector(tol)
    col.check(rhs - lhs, _coeff_entry(2, lhs, rhs), equality_scale=2.0)
    return col.report("sharper-caratheodory", fut.fid, fut.series.degree)


# ---------------------------------------------------------------------------
# pointwise growth family
# ---------------------------------------------------------------------------


def check_caratheodory_bounds(p: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                              tol: float = POINT_TOL) -> CheckReport:
    """(1-r)/(1+r) <= Re p <= |p| <= (1+r)/(1-r) on the grid; |p_n| <= 2."""
    fut = as_function(p)
    _require_class(fut, "caratheodory", grid, is_caratheodory)
    col = _Collector(tol)
    max_by_radius: list[list[float]] = []
    for r in grid.radii:
        lower = (1.0 - r) / (1.0 + r)
        upper = (1.0 + r) / (1.0 - r)
        max_abs = 0.0
        for q in grid.points_at(r):
            value = fut.value(q)
            re, mod = float(value.w), abs(value)
            max_abs = max(max_abs, mod)
            col.check(re - lower, _point_entry(q, lower, re), equality_scale=upper)
            col.check(mod - re, _point_entry(q, re, mod), equality_scale=upper)
            col.check(upper - mod, _point_entry(q, mod, upper), equality_scale=upper)
        max_by_radius.append([r, max_abs])
    for n, a in fut.series.terms():
        if n < 1:
            continue
        col.check(2.0 - abs(a), _coeff_entry(n, abs(a), 2.0), equality_scale=2.0)
    return col.report("caratheodory-bounds", fut.fid, fut.series.degree,
                      params={"max_abs_by_radius": max_by_radius})


def check_growth_distortion(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                            tol: float = POINT_TOL) -> CheckReport:
    """All six bands: |f|, |f'| and the ratio |q f'| / |f|."""
    fut = as_function(f)
    _require_class(fut, "starlike", grid, is_starlike)
    col = _Collector(tol)
    for r in grid.radii:
        f_lo, f_hi = r / (1 + r) ** 2, r / (1 - r) ** 2
        d_lo, d_hi = (1 - r) / (1 + r) ** 3, (1 + r) / (1 - r) ** 3
        q_lo, q_hi = (1 - r) / (1 + r), (1 + r) / (1 - r)
        for q in grid.points_at(r):
            fv, dv = abs(fut.value(q)), abs(fut.derivative_value(q))
            ratio = r * dv / fv
            col.check(fv - f_lo, _point_entry(q, f_lo, fv), equality_scale=f_hi)
            col.check(f_hi - fv, _point_entry(q, fv, f_hi), equality_scale=f_hi)
            col.check(dv - d_lo, _point_entry(q, d_lo, dv), equality_scale=d_hi)
            col.check(d_hi - dv, _point_entry(q, dv, d_hi), equality_scale=d_hi)
            col.check(ratio - q_lo, _point_entry(q, q_lo, ratio), equality_scale=q_hi)
            col.check(q_hi - ratio, _point_entry(q, ratio, q_hi), equality_scale=q_hi)
    return col.report("growth-distortion", fut.fid, fut.series.degree)


def check_growth_order_m(f: FunctionLike, m: int,
                         grid: SamplingGrid = DEFAULT_GRID,
                         variant: str = "growth",
                         tol: float = POINT_TOL) -> CheckReport:
    """Order-m bands for gap series f = q + Sigma_{n > m} q^n a_n.

    variant "growth" asserts r/(1+r^m)^(2/m) <= |f| <= r/(1-r^m)^(2/m)
    and needs f starlike; variant "distortion" asserts the same bands
    without the leading r for |f'| and needs q f' starlike.
    """
    fut = as_function(f)
    for n in range(2, min(m, fut.series.degree) + 1):
        if not fut.series.coeff(n).is_zero():
            raise PreconditionError(f"gap form violated: a_{n} != 0")
    if variant == "growth":
        _require_class(fut, "starlike", grid, is_starlike)
    elif variant == "distortion":
        if not fut.certifies("derivative-starlike"):
            verdict = is_starlike(slice_derivative(fut.series).shift(1), grid)
            if not verdict.member:
                raise PreconditionError("q f' failed the starlike screen")
    else:
        raise DomainError(f"unknown variant {variant!r}")
    col = _Collector(tol)
    for r in grid.radii:
        denom_lo = (1 + r ** m) ** (2.0 / m)
        denom_hi = (1 - r ** m) ** (2.0 / m)
        if variant == "growth":
            lo, hi = r / denom_lo, r / denom_hi
        else:
            lo, hi = 1.0 / denom_lo, 1.0 / denom_hi
        for q in grid.points_at(r):
            value = abs(fut.value(q)) if variant == "growth" else abs(fut.derivative_value(q))
            col.check(value - lo, _point_entry(q, lo, value), equality_scale=hi)
            col.check(hi - value, _point_entry(q, value, hi), equality_scale=hi)
    return col.report(f"growth-order-{m}-{variant}", fut.fid, fut.series.degree)


# ---------------------------------------------------------------------------
# Schwarz family
# ---------------------------------------------------------------------------


def _screen_self_map(fut: FunctionUnderTest, grid: SamplingGrid,
                     strict: bool = True, slack: float = 0.0) -> float:
    worst = 0.0
    for q in grid.points:
        mod = abs(fut.value(q))
        worst = max(worst, mod)
    if strict and worst >= 1.0 + slack:
        raise PreconditionError(f"{fut.fid} is not a self-map on the grid: max |f| = {worst}")
    return worst


def check_schwarz(f: FunctionLike, m: int, grid: SamplingGrid = DEFAULT_GRID,
                  tol: float = POINT_TOL) -> CheckReport:
    """|f(q)| <= |q|^m and |f^(m)(0)| <= m! for self-maps vanishing to order m."""
    fut = as_function(f)
    for n in range(0, m):
        if fut.series.valuation <= n <= fut.series.degree and not fut.series.coeff(n).is_zero():
            raise PreconditionError(f"coefficient a_{n} must vanish")
    _screen_self_map(fut, grid)
    col = _Collector(tol)
    for r in grid.radii:
        bound = r ** m
        for q in grid.points_at(r):
            mod = abs(fut.value(q))
            col.check(bound - mod, _point_entry(q, mod, bound), equality_scale=1.0)
    a_m = abs(fut.series.coeff(m)) if fut.series.degree >= m else 0.0
    col.check(1.0 - a_m, _coeff_entry(m, a_m, 1.0))
    params = {"order": m, "extremal_form": col.worst >= -tol and abs(col.worst) <= EQUALITY_BAND}
    return col.report("schwarz", fut.fid, fut.series.degree, params=params)


def check_schwarz_pick_coefficient(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                                   tol: float = POINT_TOL) -> CheckReport:
    """|f'(0)| <= 1 - |f(0)|^2 for self-maps of the ball."""
    fut = as_function(f)
    _screen_self_map(fut, grid, slack=tol)
    s = fut.series
    a0 = s.coeff(0) if s.valuation <= 0 else Quaternion(0, 0, 0, 0)
    a1 = s.coeff(1) if s.valuation <= 1 <= s.degree else Quaternion(0, 0, 0, 0)
    lhs = abs(a1)
    rhs = 1.0 - float(a0.norm_sq())
    col = _Collector(tol)
    col.check(rhs - lhs, _coeff_entry(1, lhs, rhs))
    return col.report("schwarz-pick-coefficient", fut.fid, s.degree)


def check_schwarz_pick_counterexample() -> CheckReport:
    """Exact-arithmetic failure of the classical two-point Schwarz-Pick bound.

    The regular Moebius transform with parameter i/2, evaluated at j/2,
    has |f'|^2 = 50832/50625, strictly above the square of the classical
    bound (1 - |f(q0)|^2) / (1 - |q0|^2) = 68/75.
    """
    a = Quaternion(0, Fraction(1, 2), 0, 0)
    q0 = Quaternion(0, 0, Fraction(1, 2), 0)
    phi = mobius_quotient(a)
    value = phi.eval(q0)
    derivative = phi.derivative().eval(q0)
    expected_value = Quaternion(0, Fraction(2, 5), Fraction(-2, 5), 0)
    expected_derivative = Quaternion(Fraction(-204, 225), 0, 0, Fraction(-96, 225))
    derivative_sq = derivative.norm_sq()
    bound = (1 - value.norm_sq()) / (1 - q0.norm_sq())
    identities = [
        ("value", value == expected_value),
        ("derivative", derivative == expected_derivative),
        ("derivative_modulus_sq", derivative_sq == Fraction(50832, 50625)),
        ("classical_bound", bound == Fraction(68, 75)),
        ("bound_violated", derivative_sq > bound * bound),
    ]
    failures = tuple({"identity": name, "lhs": 0.0, "rhs": 0.0}
                     for name, ok in identities if not ok)
    passed = not failures
    return CheckReport(
        check_id="schwarz-pick-counterexample",
        function_id="mobius(1/2i)",
        passed=passed,
        worst_margin=float(derivative_sq - bound * bound),
        samples=len(identities),
        witnesses=failures,
        valid_degree=0,
        status="pass" if passed else "fail",
        params={
            "value": quaternion_to_json(value),
            "derivative": quaternion_to_json(derivative),
            "derivative_modulus_sq": str(derivative_sq),
            "classical_bound": str(bound),
        },
    )


def check_rogosinski(f: FunctionLike, q0: Quaternion,
                     grid: SamplingGrid = DEFAULT_GRID,
                     tol: float = POINT_TOL) -> CheckReport:
    """f(q0) lies in the closed value ball B(c, rho) fixed by b = f'(0):

        c = q0 b (1-|q0|^2) / (1-|q0 b|^2),  rho = |q0|^2 (1-|b|^2) / (1-|q0 b|^2).
    """
    fut = as_function(f)
    if fut.series.valuation < 1:
        raise PreconditionError("function must vanish at 0")
    if float(q0.norm_sq()) >= 1.0:
        raise PreconditionError("evaluation point must lie inside the ball")
    _screen_self_map(fut, grid, slack=POINT_TOL)
    b = fut.series.coeff(1).to_float()
    q0f = q0.to_float()
    q0b_sq = float((q0f * b).norm_sq())
    scale = (1.0 - float(q0f.norm_sq())) / (1.0 - q0b_sq)
    center = (q0f * b) * scale
    radius = float(q0f.norm_sq()) * (1.0 - float(b.norm_sq())) / (1.0 - q0b_sq)
    value = fut.value(q0f)
    distance = abs(value - center)
    col = _Collector(tol)
    col.check(radius - distance,
              _point_entry(q0f, distance, radius), equality_scale=1.0)
    boundary = abs(radius - distance) <= 1e-6
    return col.report("rogosinski", fut.fid, fut.series.degree,
                      params={"center": quaternion_to_json(center),
                              "radius": radius,
                              "boundary_attained": boundary})


def check_bohr(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
               tol: float = POINT_TOL) -> CheckReport:
    """Sigma |a_n| / 3^n <= 1 for self-maps (or Re f <= 1 screens)."""
    fut = as_function(f)
    max_mod, max_re = 0.0, -math.inf
    for q in grid.points:
        value = fut.value(q)
        max_mod = max(max_mod, abs(value))
        max_re = max(max_re, float(value.w))
    if max_mod >= 1.0 + tol and max_re > 1.0 + tol:
        raise PreconditionError("needs |f| < 1 or Re f <= 1 on the grid")
    total = 0.0
    for n, a in fut.series.terms():
        if n >= 0:
            total += abs(a) / 3.0 ** n
    col = _Collector(tol)
    col.check(1.0 - total, {"n": "sum", "lhs": total, "rhs": 1.0})
    screen = "modulus" if max_mod < 1.0 + tol else "real-part"
    return col.report("bohr", fut.fid, fut.series.degree,
                      params={"radius": "1/3", "screen": screen})


# ---------------------------------------------------------------------------
# radial monotonicity family
# ---------------------------------------------------------------------------


def check_monotone_modulus(f: FunctionLike, alpha: float = 0.0,
                           grid: SamplingGrid = DEFAULT_GRID,
                           tol: float = 1e-12) -> CheckReport:
    """M(r) = |f(r u)| / r^alpha strictly increases along every direction."""
    fut = as_function(f)
    _require_class(fut, "starlike", grid,
                   lambda g, gr: is_starlike(g, gr, alpha))
    col = _Collector(tol)
    for u in grid.directions:
        previous = None
        for r in grid.radii:
            m_r = abs(fut.value(u * r)) / r ** alpha
            if previous is not None:
                col.check(m_r - previous, _point_entry(u * r, previous, m_r),
                          equality_scale=max(m_r, 1.0))
            previous = m_r
    return col.report("monotone-modulus", fut.fid, fut.series.degree,
                      params={"alpha": alpha})


def check_hayman(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                 tol: float = 1e-6) -> CheckReport:
    """phi(r) = (1-r)^2 M(r) / r is non-increasing and ends in [0, 1].

    M(r) maximizes |f| over the shared grid directions, so the chain of
    maxima is monotone exactly; the tolerance only absorbs float noise.
    """
    fut = as_function(f)
    _require_class(fut, "starlike", grid, is_starlike)
    col = _Collector(tol)
    phis = []
    for r in grid.radii:
        m_inf = max(abs(fut.value(u * r)) for u in grid.directions)
        phis.append((1.0 - r) ** 2 * m_inf / r)
    for i in range(1, len(phis)):
        col.check(phis[i - 1] - phis[i],
                  {"n": i, "lhs": phis[i], "rhs": phis[i - 1]})
    col.check(phis[-1], {"n": "limit>=0", "lhs": 0.0, "rhs": phis[-1]})
    col.check(1.0 + tol - phis[-1], {"n": "limit<=1", "lhs": phis[-1], "rhs": 1.0})
    constant = max(phis) - min(phis) <= tol
    return col.report("hayman", fut.fid, fut.series.degree,
                      params={"phi": phis, "constant": constant,
                              "limit_estimate": phis[-1]})


# ---------------------------------------------------------------------------
# covering family
# ---------------------------------------------------------------------------


def check_koebe_quarter(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                        tol: float = 1e-6,
                        check_omitted_slit: bool = False) -> CheckReport:
    """Lower-bound proxy for the quarter-ball covering.

    Asserts min |f(r u)| >= r/(1+r)^2 at the largest radius (the proof
    mechanism).  For the reference function q (1-q)^(-star 2), which
    omits exactly the slice ray (-inf, -1/4], additionally asserts that
    the sampled image keeps its distance from the omitted point -1/4 - d.
    """
    fut = as_function(f)
    _require_class(fut, "starlike", grid, is_starlike)
    col = _Collector(tol)
    r_max = grid.radii[-1]
    bound = r_max / (1.0 + r_max) ** 2
    min_mod = math.inf
    argmin = None
    for u in grid.directions:
        mod = abs(fut.value(u * r_max))
        if mod < min_mod:
            min_mod, argmin = mod, u * r_max
    col.check(min_mod - bound, _point_entry(argmin, bound, min_mod), equality_scale=1.0)
    params: dict = {"largest_radius": r_max, "min_modulus": min_mod,
                    "proxy_bound": bound}
    if check_omitted_slit:
        delta = 1e-3
        target = Quaternion(-0.25 - delta, 0.0, 0.0, 0.0)
        floors = []
        for r in grid.radii:
            floor = 0.25 - r / (1.0 + r) ** 2
            closest = math.inf
            for q in grid.points_at(r):
                closest = min(closest, abs(fut.value(q) + Quaternion(0.25, 0.0, 0.0, 0.0)))
            col.check(closest - floor + tol,
                      _point_entry(Quaternion(-r, 0.0, 0.0, 0.0), floor, closest))
            floors.append([r, floor, closest])
        omitted_min = min(abs(fut.value(q) - target) for q in grid.points)
        col.check(omitted_min - delta / 2,
                  {"n": "omitted-point", "lhs": delta / 2, "rhs": omitted_min})
        params["quarter_point_floors"] = floors
        params["omitted_point_min_residual"] = omitted_min
    return col.report("koebe-quarter", fut.fid, fut.series.degree, params=params)


def check_convex_covering_examples(grid: SamplingGrid = DEFAULT_GRID,
                                   tol: float = POINT_TOL,
                                   degree: int = DEFAULT_DEGREE) -> CheckReport:
    """Half-plane and strip images certifying the 1/2 covering bound.

    q (1-q)^(-star) keeps Re f > -1/2 with margin shrinking to 0 along
    the negative real axis; the odd logarithmic series keeps |Im f|
    strictly below pi/4.
    """
    col = _Collector(tol)
    convex_q = convex_reference_quotient()
    series = convex_reference(degree)
    if series.coeff(1) != ONE:
        raise DomainError("reference normalization broke")
    for q in grid.points:
        re = float(convex_q.eval(q).w)
        col.check(re + 0.5, _point_entry(q, -0.5, re), equality_scale=1.0)
    witness_sequence = []
    previous = None
    for r in grid.radii:
        margin = float(convex_q.eval(Quaternion(-r, 0.0, 0.0, 0.0)).w) + 0.5
        col.check(margin, {"n": f"r={r}", "lhs": -0.5, "rhs": margin - 0.5})
        if previous is not None:
            col.check(previous - margin, {"n": f"shrinks@r={r}", "lhs": margin, "rhs": previous})
        witness_sequence.append([r, margin])
        previous = margin
    bloch = bloch_series(degree)
    if bloch.coeff(1) != ONE:
        raise DomainError("strip-example normalization broke")
    quarter_pi = math.pi / 4.0
    for q in grid.points:
        im = abs(bloch_eval(q).imag())
        col.check(quarter_pi - im, _point_entry(q, im, quarter_pi), equality_scale=1.0)
    return col.report("convex-covering", "convex-reference+strip-reference", degree,
                      params={"half_plane_margins": witness_sequence})


def check_subordination_growth(f: FunctionLike, w: SliceSeries,
                               grid: SamplingGrid = DEFAULT_GRID,
                               tol: float = POINT_TOL) -> CheckReport:
    """Composition g = f(w(q)) obeys the upper growth and distortion bands."""
    from .series import compose_slice_preserving

    fut = as_function(f)
    if not (fut.certifies("close-to-convex") or fut.certifies("starlike")):
        raise PreconditionError("outer function must be certified close-to-convex")
    if not is_slice_preserving(w).member:
        raise PreconditionError("inner function must be slice preserving")
    if not w.is_zero() and w.valuation < 1:
        raise PreconditionError("inner function must vanish at 0")
    wf = w.to_float()
    for q in grid.points:
        if abs(wf.eval(q)) >= 1.0:
            raise PreconditionError("inner function must map the grid into the ball")
    g = compose_slice_preserving(fut.series, w).to_float()
    gp = slice_derivative(g)
    col = _Collector(tol)
    for r in grid.radii:
        g_hi = r / (1.0 - r) ** 2
        d_hi = (1.0 + r) / (1.0 - r) ** 3
        for q in grid.points_at(r):
            gv, dv = abs(g.eval(q)), abs(gp.eval(q))
            col.check(g_hi - gv, _point_entry(q, gv, g_hi), equality_scale=g_hi)
            col.check(d_hi - dv, _point_entry(q, dv, d_hi), equality_scale=d_hi)
    return col.report("subordination-growth", fut.fid, g.degree)


def check_quotient_equivalences(f: SliceSeries, g: SliceSeries,
                                grid: SamplingGrid = DEFAULT_GRID,
                                domain: EvalDomain = DEFAULT_DOMAIN,
                                tol: float = POINT_TOL) -> CheckReport:
    """Verdict agreement between pointwise and star-quotient formulations.

    Checks that min Re(f^-1 g) > 0 iff min Re(f^(-star) star g) > 0, and
    max |g|/|f| < 1 iff max |f^(-star) star g| < 1, over the sampled
    grid.  Points inside the singular guard are skipped and counted;
    above 10 percent skipped the report is inconclusive.
    """
    quotient = StarQuotient(g, f)
    fs = symmetrize(f.pad_to(2 * f.degree - f.valuation)).to_float()
    ff, gf = f.to_float(), g.to_float()
    min_re_point = math.inf
    min_re_star = math.inf
    max_ratio = 0.0
    max_star = 0.0
    skipped: list[dict] = []
    evaluated = 0
    for q in grid.points:
        if abs(fs.eval(q)) < domain.singular_threshold:
            if len(skipped) < 16:
                skipped.append(_point_entry(q, abs(fs.eval(q)), domain.singular_threshold))
            continue
        evaluated += 1
        fv, gv = ff.eval(q), gf.eval(q)
        star = quotient.eval(q)
        min_re_point = min(min_re_point, float((fv.inverse() * gv).w))
        min_re_star = min(min_re_star, float(star.w))
        max_ratio = max(max_ratio, abs(gv) / abs(fv))
        max_star = max(max_star, abs(star))
    total = len(grid.points)
    skipped_count = total - evaluated
    params = {
        "min_re_pointwise": min_re_point,
        "min_re_star": min_re_star,
        "max_ratio_pointwise": max_ratio,
        "max_star_modulus": max_star,
        "skipped": skipped_count,
    }
    if skipped_count > 0.1 * total:
        return CheckReport("quotient-equivalences", "pair", False, 0.0,
                           evaluated, tuple(skipped) or ({"n": "all-skipped", "lhs": 0.0, "rhs": 0.0},),
                           min(f.degree, g.degree), status="inconclusive", params=params)
    re_agree = (min_re_point > 0.0) == (min_re_star > 0.0)
    mod_agree = (max_ratio < 1.0) == (max_star < 1.0)
    margin = min(abs(min_re_point), abs(min_re_star),
                 abs(1.0 - max_ratio), abs(1.0 - max_star))
    passed = re_agree and mod_agree
    witnesses = ()
    if not passed:
        witnesses = ({"n": "verdicts", "lhs": min_re_point, "rhs": min_re_star},)
    return CheckReport("quotient-equivalences", "pair", passed,
                       margin if passed else -margin, evaluated, witnesses,
                       min(f.degree, g.degree),
                       status="pass" if passed else "fail", params=params)


# ---------------------------------------------------------------------------
# built-in functions under test
# ---------------------------------------------------------------------------


def koebe_function(u: Quaternion, degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = koebe_quotient(u)
    dquot = quot.derivative()
    return FunctionUnderTest(
        f"koebe({format_quaternion(u)})", koebe(u, degree),
        value_fn=quot.eval, derivative_fn=dquot.eval,
        certificates=("starlike", "close-to-convex"))


def caratheodory_extremal_function(u: Quaternion,
                                   degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = caratheodory_extremal_quotient(u)
    dquot = quot.derivative()
    return FunctionUnderTest(
        f"caratheodory-extremal({format_quaternion(u)})",
        caratheodory_extremal(u, degree),
        value_fn=quot.eval, derivative_fn=dquot.eval,
        certificates=("caratheodory",))


def convex_function(degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = convex_reference_quotient()
    dquot = quot.derivative()
    return FunctionUnderTest(
        "convex-reference", convex_reference(degree),
        value_fn=quot.eval, derivative_fn=dquot.eval,
        certificates=("starlike", "close-to-convex", "derivative-starlike",
                      "slice-preserving"))


def odd_reference_function(degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = odd_reference_quotient()
    dquot = quot.derivative()
    return FunctionUnderTest(
        "odd-reference", odd_reference(degree),
        value_fn=quot.eval, derivative_fn=dquot.eval,
        certificates=("starlike", "slice-preserving"))


def bloch_function(degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    one = SliceSeries.one()
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    dquot = StarQuotient(one, SliceSeries.from_coeffs([ONE, zero, -ONE]))
    return FunctionUnderTest(
        "strip-reference", bloch_series(degree),
        value_fn=bloch_eval, derivative_fn=dquot.eval,
        certificates=("slice-preserving",))


def mobius_function(a: Quaternion, degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = mobius_quotient(a)
    dquot = quot.derivative()
    return FunctionUnderTest(
        f"mobius({format_quaternion(a)})", mobius(a, degree),
        value_fn=quot.eval, derivative_fn=dquot.eval)


def mobius_times_unit_function(a: Quaternion, u: Quaternion,
                               degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot = mobius_quotient(a)
    dquot = quot.derivative()
    return FunctionUnderTest(
        f"mobius({format_quaternion(a)})*{format_quaternion(u)}",
        mobius(a, degree).times(u),
        value_fn=lambda q: quot.eval(q) * u,
        derivative_fn=lambda q: dquot.eval(q) * u)


def identity_function(degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    return FunctionUnderTest(
        "identity", SliceSeries.identity(degree),
        certificates=("starlike", "close-to-convex", "derivative-starlike",
                      "slice-preserving"))


def monomial_function(c: Quaternion, n: int,
                      degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    series = SliceSeries.from_coeffs([c] + [zero] * max(degree - n, 0), valuation=n)
    return FunctionUnderTest(f"{format_quaternion(c)}q^{n}", series)


def constant_function(c: Quaternion, degree: int = 0) -> FunctionUnderTest:
    return FunctionUnderTest(f"const({format_quaternion(c)})",
                             SliceSeries.constant(c, degree))


def rogosinski_function(b: Quaternion, p: Quaternion,
                        degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    quot, _ = rogosinski_extremal_quotient(b, p)
    dquot_core = quot.derivative()

    def value(q: Quaternion) -> Quaternion:
        return q * quot.eval(q)

    def derivative(q: Quaternion) -> Quaternion:
        # product rule on q * core(q); q is central
        return quot.eval(q) + q * dquot_core.eval(q)

    return FunctionUnderTest(
        f"rogosinski(b={format_quaternion(b)},p={format_quaternion(p)})",
        rogosinski_extremal(b, p, degree),
        value_fn=value, derivative_fn=derivative)


# ---------------------------------------------------------------------------
# generated members
# ---------------------------------------------------------------------------


def starlike_member(seed: int, degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    series = generate_starlike_small_coeff(seed, degree)
    return FunctionUnderTest(f"starlike-member(seed={seed})", series,
                             certificates=("starlike", "close-to-convex"))


def caratheodory_member(seed: int, degree: int = DEFAULT_DEGREE,
                        k: int = 3) -> FunctionUnderTest:
    lambdas, units = caratheodory_mixture_parts(seed, k)
    series = generate_caratheodory(seed, degree, k)
    return FunctionUnderTest(f"caratheodory-member(seed={seed})", series,
                             value_fn=caratheodory_mixture_evaluator(lambdas, units),
                             certificates=("caratheodory",))


def _close_to_convex_derivative(h: SliceSeries, lambdas, units) -> Callable:
    """Pointwise-exact f' = q^-1 (h star p) for the mixture p.

    Each summand h star (1-qu)^(-star) star (1+qu) collapses to
    S_u(q)^(-1) (h star (1 - q conj(u)) star (1 + q u))(q) because the
    real symmetrization S_u is central.
    """
    parts = []
    for lam, u in zip(lambdas, units):
        one = ONE
        lin = SliceSeries.from_coeffs([one, -u])
        numerator = full_star_mul(
            full_star_mul(h, regular_conjugate(lin)),
            SliceSeries.from_coeffs([one, u])).to_float()
        sym = symmetrize(lin.pad_to(2)).to_float()
        parts.append((float(lam), sym, numerator))

    def derivative(q: Quaternion) -> Quaternion:
        acc = Quaternion(0.0, 0.0, 0.0, 0.0)
        for lam, sym, numerator in parts:
            acc = acc + (sym.eval(q).inverse() * numerator.eval(q)) * lam
        return q.inverse() * acc

    return derivative


def close_to_convex_member(seed: int, degree: int = DEFAULT_DEGREE,
                           k: int = 3) -> FunctionUnderTest:
    h = generate_starlike_small_coeff(1000003 * seed + 1, degree)
    lambdas, units = caratheodory_mixture_parts(1000003 * seed + 2, k)
    p = generate_caratheodory(1000003 * seed + 2, degree, k)
    series = integrate_radial(star_mul(h, p).shift(-1))
    parts: list = []  # built lazily; coefficient checks never differentiate

    def derivative(q: Quaternion) -> Quaternion:
        if not parts:
            parts.append(_close_to_convex_derivative(h, lambdas, units))
        return parts[0](q)

    return FunctionUnderTest(
        f"close-to-convex-member(seed={seed})", series,
        derivative_fn=derivative,
        certificates=("close-to-convex",))


def convex_member(seed: int, degree: int = DEFAULT_DEGREE) -> FunctionUnderTest:
    """f with q f' equal to a certified starlike member."""
    h = generate_starlike_small_coeff(seed, degree)
    series = integrate_radial(h.shift(-1))
    return FunctionUnderTest(f"convex-member(seed={seed})", series,
                             certificates=("derivative-starlike",))


def sample_lambdas(seed: int, count: int) -> list[Quaternion]:
    """Real rationals plus quaternionic scalars with |lambda| <= 4."""
    from .classes import random_exact_unit

    fixed = [Quaternion.from_real(Fraction(v)) for v in
             (0, 1, 2, -1, Fraction(3, 4), Fraction(7, 4), Fraction(-1, 2), 4)]
    rng = Random(seed)
    out = list(fixed)
    while len(out) < count:
        if rng.random() < 0.5:
            out.append(Quaternion.from_real(Fraction(rng.randint(-64, 64), 16)))
        else:
            u = random_exact_unit(rng)
            out.append(u * Fraction(rng.randint(0, 64), 16))
    return out[:count]


def quotient_pair(seed: int, degree: int = 4) -> tuple[SliceSeries, SliceSeries]:
    """Polynomial pair with |f^s| bounded away from 0 and a clear verdict."""
    from .classes import random_exact_unit

    rng = Random(seed)
    f_coeffs = [ONE]
    for n in range(1, degree + 1):
        f_coeffs.append(random_exact_unit(rng) * Fraction(rng.randrange(8), 160 * degree * n))
    sign = 1 if rng.random() < 0.5 else -1
    scale = Fraction(1, 2) if rng.random() < 0.5 else Fraction(2)
    g_coeffs = [ONE * sign]
    for n in range(1, degree + 1):
        g_coeffs.append(random_exact_unit(rng) * Fraction(rng.randrange(8), 160 * degree * n))
    g = SliceSeries.from_coeffs(g_coeffs).scale(scale)
    return SliceSeries.from_coeffs(f_coeffs), g


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


@dataclass
class SuiteConfig:
    """Shared knobs for a suite run; all randomness flows from the seed."""

    degree: int = DEFAULT_DEGREE
    tol: float = POINT_TOL
    seed: int = 7
    random_count: int = 5
    grid: SamplingGrid = DEFAULT_GRID

    def member_seed(self, i: int) -> int:
        return self.seed * 1000 + i


def _diagonal_float_unit() -> Quaternion:
    s = 1.0 / math.sqrt(2.0)
    return Quaternion(0.0, s, s, 0.0)


Task = Callable[[], CheckReport]


def _suite_bieberbach(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    for u in (ONE, I, _diagonal_float_unit()):
        fut = koebe_function(u, cfg.degree)
        tasks.append(lambda fut=fut: check_bieberbach(fut, cfg.grid))
    for i in range(cfg.random_count):
        fut = close_to_convex_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_bieberbach(fut, cfg.grid))
    return tasks


def _suite_fekete_szego(cfg: SuiteConfig) -> list[Task]:
    lambdas = sample_lambdas(cfg.seed, max(25, cfg.random_count * 5))
    tasks: list[Task] = []
    for u in (ONE, I):
        fut = koebe_function(u, cfg.degree)
        tasks.append(lambda fut=fut: check_fekete_szego(fut, lambdas, cfg.grid))
    return tasks


def _suite_caratheodory(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    extremal = caratheodory_extremal_function(I, cfg.degree)
    tasks.append(lambda: check_caratheodory_bounds(extremal, cfg.grid, cfg.tol))
    tasks.append(lambda: check_sharper_caratheodory(extremal, cfg.grid))
    for i in range(cfg.random_count):
        fut = caratheodory_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_caratheodory_bounds(fut, cfg.grid, cfg.tol))
        tasks.append(lambda fut=fut: check_sharper_caratheodory(fut, cfg.grid))
    return tasks


def _suite_growth(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    kb = koebe_function(ONE, cfg.degree)
    tasks.append(lambda: check_growth_distortion(kb, cfg.grid, cfg.tol))
    tasks.append(lambda: check_monotone_modulus(kb, 0.0, cfg.grid))
    tasks.append(lambda: check_growth_distortion(identity_function(cfg.degree), cfg.grid, cfg.tol))
    tasks.append(lambda: check_growth_order_m(convex_function(cfg.degree), 1, cfg.grid,
                                              "distortion", cfg.tol))
    tasks.append(lambda: check_growth_order_m(odd_reference_function(cfg.degree), 2,
                                              cfg.grid, "growth", cfg.tol))
    for i in range(cfg.random_count):
        fut = starlike_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_growth_distortion(fut, cfg.grid, cfg.tol))
        tasks.append(lambda fut=fut: check_monotone_modulus(fut, 0.0, cfg.grid))
    return tasks


def _suite_schwarz(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    tasks.append(lambda: check_schwarz(monomial_function(K, 2, cfg.degree), 2,
                                       cfg.grid, cfg.tol))
    half = Quaternion.from_real(Fraction(1, 2))
    tasks.append(lambda: check_schwarz(monomial_function(half, 2, cfg.degree), 2,
                                       cfg.grid, cfg.tol))
    b = Quaternion(0, Fraction(1, 2), 0, 0)
    tasks.append(lambda: check_schwarz(rogosinski_function(b, ONE, cfg.degree), 1,
                                       cfg.grid, cfg.tol))
    a = Quaternion(0, Fraction(1, 2), 0, 0)
    tasks.append(lambda: check_schwarz_pick_coefficient(
        mobius_times_unit_function(a, J, cfg.degree), cfg.grid, cfg.tol))
    tasks.append(lambda: check_schwarz_pick_coefficient(
        constant_function(half), cfg.grid, cfg.tol))
    tasks.append(lambda: check_schwarz_pick_coefficient(
        monomial_function(half, 1, cfg.degree), cfg.grid, cfg.tol))
    return tasks


def _suite_counterexample(cfg: SuiteConfig) -> list[Task]:
    return [check_schwarz_pick_counterexample]


def _suite_rogosinski(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    b = Quaternion(0, Fraction(1, 2), 0, 0)
    q0s = [Quaternion.from_real(Fraction(1, 2)), Quaternion(0, 0, Fraction(1, 2), 0)]
    for p in (ONE, -ONE, I):
        fut = rogosinski_function(b, p, cfg.degree)
        for q0 in q0s:
            tasks.append(lambda fut=fut, q0=q0: check_rogosinski(fut, q0, cfg.grid, cfg.tol))
    rng = Random(cfg.seed)
    for i in range(cfg.random_count):
        bb = random_float_unit(rng) * rng.uniform(0.1, 0.8)
        q0 = random_float_unit(rng) * rng.uniform(0.1, 0.9)
        fut = monomial_function(bb, 1, cfg.degree)
        tasks.append(lambda fut=fut, q0=q0: check_rogosinski(fut, q0, cfg.grid, cfg.tol))
    return tasks


def _suite_bohr(cfg: SuiteConfig) -> list[Task]:
    half = Quaternion.from_real(Fraction(1, 2))
    a = Quaternion(0, Fraction(1, 2), 0, 0)
    return [
        lambda: check_bohr(identity_function(cfg.degree), cfg.grid, cfg.tol),
        lambda: check_bohr(constant_function(half), cfg.grid, cfg.tol),
        lambda: check_bohr(mobius_function(a, cfg.degree), cfg.grid, cfg.tol),
    ]


def _suite_hayman(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = [
        lambda: check_hayman(koebe_function(ONE, cfg.degree), cfg.grid),
        lambda: check_hayman(identity_function(cfg.degree), cfg.grid),
    ]
    for i in range(cfg.random_count):
        fut = starlike_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_hayman(fut, cfg.grid))
    return tasks


def _suite_koebe(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = [
        lambda: check_koebe_quarter(koebe_function(ONE, cfg.degree), cfg.grid,
                                    check_omitted_slit=True),
        lambda: check_koebe_quarter(identity_function(cfg.degree), cfg.grid),
    ]
    for i in range(cfg.random_count):
        fut = starlike_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_koebe_quarter(fut, cfg.grid))
    return tasks


def _suite_convex(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = [
        lambda: check_convex_coefficients(convex_function(cfg.degree), cfg.grid),
        lambda: check_convex_coefficients(identity_function(cfg.degree), cfg.grid),
        lambda: check_convex_covering_examples(cfg.grid, cfg.tol, cfg.degree),
    ]
    for i in range(cfg.random_count):
        fut = convex_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_convex_coefficients(fut, cfg.grid))
    return tasks


def _suite_subordination(cfg: SuiteConfig) -> list[Task]:
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    w_square = SliceSeries.from_coeffs([ONE], valuation=2).pad_to(cfg.degree)
    w_half = SliceSeries.from_coeffs([Quaternion.from_real(Fraction(1, 2))],
                                     valuation=1).pad_to(cfg.degree)
    w_id = SliceSeries.identity(cfg.degree)
    kb = koebe_function(ONE, cfg.degree)
    tasks: list[Task] = [
        lambda: check_subordination_growth(kb, w_square, cfg.grid, cfg.tol),
        lambda: check_subordination_growth(kb, w_half, cfg.grid, cfg.tol),
    ]
    for i in range(min(cfg.random_count, 3)):
        fut = close_to_convex_member(cfg.member_seed(i), cfg.degree)
        tasks.append(lambda fut=fut: check_subordination_growth(fut, w_id, cfg.grid, cfg.tol))
    return tasks


def _suite_quotient(cfg: SuiteConfig) -> list[Task]:
    tasks: list[Task] = []
    one = SliceSeries.one(cfg.degree)
    g0 = SliceSeries.from_coeffs([ONE, Quaternion.from_real(Fraction(1, 2))])
    tasks.append(lambda: check_quotient_equivalences(one, g0, cfg.grid, tol=cfg.tol))
    lin_minus = SliceSeries.from_coeffs([ONE, -I])
    lin_plus = SliceSeries.from_coeffs([ONE, I])
    tasks.append(lambda: check_quotient_equivalences(lin_minus, lin_plus, cfg.grid, tol=cfg.tol))
    for i in range(cfg.random_count):
        f, g = quotient_pair(cfg.member_seed(i))
        tasks.append(lambda f=f, g=g: check_quotient_equivalences(f, g, cfg.grid, tol=cfg.tol))
    return tasks


SUITES: dict[str, Callable[[SuiteConfig], list[Task]]] = {
    "bieberbach": _suite_bieberbach,
    "fekete-szego": _suite_fekete_szego,
    "caratheodory": _suite_caratheodory,
    "growth": _suite_growth,
    "schwarz": _suite_schwarz,
    "schwarz-pick-counterexample": _suite_counterexample,
    "rogosinski": _suite_rogosinski,
    "bohr": _suite_bohr,
    "hayman": _suite_hayman,
    "koebe": _suite_koebe,
    "convex": _suite_convex,
    "subordination": _suite_subordination,
    "quotient": _suite_quotient,
}


def run_suites(names: list[str], cfg: SuiteConfig, jobs: int = 1) -> list[CheckReport]:
    """Execute suites in declaration order; reports keep task order even
    when dispatched to a thread pool."""
    tasks: list[Task] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        tasks.extend(SUITES[name](cfg))
    if jobs <= 1:
        return [task() for task in tasks]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [fut.result() for fut in futures]
