"""Function-class predicates, certified generators, and the sampling grid.

The classes screened here are the classical ones transplanted to slice
regular functions of a quaternionic variable:

* Caratheodory class: p(0) = 1 and Re p > 0 on the unit ball.
* starlike type (order alpha): f(0) = 0, f'(0) = 1, zero set {0}, and
  Re(f(q)^-1 q f'(q)) > alpha.
* close-to-convex type: Re(h(q)^-1 q f'(q)) > 0 against some certified
  starlike h.
* slice preserving: all-real coefficients (maps every slice into itself).
* one-slice: all coefficients in a single plane R + I R.

"For all q in the ball" is realized at desk scale as "for all grid
points", and verdicts carry their certificate: analytic-sufficient when
an exact coefficient criterion guarantees membership, sampled when only
the grid was consulted, refuted with a witness otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from random import Random
from typing import Callable, Optional, Union

from .errors import DomainError, PreconditionError
from .quat import (ONE, ImaginaryUnit, Quaternion, UNIT_I, UNIT_J, UNIT_K,
                   exact_sqrt, quaternion_to_json)
from .series import (DEFAULT_DEGREE, DEFAULT_DOMAIN, EvalDomain, SliceSeries,
                     StarQuotient, full_star_mul, integrate_radial,
                     slice_derivative, star_mul)

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_ANGLE_COUNT = 8


def _extra_units(count: int) -> list[ImaginaryUnit]:
    """Deterministic low-discrepancy directions beyond the canonical i, j, k."""
    units = []
    for m in range(count):
        z = 1.0 - (2.0 * m + 1.0) / count
        r = math.sqrt(max(1.0 - z * z, 0.0))
        phi = m * math.pi * (3.0 - math.sqrt(5.0))
        units.append(ImaginaryUnit.from_vector(r * math.cos(phi), r * math.sin(phi), z))
    return units


@dataclass(frozen=True)
class SamplingGrid:
    """Deterministic finite subset of the open unit ball.

    Points are r * exp(I theta) for every radius, unit axis and angle;
    the derived boundary directions exp(I theta) are shared by all radial
    checks so that maxima at different radii are comparable.
    """

    radii: tuple[float, ...]
    units: tuple[ImaginaryUnit, ...]
    angles: tuple[float, ...]

    def __post_init__(self):
        if not self.radii or not self.units or not self.angles:
            raise DomainError("grid must carry radii, units and angles")
        if any(not 0.0 < r < 1.0 for r in self.radii):
            raise DomainError("grid radii must lie in (0, 1)")
        if list(self.radii) != sorted(set(self.radii)):
            raise DomainError("grid radii must be strictly increasing")

    @classmethod
    def default(cls, radii=DEFAULT_RADII, unit_count: int = 3,
                angle_count: int = DEFAULT_ANGLE_COUNT) -> "SamplingGrid":
        units = [UNIT_I, UNIT_J, UNIT_K][:max(unit_count, 1)]
        if unit_count > 3:
            units += _extra_units(unit_count - 3)
        angles = tuple(2.0 * math.pi * m / angle_count for m in range(angle_count))
        return cls(tuple(float(r) for r in radii), tuple(units), angles)

    @cached_property
    def directions(self) -> tuple[Quaternion, ...]:
        """Unit directions exp(I theta), deduplicated (reals coincide)."""
        seen = set()
        out = []
        for unit in self.units:
            for theta in self.angles:
                u = unit.circle_point(theta)
                key = (round(u.w, 12), round(u.x, 12), round(u.y, 12), round(u.z, 12))
                if key not in seen:
                    seen.add(key)
                    out.append(u)
        return tuple(out)

    @cached_property
    def points(self) -> tuple[Quaternion, ...]:
        return tuple(u * r for r in self.radii for u in self.directions)

    def points_at(self, radius: float) -> tuple[Quaternion, ...]:
        return tuple(u * radius for u in self.directions)


DEFAULT_GRID = SamplingGrid.default()


@dataclass(frozen=True)
class ClassVerdict:
    """Outcome of a membership screen."""

    class_name: str
    member: bool
    certificate: str  # analytic-sufficient | sampled | refuted
    margin: Optional[float] = None
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.certificate == "refuted" and self.witness is None:
            raise ValueError("refuted verdicts must carry a witness")
        if self.certificate == "sampled" and self.margin is None:
            raise ValueError("sampled verdicts must carry the worst margin")

    def to_json_dict(self) -> dict:
        return {
            "class": self.class_name,
            "member": self.member,
            "certificate": self.certificate,
            "margin": self.margin,
            "witness": self.witness,
        }


def _point_witness(q: Quaternion, margin: float) -> dict:
    return {"q": quaternion_to_json(q.to_float()), "margin": margin}


def _coeff_witness(n: int, c: Quaternion) -> dict:
    return {"n": n, "coeff": quaternion_to_json(c)}


@dataclass
class FunctionUnderTest:
    """A function handed to predicates and theorem checks.

    Carries the coefficient window plus, when available, closed-form
    point evaluators that are exact near the boundary of the ball (the
    truncated window of an infinite extremal is useless at radius 0.99).
    ``certificates`` lists class names established by construction, so
    checks need not re-screen them.
    """

    fid: str
    series: SliceSeries
    value_fn: Optional[Callable[[Quaternion], Quaternion]] = None
    derivative_fn: Optional[Callable[[Quaternion], Quaternion]] = None
    certificates: tuple[str, ...] = ()
    _float_series: Optional[SliceSeries] = field(default=None, repr=False)
    _float_derivative: Optional[SliceSeries] = field(default=None, repr=False)

    def value(self, q: Quaternion) -> Quaternion:
        if self.value_fn is not None:
            return self.value_fn(q)
        if self._float_series is None:
            self._float_series = self.series.to_float()
        return self._float_series.eval(q)

    def derivative_value(self, q: Quaternion) -> Quaternion:
        if self.derivative_fn is not None:
            return self.derivative_fn(q)
        if self._float_derivative is None:
            self._float_derivative = slice_derivative(self.series.to_float())
        return self._float_derivative.eval(q)

    def coeff(self, n: int) -> Quaternion:
        return self.series.coeff(n)

    def certifies(self, class_name: str) -> bool:
        return class_name in self.certificates


FunctionLike = Union[SliceSeries, FunctionUnderTest]


def as_function(f: FunctionLike, fid: str = "series") -> FunctionUnderTest:
    if isinstance(f, FunctionUnderTest):
        return f
    return FunctionUnderTest(fid, f)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_caratheodory(p: FunctionLike, grid: SamplingGrid = DEFAULT_GRID) -> ClassVerdict:
    """p(0) = 1 and Re p > 0 screened over the grid."""
    name = "caratheodory"
    fut = as_function(p)
    s = fut.series
    if s.valuation > 0 or not _is_one(s.coeff(0)):
        return ClassVerdict(name, False, "refuted", None,
                            _coeff_witness(0, s.coeff(0) if s.valuation <= 0 else s.coeffs[0]))
    worst = math.inf
    argmin = None
    for q in grid.points:
        re = float(fut.value(q).w)
        if re < worst:
            worst, argmin = re, q
    if worst <= 0.0:
        return ClassVerdict(name, False, "refuted", worst, _point_witness(argmin, worst))
    return ClassVerdict(name, True, "sampled", worst)


def _is_one(c: Quaternion) -> bool:
    if c.is_exact:
        return c == ONE
    return abs(c - ONE.to_float()) <= 1e-12


def is_starlike(f: FunctionLike, grid: SamplingGrid = DEFAULT_GRID,
                alpha: float = 0.0,
                domain: EvalDomain = DEFAULT_DOMAIN) -> ClassVerdict:
    """Starlike-type screen of order alpha.

    Requires normalization f(0) = 0, f'(0) = 1, no grid zero away from
    the origin, and Re(f(q)^-1 q f'(q)) > alpha at every grid point.
    """
    name = f"starlike({alpha})" if alpha else "starlike"
    if not float(alpha) < 1.0:
        raise DomainError("the class is empty for order >= 1")
    fut = as_function(f)
    s = fut.series
    if s.valuation != 1 or not _is_one(s.coeff(1)):
        witness = _coeff_witness(1, s.coeff(1) if s.valuation <= 1 <= s.degree else s.coeffs[0])
        return ClassVerdict(name, False, "refuted", None, witness)
    worst = math.inf
    argmin = None
    for q in grid.points:
        value = fut.value(q)
        if abs(value) < domain.singular_threshold:
            return ClassVerdict(name, False, "refuted", None,
                                _point_witness(q, abs(value)))
        quotient = value.inverse() * (q * fut.derivative_value(q))
        margin = float(quotient.w) - float(alpha)
        if margin < worst:
            worst, argmin = margin, q
    if worst <= 0.0:
        return ClassVerdict(name, False, "refuted", worst, _point_witness(argmin, worst))
    return ClassVerdict(name, True, "sampled", worst)


def is_close_to_convex(f: FunctionLike, h: FunctionLike,
                       grid: SamplingGrid = DEFAULT_GRID,
                       domain: EvalDomain = DEFAULT_DOMAIN) -> ClassVerdict:
    """Screen Re(h(q)^-1 q f'(q)) > 0 against a certified starlike h."""
    name = "close-to-convex"
    hf = as_function(h)
    if not hf.certifies("starlike"):
        h_verdict = is_starlike(hf, grid, 0.0, domain)
        if not h_verdict.member:
            raise PreconditionError("reference function failed the starlike screen")
    fut = as_function(f)
    worst = math.inf
    argmin = None
    for q in grid.points:
        hv = hf.value(q)
        quotient = hv.inverse() * (q * fut.derivative_value(q))
        if float(quotient.w) < worst:
            worst, argmin = float(quotient.w), q
    if worst <= 0.0:
        return ClassVerdict(name, False, "refuted", worst, _point_witness(argmin, worst))
    return ClassVerdict(name, True, "sampled", worst)


def is_slice_preserving(f: FunctionLike) -> ClassVerdict:
    """All-real coefficients; the exact series criterion, no sampling."""
    name = "slice-preserving"
    for n, c in as_function(f).series.terms():
        if not c.is_real():
            return ClassVerdict(name, False, "refuted", None, _coeff_witness(n, c))
    return ClassVerdict(name, True, "analytic-sufficient")


def is_one_slice(f: FunctionLike) -> ClassVerdict:
    """All coefficients inside one plane R + I R; reports the axis I."""
    name = "one-slice"
    series = as_function(f).series
    axis = None
    for n, c in series.terms():
        ix, iy, iz = float(c.x), float(c.y), float(c.z)
        norm = math.sqrt(ix * ix + iy * iy + iz * iz)
        if norm == 0.0:
            continue
        if axis is None:
            axis = (ix / norm, iy / norm, iz / norm)
            continue
        cx = axis[1] * iz - axis[2] * iy
        cy = axis[2] * ix - axis[0] * iz
        cz = axis[0] * iy - axis[1] * ix
        cross = math.sqrt(cx * cx + cy * cy + cz * cz)
        tol = 0.0 if (series.is_exact and c.is_exact) else 1e-9 * norm
        if cross > tol:
            return ClassVerdict(name, False, "refuted", None, _coeff_witness(n, c))
    if axis is None:
        return ClassVerdict(name, True, "analytic-sufficient",
                            witness={"axis": [1.0, 0.0, 0.0]})
    return ClassVerdict(name, True, "analytic-sufficient",
                        witness={"axis": list(axis)})


# ---------------------------------------------------------------------------
# deterministic random material
# ---------------------------------------------------------------------------


def random_exact_unit(rng: Random) -> Quaternion:
    """Rational point of the unit 3-sphere: v^2 / |v|^2 for integer v."""
    while True:
        v = Quaternion(rng.randint(-2, 2), rng.randint(-2, 2),
                       rng.randint(-2, 2), rng.randint(-2, 2))
        if not v.is_zero():
            break
    return (v * v) * Fraction(1, v.norm_sq())


def random_float_unit(rng: Random) -> Quaternion:
    """Uniform-ish direction on the 3-sphere from normalized Gaussians."""
    while True:
        comps = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(c * c for c in comps))
        if n > 1e-6:
            return Quaternion(*[c / n for c in comps])


def random_imaginary_unit(rng: Random) -> ImaginaryUnit:
    while True:
        x, y, z = rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1)
        n = math.sqrt(x * x + y * y + z * z)
        if n > 1e-6:
            return ImaginaryUnit(x / n, y / n, z / n)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def generate_starlike_small_coeff(seed: int, degree: int = DEFAULT_DEGREE,
                                  exact: bool = True) -> SliceSeries:
    """f = q + Sigma q^n a_n with Sigma n |a_n| < 1, hence starlike.

    Each a_n is a rational-modulus multiple of a rational unit direction,
    so the defining sum is exactly rational and stays below 255/512.
    """
    if degree < 2:
        raise DomainError("need degree >= 2")
    rng = Random(seed)
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    coeffs = [ONE]
    scale = 512 * (degree - 1)
    for n in range(2, degree + 1):
        weight = rng.randrange(256)
        if weight == 0:
            coeffs.append(zero)
            continue
        u = random_exact_unit(rng)
        coeffs.append(u * Fraction(weight, scale * n))
    f = SliceSeries.from_coeffs(coeffs, valuation=1)
    return f if exact else f.to_float()


def small_coeff_margin(f: SliceSeries) -> Fraction:
    """Exact slack 1 - Sigma_{n>=2} n |a_n|; positive certifies membership."""
    total = Fraction(0)
    for n, c in f.terms():
        if n < 2:
            continue
        modulus = exact_sqrt(c.norm_sq())
        if modulus is None:
            raise DomainError("coefficient modulus is not rational")
        total += n * modulus
    return Fraction(1) - total


def certify_small_coeff(f: SliceSeries) -> ClassVerdict:
    margin = small_coeff_margin(f)
    if margin >= 0:
        return ClassVerdict("starlike", True, "analytic-sufficient", float(margin))
    return ClassVerdict("starlike", False, "refuted", float(margin),
                        {"sum_excess": str(-margin)})


def caratheodory_extremal(u: Quaternion, degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """1 + 2 Sigma q^n u^n, the maximal-coefficient member for |u| = 1."""
    _require_unit(u)
    coeffs = [ONE if u.is_exact else ONE.to_float()]
    power = u
    for _ in range(1, degree + 1):
        coeffs.append(power * 2)
        power = power * u
    return SliceSeries.from_coeffs(coeffs)


def caratheodory_extremal_quotient(u: Quaternion) -> StarQuotient:
    one = ONE if u.is_exact else ONE.to_float()
    return StarQuotient(SliceSeries.from_coeffs([one, u]),
                        SliceSeries.from_coeffs([one, -u]))


def caratheodory_mixture_parts(seed: int, k: int = 3) -> tuple[list[Fraction], list[Quaternion]]:
    """Deterministic convex weights and unit directions for one seed."""
    if k < 1:
        raise DomainError("need at least one extremal component")
    rng = Random(seed)
    weights = [rng.randint(1, 16) for _ in range(k)]
    total = sum(weights)
    units = [random_exact_unit(rng) for _ in range(k)]
    return [Fraction(w, total) for w in weights], units


def generate_caratheodory(seed: int, degree: int = DEFAULT_DEGREE,
                          k: int = 3, exact: bool = True) -> SliceSeries:
    """Convex combination of extremal members: in the class by convexity."""
    lambdas, units = caratheodory_mixture_parts(seed, k)
    acc = SliceSeries.zero(degree)
    for lam, u in zip(lambdas, units):
        acc = acc + caratheodory_extremal(u, degree).scale(lam)
    return acc if exact else acc.to_float()


def caratheodory_mixture_evaluator(lambdas: list[Fraction],
                                   units: list[Quaternion]) -> Callable[[Quaternion], Quaternion]:
    """Pointwise-exact evaluator of the convex combination of extremals."""
    quotients = [caratheodory_extremal_quotient(u) for u in units]
    weights = [float(lam) for lam in lambdas]

    def evaluate(q: Quaternion) -> Quaternion:
        acc = Quaternion(0.0, 0.0, 0.0, 0.0)
        for w, quot in zip(weights, quotients):
            acc = acc + quot.eval(q) * w
        return acc

    return evaluate


def generate_close_to_convex(h: FunctionLike, p: FunctionLike,
                             grid: SamplingGrid = DEFAULT_GRID) -> SliceSeries:
    """Integrate f'(q) = q^-1 h(q) star p(q) for certified h and p.

    The coefficients then satisfy the convolution identity
    n a_n = p_(n-1) + h_2 p_(n-2) + ... + h_(n-1) p_1 + h_n.
    """
    hf, pf = as_function(h), as_function(p)
    if not hf.certifies("starlike") and not is_starlike(hf, grid).member:
        raise PreconditionError("h failed the starlike screen")
    if not pf.certifies("caratheodory") and not is_caratheodory(pf, grid).member:
        raise PreconditionError("p failed the Caratheodory screen")
    derivative = star_mul(hf.series, pf.series).shift(-1)
    return integrate_radial(derivative)


def koebe(u: Quaternion, degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """Coefficients a_n = n u^(n-1): the extremal for the coefficient,
    growth and distortion bounds."""
    _require_unit(u)
    coeffs = []
    power = ONE if u.is_exact else ONE.to_float()
    for n in range(1, degree + 1):
        coeffs.append(power * n)
        power = power * u
    return SliceSeries.from_coeffs(coeffs, valuation=1)


def koebe_quotient(u: Quaternion) -> StarQuotient:
    one = ONE if u.is_exact else ONE.to_float()
    lin = SliceSeries.from_coeffs([one, -u])
    return StarQuotient(SliceSeries.identity(), full_star_mul(lin, lin))


def convex_reference(degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """q (1 - q)^(-star): half-plane image Re > -1/2, derivative 1 at 0."""
    return SliceSeries.from_coeffs([ONE] * degree, valuation=1)


def convex_reference_quotient() -> StarQuotient:
    return StarQuotient(SliceSeries.identity(),
                        SliceSeries.from_coeffs([ONE, -ONE]))


def odd_reference(degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """q (1 - q^2)^(-star) = q + q^3 + q^5 + ...; gap-2 starlike example."""
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    coeffs = [ONE if n % 2 == 1 else zero for n in range(1, degree + 1)]
    return SliceSeries.from_coeffs(coeffs, valuation=1)


def odd_reference_quotient() -> StarQuotient:
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    return StarQuotient(SliceSeries.identity(),
                        SliceSeries.from_coeffs([ONE, zero, -ONE]))


def bloch_series(degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """Sigma q^(2n+1) / (2n+1); image is the strip |Im| < pi/4."""
    zero = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    coeffs = [Quaternion.from_real(Fraction(1, n)) if n % 2 == 1 else zero
              for n in range(1, degree + 1)]
    return SliceSeries.from_coeffs(coeffs, valuation=1)


def bloch_eval(q: Quaternion) -> Quaternion:
    """Closed-form slice transplant of arctanh; exactness near the boundary."""
    x, y, unit = q.to_float().decompose()
    w = cmath.atanh(complex(x, y))
    return Quaternion(w.real, 0.0, 0.0, 0.0) + unit.as_quaternion() * w.imag


def rogosinski_extremal(b: Quaternion, p: Quaternion,
                        degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """Self-map of the ball with f(0) = 0, f'(0) = b filling the value ball:

        f(q) = q (1 - q |b| p)^(-star) star (|b| - q p) b/|b|

    Stays exact when |b| is rational; degrades to float otherwise.
    The family needs b != 0; for b = 0 use the monomials q^2 u instead.
    """
    beta, u_b, p = _rogosinski_parts(b, p)
    bp = p * beta
    # a_(n+1) = (|b| p)^(n-1) p (|b|^2 - 1) u_b for n >= 1
    factor = p * (beta * beta - 1)
    coeffs = [u_b * beta]
    power = ONE if u_b.is_exact else ONE.to_float()
    for _ in range(2, degree + 1):
        coeffs.append(power * factor * u_b)
        power = power * bp
    return SliceSeries.from_coeffs(coeffs, valuation=1)


def rogosinski_extremal_quotient(b: Quaternion, p: Quaternion) -> tuple[StarQuotient, Quaternion]:
    """Quotient core C with f(q) = q * C(q); returned as (C, b) for checks."""
    beta, u_b, p = _rogosinski_parts(b, p)
    one = ONE if u_b.is_exact else ONE.to_float()
    num = SliceSeries.from_coeffs([u_b * beta, (-p) * u_b])
    den = SliceSeries.from_coeffs([one, (-p) * beta])
    return StarQuotient(num, den), u_b * beta


def _rogosinski_parts(b: Quaternion, p: Quaternion):
    if b.is_zero():
        raise DomainError("derivative parameter must be nonzero for this family")
    if float(p.norm_sq()) > 1.0 + 1e-12:
        raise DomainError("free parameter must lie in the closed unit ball")
    nsq = b.norm_sq()
    if float(nsq) >= 1.0:
        raise DomainError("derivative parameter must lie inside the unit ball")
    if b.is_exact:
        root = exact_sqrt(nsq)
        if root is not None:
            beta = root
            u_b = b * (Fraction(1) / beta)
            return beta, u_b, (p if p.is_exact else p.to_float())
    bf = b.to_float()
    beta = abs(bf)
    return beta, bf * (1.0 / beta), p.to_float()


def _require_unit(u: Quaternion):
    nsq = u.norm_sq()
    if u.is_exact:
        if nsq != 1:
            raise DomainError("direction must have exact unit modulus")
    elif abs(float(nsq) - 1.0) > 1e-12:
        raise DomainError("direction modulus differs from 1 beyond tolerance")
