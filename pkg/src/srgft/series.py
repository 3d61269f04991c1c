"""Truncated left power series over the quaternions.

A series is a finite window Sigma_{n=v}^{N} q^n a_n: quaternion
coefficients on the right, central powers of q on the left.  The window
records *knowledge*: the valuation v says every coefficient below v is
zero, the truncation degree N says nothing is known above N.  Every
operation propagates the largest window it can justify, so formal
identities can be asserted "through the valid degree".

Negative valuations (Laurent windows) arise from reciprocals of series
vanishing at 0 and are supported throughout; powers of q are central, so
shifting the valuation is sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import DomainError, SingularityError
from .quat import ONE, Quaternion, Scalar, quaternion_from_json, quaternion_to_json

DEFAULT_DEGREE = 48
DEFAULT_SINGULAR_THRESHOLD = 1e-8


@dataclass(frozen=True)
class EvalDomain:
    """Evaluation guard for expressions containing a regular reciprocal.

    Points where the symmetrized denominator has modulus below
    ``singular_threshold`` are refused instead of producing huge values.
    """

    singular_threshold: float = DEFAULT_SINGULAR_THRESHOLD

    def __post_init__(self):
        if not self.singular_threshold > 0:
            raise DomainError("singular threshold must be positive")


DEFAULT_DOMAIN = EvalDomain()


def _exact_zero() -> Quaternion:
    return Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))


def _zero_like(mode_exact: bool) -> Quaternion:
    return _exact_zero() if mode_exact else Quaternion(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class SliceSeries:
    """Window of a left power series: coefficients a_v .. a_N, inclusive."""

    valuation: int
    coeffs: tuple[Quaternion, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series window must hold at least one coefficient")
        coeffs = tuple(self.coeffs)
        if any(not c.is_exact for c in coeffs):
            coeffs = tuple(c.to_float() for c in coeffs)
        v = self.valuation
        degree = v + len(coeffs) - 1
        # normalized valuation: leading zeros are knowledge, push them into v
        k = 0
        while k < len(coeffs) and coeffs[k].is_zero():
            k += 1
        if k == len(coeffs):
            # identically zero on the window; canonical form starts at 0
            if degree < 0:
                degree = 0
            v = 0
            coeffs = (coeffs[0],) * (degree + 1)
        else:
            v += k
            coeffs = coeffs[k:]
        object.__setattr__(self, "valuation", v)
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Quaternion], valuation: int = 0) -> "SliceSeries":
        return cls(valuation, tuple(coeffs))

    @classmethod
    def zero(cls, degree: int = 0, exact: bool = True) -> "SliceSeries":
        z = _zero_like(exact)
        return cls(0, (z,) * (max(degree, 0) + 1))

    @classmethod
    def one(cls, degree: int = 0, exact: bool = True) -> "SliceSeries":
        unit = ONE if exact else ONE.to_float()
        z = _zero_like(exact)
        return cls(0, (unit,) + (z,) * max(degree, 0))

    @classmethod
    def identity(cls, degree: int = 1, exact: bool = True) -> "SliceSeries":
        """The series q, padded with known zeros up to ``degree``."""
        unit = ONE if exact else ONE.to_float()
        z = _zero_like(exact)
        return cls(1, (unit,) + (z,) * max(degree - 1, 0))

    @classmethod
    def constant(cls, c: Quaternion, degree: int = 0) -> "SliceSeries":
        return cls(0, (c,) + (_zero_like(c.is_exact),) * max(degree, 0))

    # -- shape ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.valuation + len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return self.coeffs[0].is_exact

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coeff(self, n: int) -> Quaternion:
        """Coefficient of q^n.  Raises above the truncation degree."""
        if n > self.degree:
            raise IndexError(f"coefficient {n} beyond truncation degree {self.degree}")
        if n < self.valuation:
            return _zero_like(self.is_exact)
        return self.coeffs[n - self.valuation]

    def terms(self) -> Iterator[tuple[int, Quaternion]]:
        for i, c in enumerate(self.coeffs):
            yield self.valuation + i, c

    def truncate(self, degree: int) -> "SliceSeries":
        if degree >= self.degree:
            return self
        keep = degree - self.valuation + 1
        if keep < 1:
            return SliceSeries.zero(max(degree, 0), self.is_exact)
        return SliceSeries(self.valuation, self.coeffs[:keep])

    def pad_to(self, degree: int) -> "SliceSeries":
        """Extend the window with zero coefficients.

        Only sound when the series is fully known up to ``degree``, i.e.
        it is a polynomial; callers assert that knowledge.
        """
        if degree <= self.degree:
            return self
        z = _zero_like(self.is_exact)
        return SliceSeries(self.valuation, self.coeffs + (z,) * (degree - self.degree))

    def trim(self) -> "SliceSeries":
        """Drop trailing zero coefficients (values are unchanged)."""
        last = len(self.coeffs)
        while last > 1 and self.coeffs[last - 1].is_zero():
            last -= 1
        if last == len(self.coeffs):
            return self
        return SliceSeries(self.valuation, self.coeffs[:last])

    def shift(self, k: int) -> "SliceSeries":
        """Multiply by the central power q^k (valuation shift)."""
        return SliceSeries(self.valuation + k, self.coeffs)

    def to_float(self) -> "SliceSeries":
        if not self.is_exact:
            return self
        return SliceSeries(self.valuation, tuple(c.to_float() for c in self.coeffs))

    def to_exact(self) -> "SliceSeries":
        if self.is_exact:
            return self
        return SliceSeries(self.valuation, tuple(c.to_exact() for c in self.coeffs))

    # -- linear structure ------------------------------------------------

    def __add__(self, other: "SliceSeries") -> "SliceSeries":
        v = min(self.valuation, other.valuation)
        degree = min(self.degree, other.degree)
        exact = self.is_exact and other.is_exact
        out = []
        for n in range(v, degree + 1):
            a = self.coeff(n) if n <= self.degree else _zero_like(exact)
            b = other.coeff(n) if n <= other.degree else _zero_like(exact)
            out.append(a + b)
        return SliceSeries(v, tuple(out))

    def __sub__(self, other: "SliceSeries") -> "SliceSeries":
        return self + (-other)

    def __neg__(self) -> "SliceSeries":
        return SliceSeries(self.valuation, tuple(-c for c in self.coeffs))

    def times(self, c: Quaternion) -> "SliceSeries":
        """Right-multiply every coefficient: f(q) c."""
        return SliceSeries(self.valuation, tuple(a * c for a in self.coeffs))

    def left_times(self, c: Quaternion) -> "SliceSeries":
        """Left-multiply every coefficient: same as (constant c) star f."""
        return SliceSeries(self.valuation, tuple(c * a for a in self.coeffs))

    def scale(self, s) -> "SliceSeries":
        return SliceSeries(self.valuation, tuple(a * s for a in self.coeffs))

    # -- evaluation --------------------------------------------------------

    def eval(self, q: Quaternion) -> Quaternion:
        """Value at q inside the unit ball, by left-nested Horner.

        The nesting q^v (a_v + q (a_{v+1} + ...)) is exact because powers
        of q commute with q itself.
        """
        if float(q.norm_sq()) >= 1.0:
            raise DomainError("evaluation point must lie in the open unit ball")
        if self.valuation < 0 and q.is_zero():
            raise SingularityError("negative-valuation series is singular at 0")
        if not self.is_exact and not q.is_exact:
            return self._eval_float(q)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = q * acc + c
        v = self.valuation
        if v > 0:
            acc = (q ** v) * acc
        elif v < 0:
            acc = (q.inverse() ** (-v)) * acc
        return acc

    def _eval_float(self, q: Quaternion) -> Quaternion:
        qw, qx, qy, qz = q.w, q.x, q.y, q.z
        cs = self.coeffs
        last = cs[-1]
        aw, ax, ay, az = last.w, last.x, last.y, last.z
        for i in range(len(cs) - 2, -1, -1):
            c = cs[i]
            nw = qw * aw - qx * ax - qy * ay - qz * az + c.w
            nx = qw * ax + qx * aw + qy * az - qz * ay + c.x
            ny = qw * ay - qx * az + qy * aw + qz * ax + c.y
            nz = qw * az + qx * ay - qy * ax + qz * aw + c.z
            aw, ax, ay, az = nw, nx, ny, nz
        acc = Quaternion(aw, ax, ay, az)
        v = self.valuation
        if v > 0:
            acc = (q ** v) * acc
        elif v < 0:
            acc = (q.inverse() ** (-v)) * acc
        return acc

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "valuation": self.valuation,
            "degree": self.degree,
            "mode": "exact" if self.is_exact else "float",
            "coeffs": [quaternion_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SliceSeries":
        coeffs = tuple(quaternion_from_json(c) for c in data["coeffs"])
        mode = data.get("mode")
        if mode == "float":
            coeffs = tuple(c.to_float() for c in coeffs)
        elif mode == "exact" and any(not c.is_exact for c in coeffs):
            raise ValueError("exact-mode series carries float coefficients")
        s = cls(int(data["valuation"]), coeffs)
        if "degree" in data and int(data["degree"]) != s.degree:
            raise ValueError("degree field inconsistent with coefficient count")
        return s


# ---------------------------------------------------------------------------
# regular-function calculus
# ---------------------------------------------------------------------------


def slice_derivative(f: SliceSeries) -> SliceSeries:
    """Term rule: q^n a_n maps to q^(n-1) (n a_n); window shrinks by one.

    The n = 0 slot multiplies to zero, so the constant term drops out of
    the normalized result on its own.
    """
    out = tuple(a * n for n, a in f.terms())
    if all(c.is_zero() for c in out):
        return SliceSeries.zero(max(f.degree - 1, 0), f.is_exact)
    return SliceSeries(f.valuation - 1, out)


def star_mul(f: SliceSeries, g: SliceSeries) -> SliceSeries:
    """Regular product: Cauchy convolution c_n = sum a_k b_(n-k), order kept.

    The result window is the largest one fully determined by the two
    operand windows: valuation v_f + v_g, degree
    min(N_f + v_g, N_g + v_f).
    """
    exact = f.is_exact and g.is_exact
    v = f.valuation + g.valuation
    degree = min(f.degree + g.valuation, g.degree + f.valuation)
    if f.is_zero() or g.is_zero():
        return SliceSeries.zero(max(degree, 0), exact)
    length = degree - v + 1
    zero = _zero_like(exact)
    out = [zero] * length
    fa, ga = f.coeffs, g.coeffs
    for i, a in enumerate(fa):
        if a.is_zero():
            continue
        jmax = min(len(ga), length - i)
        for j in range(jmax):
            b = ga[j]
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + a * b
    return SliceSeries(v, tuple(out))


def star_pow(f: SliceSeries, k: int) -> SliceSeries:
    if k < 0:
        raise DomainError("negative star powers go through star_reciprocal")
    result = SliceSeries.one(exact=f.is_exact)
    for _ in range(k):
        result = star_mul(result, f)
    return result


def full_star_mul(f: SliceSeries, g: SliceSeries) -> SliceSeries:
    """Product of two *polynomials*, keeping the full support.

    Pads the operand windows first, which is only sound because a
    polynomial is known entirely.
    """
    target = f.degree + g.degree
    return star_mul(f.pad_to(target - g.valuation), g.pad_to(target - f.valuation))


def regular_conjugate(f: SliceSeries) -> SliceSeries:
    """Coefficient-wise quaternion conjugation."""
    return SliceSeries(f.valuation, tuple(c.conjugate() for c in f.coeffs))


def symmetrize(f: SliceSeries) -> SliceSeries:
    """f star f^c.  Coefficients are real by the pairing a_k conj(a_m) + a_m conj(a_k).

    Computed through the paired-real formula so reality is exact in both
    scalar modes; in exact mode this agrees with star_mul(f, f^c)
    coefficient by coefficient.
    """
    exact = f.is_exact
    if f.is_zero():
        return SliceSeries.zero(max(f.degree + f.valuation, 0), exact)
    cs = f.coeffs
    length = len(cs)  # valid window: t in [0, N - v]
    zero_s: Scalar = Fraction(0) if exact else 0.0
    out = []
    for t in range(length):
        acc = zero_s
        half = t // 2
        for i in range(half + 1):
            j = t - i
            if j >= length:
                continue
            a, b = cs[i], cs[j]
            dot = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z
            acc = acc + (dot if i == j else 2 * dot)
        out.append(Quaternion.from_real(acc))
    return SliceSeries(2 * f.valuation, tuple(out))


def _invert_real_series(values: list[Scalar], exact: bool) -> list[Scalar]:
    """Reciprocal of a scalar power series with s_0 != 0, to the same order."""
    s0 = values[0]
    inv0 = Fraction(1) / s0 if exact else 1.0 / s0
    out = [inv0]
    for n in range(1, len(values)):
        acc: Scalar = Fraction(0) if exact else 0.0
        for k in range(1, min(n, len(values) - 1) + 1):
            acc = acc + values[k] * out[n - k]
        out.append(-inv0 * acc)
    return out


def star_reciprocal(f: SliceSeries) -> SliceSeries:
    """Regular reciprocal: invert the real symmetrization, then star f^c.

    The input's valuation flips sign, so reciprocals of series vanishing
    at 0 come back as Laurent windows.
    """
    if f.is_zero():
        raise DomainError("the zero series has no regular reciprocal")
    fs = symmetrize(f)
    # strip the central q^(2v); the unit part starts with |a_v|^2 > 0
    unit_scalars = [c.w for c in fs.coeffs]
    inverted = _invert_real_series(unit_scalars, fs.is_exact)
    inv_sym = SliceSeries(-2 * f.valuation,
                          tuple(Quaternion.from_real(s) for s in inverted))
    return star_mul(inv_sym, regular_conjugate(f))


@lru_cache(maxsize=128)
def _transform_parts(f: SliceSeries, as_float: bool) -> tuple[SliceSeries, SliceSeries]:
    fc = regular_conjugate(f)
    fs = symmetrize(f.pad_to(2 * f.degree - f.valuation))
    if as_float:
        return fc.to_float(), fs.to_float()
    return fc, fs


def quotient_transform(f: SliceSeries, q: Quaternion,
                       domain: EvalDomain = DEFAULT_DOMAIN) -> Quaternion:
    """The point map f^c(q)^(-1) q f^c(q); preserves |q|.

    Defined away from the zero set of the symmetrization, which is where
    the singular guard sits (the conjugate's zero set is contained in it).
    The window is treated as a polynomial, so the guard sees the full
    symmetrization rather than a truncation that could miss a zero.
    """
    fc, fs = _transform_parts(f.trim(), not q.is_exact)
    s = fs.eval(q)
    if abs(s) < domain.singular_threshold:
        raise SingularityError("point too close to the symmetrization zero set")
    c = fc.eval(q)
    if c.is_zero():
        raise SingularityError("conjugate vanishes at the point")
    return c.inverse() * q * c


def compose_slice_preserving(f: SliceSeries, w: SliceSeries) -> SliceSeries:
    """Substitution f(w(q)) for slice-preserving w with w(0) = 0.

    Legitimate because w's coefficients are real and therefore central:
    powers of w(q) stay slice regular.  The result window is
    min(N_f, N_w).
    """
    for _, c in w.terms():
        if not c.is_real():
            raise DomainError("inner series must have all-real coefficients")
    if w.valuation < 1 and not w.is_zero():
        raise DomainError("inner series must vanish at 0")
    if f.valuation < 0:
        raise DomainError("cannot substitute into a Laurent window")
    exact = f.is_exact and w.is_exact
    degree = min(f.degree, w.degree)
    zero_s: Scalar = Fraction(0) if exact else 0.0
    w_scal: list[Scalar] = [zero_s] * (degree + 1)
    for n, c in w.terms():
        if 0 <= n <= degree:
            w_scal[n] = c.w
    out = [_zero_like(exact) for _ in range(degree + 1)]
    # power[d] = coefficient of q^d in w(q)^n, rebuilt per n
    power: list[Scalar] = [zero_s] * (degree + 1)
    power[0] = Fraction(1) if exact else 1.0
    for n in range(0, degree + 1):
        if f.valuation <= n <= f.degree:
            a = f.coeff(n)
            if not a.is_zero():
                for d in range(degree + 1):
                    if power[d] != 0:
                        out[d] = out[d] + a * power[d]
        if n == degree:
            break
        nxt: list[Scalar] = [zero_s] * (degree + 1)
        for d1 in range(degree + 1):
            p = power[d1]
            if p == 0:
                continue
            for d2 in range(1, degree + 1 - d1):
                s = w_scal[d2]
                if s != 0:
                    nxt[d1 + d2] = nxt[d1 + d2] + p * s
        power = nxt
    return SliceSeries(0, tuple(out))


def integrate_radial(g: SliceSeries) -> SliceSeries:
    """Primitive with f(0) = 0: coefficient g_n / (n+1) lands at power n+1."""
    if g.valuation < 0:
        raise DomainError("cannot integrate a Laurent window term q^-1")
    exact = g.is_exact
    out = []
    for n, c in g.terms():
        factor = Fraction(1, n + 1) if exact else 1.0 / (n + 1)
        out.append(c * factor)
    return SliceSeries(g.valuation + 1, tuple(out))


def odd_part(f: SliceSeries) -> SliceSeries:
    """(f(q) - f(-q)) / 2: keeps the odd-power coefficients."""
    out = tuple(c if n % 2 == 1 else _zero_like(f.is_exact)
                for n, c in f.terms())
    return SliceSeries(f.valuation, out)


def geometric(u: Quaternion, degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """Sigma q^n u^n, the star reciprocal of 1 - q u."""
    coeffs = []
    acc = ONE if u.is_exact else ONE.to_float()
    for _ in range(degree + 1):
        coeffs.append(acc)
        acc = acc * u
    return SliceSeries(0, tuple(coeffs))


def mobius(a: Quaternion, degree: int = DEFAULT_DEGREE) -> SliceSeries:
    """Regular Moebius transform of the unit ball vanishing nowhere inside:

        a - (1 - |a|^2) Sigma_{n>=1} q^n conj(a)^(n-1)

    which is the expansion of (1 - q conj(a))^(-*) star (a - q).
    """
    nsq = a.norm_sq()
    if float(nsq) > 1.0 + 1e-12:
        raise DomainError("moebius parameter must lie in the closed unit ball")
    t = 1 - nsq
    abar = a.conjugate()
    coeffs = [a]
    power = ONE if a.is_exact else ONE.to_float()
    for _ in range(1, degree + 1):
        coeffs.append(power * (-t))
        power = power * abar
    return SliceSeries(0, tuple(coeffs))


def mobius_quotient(a: Quaternion) -> "StarQuotient":
    """The Moebius transform as an exact quotient of linear polynomials."""
    nsq = a.norm_sq()
    if float(nsq) > 1.0 + 1e-12:
        raise DomainError("moebius parameter must lie in the closed unit ball")
    one = ONE if a.is_exact else ONE.to_float()
    return StarQuotient(SliceSeries.from_coeffs([a, -one]),
                        SliceSeries.from_coeffs([one, -a.conjugate()]))


class StarQuotient:
    """Pointwise-exact evaluator for den^(-*) star num with polynomial parts.

    Writing the reciprocal as (den^s)^(-1) den^c, the value at q is

        value(q) = den^s(q)^(-1) (den^c star num)(q)

    because den^s has real coefficients and collapses pointwise.  Both
    den^s and den^c star num are polynomials, so there is no truncation
    error; this is how the built-in extremal functions are evaluated near
    the boundary of the ball.

    Evaluation always runs in exact rational arithmetic (binary floats
    embed exactly), because the expanded symmetrized denominator can be
    as small as (1-|q|)^8 near the boundary and float Horner would cancel
    catastrophically there.  The default guard therefore only fences off
    genuine zeros; pass a stricter :class:`EvalDomain` to refuse a wider
    neighbourhood of the singular set.
    """

    #: anti-zero guard: den^s vanishing only on the boundary sphere can
    #: legitimately reach ~1e-16 at radius 0.99 inside the ball
    ZERO_GUARD = EvalDomain(1e-250)

    def __init__(self, num: SliceSeries, den: SliceSeries):
        if den.is_zero():
            raise DomainError("quotient denominator is identically zero")
        self.num = num
        self.den = den

    @cached_property
    def _den_sym(self) -> SliceSeries:
        d = self.den.to_exact()
        return symmetrize(d.pad_to(2 * d.degree - d.valuation))

    @cached_property
    def _den_conj_num(self) -> SliceSeries:
        return full_star_mul(regular_conjugate(self.den.to_exact()), self.num.to_exact())

    def eval(self, q: Quaternion, domain: EvalDomain | None = None) -> Quaternion:
        domain = domain or self.ZERO_GUARD
        qe = q.to_exact()
        s = self._den_sym.eval(qe)
        if abs(s) < domain.singular_threshold:
            raise SingularityError("quotient evaluated too close to a symmetrization zero")
        value = s.inverse() * self._den_conj_num.eval(qe)
        return value if q.is_exact else value.to_float()

    def to_series(self, degree: int = DEFAULT_DEGREE) -> SliceSeries:
        v = self.den.valuation
        rec = star_reciprocal(self.den.pad_to(degree + 2 * abs(v) + 2))
        num = self.num.pad_to(degree + abs(v) + 2)
        return star_mul(rec, num).truncate(degree)

    def derivative(self) -> "StarQuotient":
        """Quotient rule, valid when the denominator coefficients commute.

        With pairwise commuting coefficients (e.g. polynomials in one q u)
        den' star den^(-*) = den^(-*) star den', giving

            (den^(-*) star num)' = (den star den)^(-*) star (den star num' - den' star num).
        """
        cs = [c for c in self.den.coeffs if not c.is_zero()]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                d = cs[i] * cs[j] - cs[j] * cs[i]
                if float(d.norm_sq()) > 1e-18 * (1.0 + float(cs[i].norm_sq()) * float(cs[j].norm_sq())):
                    raise DomainError("derivative needs pairwise-commuting denominator coefficients")
        new_num = full_star_mul(self.den, slice_derivative(self.num)) - \
            full_star_mul(slice_derivative(self.den), self.num)
        new_den = full_star_mul(self.den, self.den)
        return StarQuotient(new_num, new_den)
