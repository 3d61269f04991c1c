"""Quaternion arithmetic over exact rationals or binary floats.

A quaternion is stored as four components (w, x, y, z) along the basis
1, i, j, k with the Hamilton rules i^2 = j^2 = k^2 = ijk = -1.  Components
are either all `fractions.Fraction` (exact mode) or all `float` (float
mode); a value never mixes the two.  Mixed-mode *operations* promote the
result to float, mirroring Python's own numeric tower.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, QuaternionParseError

Scalar = Union[Fraction, float]


def _coerce(value) -> Scalar:
    """Normalize a raw component to Fraction (exact) or finite float."""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"non-finite float component: {value!r}")
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        raise DomainError("square root of negative rational")
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Quaternion:
    """Immutable quaternion w + x i + y j + z k."""

    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        w, x, y, z = (_coerce(self.w), _coerce(self.x),
                      _coerce(self.y), _coerce(self.z))
        if any(isinstance(c, float) for c in (w, x, y, z)):
            w, x, y, z = float(w), float(x), float(y), float(z)
            for c in (w, x, y, z):
                if not math.isfinite(c):
                    raise DomainError("non-finite float component")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    # -- mode ---------------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return isinstance(self.w, Fraction)

    def to_float(self) -> "Quaternion":
        if not self.is_exact:
            return self
        return Quaternion(float(self.w), float(self.x), float(self.y), float(self.z))

    def to_exact(self) -> "Quaternion":
        """Exact image of a float quaternion (binary floats are rational)."""
        if self.is_exact:
            return self
        return Quaternion(Fraction(self.w), Fraction(self.x),
                          Fraction(self.y), Fraction(self.z))

    # -- structure ----------------------------------------------------------

    @classmethod
    def from_real(cls, s) -> "Quaternion":
        zero = 0.0 if isinstance(s, float) else Fraction(0)
        return cls(s, zero, zero, zero)

    @property
    def re(self) -> Scalar:
        return self.w

    def imag(self) -> "Quaternion":
        zero = 0.0 if not self.is_exact else Fraction(0)
        return Quaternion(zero, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def is_real(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> Scalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b, c, d = self.w, self.x, self.y, self.z
            e, f, g, h = other.w, other.x, other.y, other.z
            return Quaternion(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        s = _coerce(other)
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other):
        # real scalars are central, so left and right scaling agree
        s = _coerce(other)
        return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int) or n < 0:
            raise DomainError("quaternion power requires a nonnegative integer")
        result = ONE if self.is_exact else ONE.to_float()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Quaternion":
        """Multiplicative inverse, conjugate over the squared modulus."""
        n = self.norm_sq()
        if n == 0:
            raise DomainError("zero quaternion has no inverse")
        if self.is_exact:
            inv = Fraction(1) / n
        else:
            inv = 1.0 / n
        return self.conjugate() * inv

    def decompose(self) -> tuple[Scalar, Scalar, "ImaginaryUnit"]:
        """Split q = x + y I with y = |Im q| >= 0.

        For real q the axis is the canonical unit i, so results are
        reproducible.  Exact inputs stay exact whenever |Im q| is rational;
        otherwise the returned pair (y, I) degrades to float mode.
        """
        ix, iy, iz = self.x, self.y, self.z
        nsq = ix * ix + iy * iy + iz * iz
        if nsq == 0:
            zero = Fraction(0) if self.is_exact else 0.0
            one = Fraction(1) if self.is_exact else 1.0
            return self.w, zero, ImaginaryUnit(one, zero, zero)
        if self.is_exact:
            root = exact_sqrt(nsq)
            if root is not None:
                inv = Fraction(1) / root
                return self.w, root, ImaginaryUnit(ix * inv, iy * inv, iz * inv)
            y = math.sqrt(float(nsq))
            return float(self.w), y, ImaginaryUnit(float(ix) / y, float(iy) / y, float(iz) / y)
        y = math.sqrt(nsq)
        return self.w, y, ImaginaryUnit(ix / y, iy / y, iz / y)

    def __str__(self) -> str:
        return format_quaternion(self)


@dataclass(frozen=True)
class ImaginaryUnit:
    """Unit purely imaginary quaternion; satisfies I² = -1.

    Indexes the complex slice spanned by 1 and I inside the quaternions.
    """

    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        x, y, z = _coerce(self.x), _coerce(self.y), _coerce(self.z)
        if any(isinstance(c, float) for c in (x, y, z)):
            x, y, z = float(x), float(y), float(z)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        nsq = x * x + y * y + z * z
        if isinstance(x, Fraction):
            if nsq != 1:
                raise DomainError(f"imaginary unit must have exact unit norm, got |.|^2 = {nsq}")
        elif abs(nsq - 1.0) > 1e-9:
            raise DomainError(f"imaginary unit norm off by {abs(nsq - 1.0):.3e}")

    @classmethod
    def from_vector(cls, x, y, z) -> "ImaginaryUnit":
        """Normalize an arbitrary nonzero imaginary direction (float mode)."""
        n = math.sqrt(float(x) ** 2 + float(y) ** 2 + float(z) ** 2)
        if n == 0.0:
            raise DomainError("cannot normalize the zero direction")
        return cls(float(x) / n, float(y) / n, float(z) / n)

    def as_quaternion(self) -> Quaternion:
        zero = Fraction(0) if isinstance(self.x, Fraction) else 0.0
        return Quaternion(zero, self.x, self.y, self.z)

    def __neg__(self) -> "ImaginaryUnit":
        return ImaginaryUnit(-self.x, -self.y, -self.z)

    def circle_point(self, theta: float, radius: float = 1.0) -> Quaternion:
        """radius * exp(I theta) = r cos(theta) + r sin(theta) I, float mode."""
        c, s = radius * math.cos(theta), radius * math.sin(theta)
        return Quaternion(c, s * float(self.x), s * float(self.y), s * float(self.z))


def inner_product(a: ImaginaryUnit, b: ImaginaryUnit) -> Scalar:
    """<I,J> = -Re(IJ), the Euclidean inner product of the two axes."""
    return a.x * b.x + a.y * b.y + a.z * b.z


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)

UNIT_I = ImaginaryUnit(1, 0, 0)
UNIT_J = ImaginaryUnit(0, 1, 0)
UNIT_K = ImaginaryUnit(0, 0, 1)

_NUMBER = r"(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+/\d+|\d+)"
_TERM_RE = re.compile(rf"([+-]?)({_NUMBER})?([ijk])?")


def _parse_coefficient(text: str, pos: int) -> Scalar:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise QuaternionParseError("zero denominator", pos)
        return Fraction(int(num), int(den))
    if "." in text or "e" in text or "E" in text:
        return float(text)
    return Fraction(int(text))


def parse_quaternion(text: str) -> Quaternion:
    """Parse a literal like ``1/2i``, ``-204/225-96/225k`` or ``0.5+0.25i-0.1k``.

    Rational coefficients (``p/q`` or bare integers) give an exact value;
    any decimal or exponent coefficient switches the whole value to float
    mode.  Each basis direction may appear at most once.
    """
    stripped = text.replace(" ", "")
    if not stripped:
        raise QuaternionParseError("empty literal", 0)
    components: dict[str, Scalar] = {}
    saw_float = False
    pos = 0
    first = True
    while pos < len(stripped):
        m = _TERM_RE.match(stripped, pos)
        if m is None or m.end() == pos:
            raise QuaternionParseError("expected a term", pos)
        sign, coeff, basis = m.groups()
        if coeff is None and basis is None:
            raise QuaternionParseError("expected a coefficient or basis letter", pos)
        if not first and sign == "":
            raise QuaternionParseError("missing sign between terms", pos)
        if coeff is None:
            value: Scalar = Fraction(1)
        else:
            value = _parse_coefficient(coeff, pos)
            saw_float = saw_float or isinstance(value, float)
        if sign == "-":
            value = -value
        key = basis or "1"
        if key in components:
            raise QuaternionParseError(f"duplicate component {key!r}", pos)
        components[key] = value
        pos = m.end()
        first = False
    zero: Scalar = 0.0 if saw_float else Fraction(0)
    q = Quaternion(components.get("1", zero), components.get("i", zero),
                   components.get("j", zero), components.get("k", zero))
    if saw_float:
        return q.to_float()
    return q


def _format_scalar(value: Scalar) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def format_quaternion(q: Quaternion) -> str:
    """Literal form that round-trips through :func:`parse_quaternion`."""
    parts: list[str] = []
    for value, basis in ((q.w, ""), (q.x, "i"), (q.y, "j"), (q.z, "k")):
        if value == 0:
            continue
        if q.is_exact and basis and abs(value) == 1:
            body = basis
        else:
            body = _format_scalar(abs(value)) + basis
        sign = "-" if value < 0 else "+"
        if not parts and sign == "+":
            parts.append(body)
        else:
            parts.append(sign + body)
    if not parts:
        return "0" if q.is_exact else "0.0"
    return "".join(parts)


def quaternion_to_json(q: Quaternion) -> list:
    """Component array [w,x,y,z]; rationals as "p/q" strings, floats as numbers."""
    if q.is_exact:
        return [str(c) for c in (q.w, q.x, q.y, q.z)]
    return [q.w, q.x, q.y, q.z]


def quaternion_from_json(data) -> Quaternion:
    if not isinstance(data, (list, tuple)) or len(data) != 4:
        raise ValueError("quaternion JSON form must be a 4-element array")
    comps = []
    for c in data:
        if isinstance(c, str):
            comps.append(Fraction(c))
        elif isinstance(c, (int, float)):
            comps.append(float(c))
        else:
            raise ValueError(f"bad scalar in quaternion array: {c!r}")
    return Quaternion(*comps)
