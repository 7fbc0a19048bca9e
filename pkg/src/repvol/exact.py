"""Exact scalar types shared by every other module.

Rational arithmetic is stdlib ``fractions.Fraction`` (already normalized,
positive denominator, arbitrary precision).  On top of that this module
provides Gaussian rationals, rational multiples of integer powers of pi,
and the tagged volume values produced by the enumeration code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Rational",
    "RationalLike",
    "GaussianRational",
    "PiScalar",
    "ExactVolume",
    "NumericVolume",
    "VolumeValue",
    "rat_floor",
    "rat_ceil",
    "volume_sum",
    "render_volume",
    "FOUR_PI_SQUARED",
]

Rational = Fraction
RationalLike = Union[int, Fraction]

FOUR_PI_SQUARED = 4.0 * math.pi * math.pi


def rat_floor(x: RationalLike) -> int:
    """Largest integer <= x."""
    return math.floor(Fraction(x))


def rat_ceil(x: RationalLike) -> int:
    """Smallest integer >= x."""
    return math.ceil(Fraction(x))


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(value: "GaussianLike") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: "GaussianLike") -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: "GaussianLike") -> "GaussianRational":
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: "GaussianLike") -> "GaussianRational":
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other: "GaussianLike") -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other: "GaussianLike") -> "GaussianRational":
        o = GaussianRational.of(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: "GaussianLike") -> "GaussianRational":
        return GaussianRational.of(other) / self

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


GaussianLike = Union[int, Fraction, GaussianRational]

GAUSSIAN_ZERO = GaussianRational()
GAUSSIAN_ONE = GaussianRational(Fraction(1))
GAUSSIAN_I = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class PiScalar:
    """A gaussian-rational coefficient times an integer power of pi.

    Zero is canonical: its pi power is normalized to 0 so equality and
    hashing behave.  Adding two nonzero scalars with different pi powers
    is refused rather than silently coerced; zero acts as the additive
    identity for any power.
    """

    coeff: GaussianRational = GAUSSIAN_ZERO
    pi_power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", GaussianRational.of(self.coeff))
        if not self.coeff:
            object.__setattr__(self, "pi_power", 0)

    @staticmethod
    def of(value: "PiLike", pi_power: int = 0) -> "PiScalar":
        if isinstance(value, PiScalar):
            if pi_power:
                raise ValueError("cannot re-tag an existing PiScalar with a power")
            return value
        return PiScalar(GaussianRational.of(value), pi_power)

    def __bool__(self) -> bool:
        return bool(self.coeff)

    def __add__(self, other: "PiLike") -> "PiScalar":
        o = PiScalar.of(other)
        if not self:
            return o
        if not o:
            return self
        if self.pi_power != o.pi_power:
            raise ValueError(
                f"pi-power mismatch in addition: {self.pi_power} vs {o.pi_power}"
            )
        return PiScalar(self.coeff + o.coeff, self.pi_power)

    __radd__ = __add__

    def __neg__(self) -> "PiScalar":
        return PiScalar(-self.coeff, self.pi_power)

    def __sub__(self, other: "PiLike") -> "PiScalar":
        return self + (-PiScalar.of(other))

    def __rsub__(self, other: "PiLike") -> "PiScalar":
        return PiScalar.of(other) + (-self)

    def __mul__(self, other: "PiLike") -> "PiScalar":
        o = PiScalar.of(other)
        return PiScalar(self.coeff * o.coeff, self.pi_power + o.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other: "PiLike") -> "PiScalar":
        o = PiScalar.of(other)
        if not o:
            raise ZeroDivisionError("division by zero PiScalar")
        return PiScalar(self.coeff / o.coeff, self.pi_power - o.pi_power)

    def __str__(self) -> str:
        if self.pi_power == 0:
            return str(self.coeff)
        power = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
        if self.coeff == GAUSSIAN_ONE:
            return power
        return f"{self.coeff}*{power}"


PiLike = Union[int, Fraction, GaussianRational, PiScalar]

PI_ZERO = PiScalar()
PI_ONE = PiScalar(GAUSSIAN_ONE)


@dataclass(frozen=True)
class ExactVolume:
    """A volume known exactly as a nonnegative rational multiple of 4*pi^2."""

    coeff: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff < 0:
            raise ValueError(f"exact volume coefficient must be >= 0, got {self.coeff}")

    def to_float(self) -> float:
        return float(self.coeff) * FOUR_PI_SQUARED


@dataclass(frozen=True)
class NumericVolume:
    """A volume known only as a float (e.g. hyperbolic pieces)."""

    value: float

    def to_float(self) -> float:
        return self.value


VolumeValue = Union[ExactVolume, NumericVolume]


def volume_sum(values: Iterable[VolumeValue]) -> VolumeValue:
    """Sum volume values, staying exact when every summand is exact."""
    exact = Fraction(0)
    numeric = 0.0
    saw_numeric = False
    for v in values:
        if isinstance(v, ExactVolume):
            exact += v.coeff
        elif isinstance(v, NumericVolume):
            numeric += v.value
            saw_numeric = True
        else:
            raise TypeError(f"not a volume value: {v!r}")
    if saw_numeric:
        return NumericVolume(float(exact) * FOUR_PI_SQUARED + numeric)
    return ExactVolume(exact)


def render_volume(value: VolumeValue, decimal: bool = False) -> str:
    """Render a volume: exact ones as ``p/q * 4*pi^2``, numeric ones with
    12 significant digits.  ``decimal`` appends the float to exact values."""
    if isinstance(value, ExactVolume):
        if value.coeff == 0:
            return "0"
        text = f"{value.coeff} * 4*pi^2"
        if decimal:
            text += f" = {value.to_float():.12g}"
        return text
    if isinstance(value, NumericVolume):
        return f"{value.value:.12g}"
    raise TypeError(f"not a volume value: {value!r}")
