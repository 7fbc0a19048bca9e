"""Tests for the exact scalar tower: gaussian rationals, pi-scalars,
and the volume value types."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repvol.exact import (
    GAUSSIAN_I,
    GAUSSIAN_ONE,
    GAUSSIAN_ZERO,
    PI_ONE,
    PI_ZERO,
    ExactVolume,
    GaussianRational,
    NumericVolume,
    PiScalar,
    rat_ceil,
    rat_floor,
    render_volume,
    volume_sum,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_rat_floor_ceil():
    assert rat_floor(Fraction(7, 2)) == 3
    assert rat_floor(Fraction(-7, 2)) == -4
    assert rat_ceil(Fraction(7, 2)) == 4
    assert rat_ceil(Fraction(-7, 2)) == -3
    assert rat_floor(Fraction(4)) == rat_ceil(Fraction(4)) == 4


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x + (y + z) == (x + y) + z
    assert x + GAUSSIAN_ZERO == x
    assert x * GAUSSIAN_ONE == x


@given(gaussians, gaussians)
def test_gaussian_division_inverts_multiplication(x, y):
    if not y:
        with pytest.raises(ZeroDivisionError):
            x / y
    else:
        assert (x / y) * y == x


def test_gaussian_i_squares_to_minus_one():
    assert GAUSSIAN_I * GAUSSIAN_I == GaussianRational(Fraction(-1))


def test_gaussian_str():
    assert str(GaussianRational(Fraction(1, 2))) == "1/2"
    assert str(GaussianRational(Fraction(0), Fraction(-3))) == "-3i"
    assert str(GaussianRational(Fraction(1), Fraction(2))) == "(1+2i)"
    assert str(GaussianRational(Fraction(1), Fraction(-2))) == "(1-2i)"


def test_pi_scalar_zero_is_canonical():
    # zero carries power 0 no matter how it was made
    z = PiScalar(GAUSSIAN_ZERO, 5)
    assert z == PI_ZERO
    assert z.pi_power == 0
    assert not z


def test_pi_scalar_add_same_power():
    a = PiScalar.of(Fraction(1, 3), pi_power=2)
    b = PiScalar.of(Fraction(2, 3), pi_power=2)
    assert a + b == PiScalar.of(1, pi_power=2)


def test_pi_scalar_add_zero_any_power():
    a = PiScalar.of(Fraction(5), pi_power=-2)
    assert a + PI_ZERO == a
    assert PI_ZERO + a == a


def test_pi_scalar_add_mismatched_powers_raises():
    a = PiScalar.of(1, pi_power=1)
    b = PiScalar.of(1, pi_power=2)
    with pytest.raises(ValueError, match="pi-power mismatch"):
        a + b


def test_pi_scalar_mul_adds_powers():
    a = PiScalar.of(Fraction(3), pi_power=1)
    b = PiScalar.of(Fraction(1, 2), pi_power=-3)
    assert a * b == PiScalar.of(Fraction(3, 2), pi_power=-2)
    assert a / b == PiScalar.of(6, pi_power=4)


def test_pi_scalar_cancellation_to_zero():
    a = PiScalar.of(Fraction(2), pi_power=7)
    assert (a - a) == PI_ZERO
    assert (a - a).pi_power == 0


def test_pi_scalar_str():
    assert str(PI_ZERO) == "0"
    assert str(PI_ONE) == "1"
    assert str(PiScalar.of(1, pi_power=-2)) == "pi^-2"
    assert str(PiScalar.of(Fraction(3, 2), pi_power=-2)) == "3/2*pi^-2"
    assert str(PiScalar.of(2, pi_power=1)) == "2*pi"


@given(st.integers(-5, 5), st.integers(-5, 5), rationals, rationals)
def test_pi_scalar_mul_power_arithmetic(p, q, x, y):
    a = PiScalar.of(x, pi_power=p)
    b = PiScalar.of(y, pi_power=q)
    prod = a * b
    if x and y:
        assert prod.pi_power == p + q
    else:
        assert prod == PI_ZERO


def test_exact_volume_rejects_negative():
    with pytest.raises(ValueError):
        ExactVolume(Fraction(-1, 4))


def test_render_volume_exact():
    assert render_volume(ExactVolume(Fraction(0))) == "0"
    assert render_volume(ExactVolume(Fraction(1, 4))) == "1/4 * 4*pi^2"
    assert render_volume(ExactVolume(Fraction(1))) == "1 * 4*pi^2"


def test_render_volume_decimal_suffix():
    text = render_volume(ExactVolume(Fraction(1)), decimal=True)
    assert text.startswith("1 * 4*pi^2 = ")
    assert abs(float(text.split("= ")[1]) - 39.4784176043574) < 1e-9


def test_render_volume_numeric():
    assert render_volume(NumericVolume(2.029883212819)) == "2.02988321282"


def test_volume_sum_stays_exact():
    total = volume_sum([ExactVolume(Fraction(1, 4)), ExactVolume(Fraction(1))])
    assert total == ExactVolume(Fraction(5, 4))


def test_volume_sum_mixes_to_numeric():
    total = volume_sum([ExactVolume(Fraction(1)), NumericVolume(1.0)])
    assert isinstance(total, NumericVolume)
    assert abs(total.value - (39.4784176043574 + 1.0)) < 1e-9


def test_volume_sum_empty_is_exact_zero():
    assert volume_sum([]) == ExactVolume(Fraction(0))
