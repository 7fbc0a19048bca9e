"""Seifert invariant bookkeeping: notation parsing, Euler number,
orbifold characteristic, geometry classification, fillings, covers."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repvol.seifert import (
    GeometryTag,
    ParseError,
    SeifertInvariants,
    base_cover,
    circle_bundle,
    classify_geometry,
    dehn_fill,
    euler_number,
    fiber_cover,
    format_seifert,
    orbifold_chi,
    parse_seifert,
)


def pair_strategy():
    # lowest-terms pairs (a, b), a >= 1, b != 0 allowed to be anything coprime
    def build(a, b):
        g = math.gcd(a, abs(b))
        return (a // g if g else a, b // g if g else b)

    return (
        st.tuples(st.integers(1, 9), st.integers(-9, 9))
        .map(lambda ab: build(*ab))
        .filter(lambda ab: math.gcd(ab[0], abs(ab[1])) == 1)
    )


invariants = st.builds(
    SeifertInvariants,
    genus=st.integers(0, 4),
    pairs=st.lists(pair_strategy(), max_size=4).map(tuple),
)


# ---------------------------------------------------------------- parsing


def test_parse_worked_example():
    inv = parse_seifert("(1; 1/2, 1/2)")
    assert inv.genus == 1
    assert inv.pairs == ((2, 1), (2, 1))
    assert inv.boundary_count == 0


def test_parse_bare_integer_pair():
    inv = parse_seifert("(2; 1)")
    assert inv.pairs == ((1, 1),)
    assert euler_number(inv) == 1


def test_parse_empty_pair_list():
    inv = parse_seifert("(3;)")
    assert inv.genus == 3
    assert inv.pairs == ()


def test_parse_negative_coefficients_and_whitespace():
    inv = parse_seifert(" ( 0 ; -1/2 , 3/5 , 7 ) ")
    assert inv.genus == 0
    assert sorted(inv.pairs) == [(1, 7), (2, -1), (5, 3)]


def test_parse_rejects_negative_genus():
    with pytest.raises(ParseError, match="non-orientable"):
        parse_seifert("(-1; 1/2)")


def test_parse_rejects_zero_denominator():
    with pytest.raises(ParseError):
        parse_seifert("(1; 1/0)")


def test_parse_rejects_non_lowest_terms():
    with pytest.raises(ParseError, match="lowest terms"):
        parse_seifert("(1; 2/4)")


def test_parse_rejects_negative_multiplicity():
    with pytest.raises(ParseError):
        parse_seifert("(1; 1/-2)")


@pytest.mark.parametrize(
    "bad",
    ["", "1; 1/2", "(1 1/2)", "(1;", "(1; 1/2,)", "(1; 1/2))", "(x; 1/2)", "(1; /2)"],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_seifert(bad)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_seifert("(-1; 1/2)")
    assert info.value.position == 1
    with pytest.raises(ParseError) as info:
        parse_seifert("(1; 2/4)")
    assert info.value.position >= 0
    assert "position" in str(info.value)


def test_format_round_trip_worked_example():
    assert format_seifert(parse_seifert("(1; 1/2, 1/2)")) == "(1; 1/2, 1/2)"
    assert format_seifert(parse_seifert("(3;)")) == "(3;)"


@given(invariants)
def test_format_parse_round_trip(inv):
    assert parse_seifert(format_seifert(inv)) == inv


def test_equality_ignores_pair_order():
    left = SeifertInvariants(genus=1, pairs=((2, 1), (3, -1)))
    right = SeifertInvariants(genus=1, pairs=((3, -1), (2, 1)))
    assert left == right
    assert hash(left) == hash(right)


# ---------------------------------------------------------------- invariants


def test_euler_number_sums_slopes():
    inv = parse_seifert("(1; 1/2, -1/3, 1/6)")
    assert euler_number(inv) == Fraction(1, 2) - Fraction(1, 3) + Fraction(1, 6)


def test_orbifold_chi():
    inv = parse_seifert("(1; 1/2, 1/2)")
    assert orbifold_chi(inv) == Fraction(-1)
    assert orbifold_chi(parse_seifert("(0; 1/2, 1/3, 1/7)")) == (
        2 - (1 - Fraction(1, 2)) - (1 - Fraction(1, 3)) - (1 - Fraction(1, 7))
    )


def test_classify_geometry():
    assert classify_geometry(parse_seifert("(1; 1/2, 1/2)")) is GeometryTag.SL2R_TILDE
    # e = 0: not sl2r-tilde
    assert classify_geometry(parse_seifert("(1; 1/2, -1/2)")) is GeometryTag.OTHER
    # chi = 0: torus base, no exceptional fibers
    assert classify_geometry(parse_seifert("(1; 1)")) is GeometryTag.OTHER


def test_invariants_require_closed():
    inv = SeifertInvariants(genus=1, pairs=(), boundary_count=1)
    with pytest.raises(ValueError, match="closed"):
        euler_number(inv)
    with pytest.raises(ValueError, match="closed"):
        classify_geometry(inv)


# ---------------------------------------------------------------- fillings


def test_dehn_fill_closes_boundary():
    filled = dehn_fill(1, 1, [(2, 1)], existing_pairs=((2, 1),))
    assert filled == parse_seifert("(1; 1/2, 1/2)")
    assert filled.is_closed


def test_dehn_fill_partial():
    partial = dehn_fill(0, 2, [(3, 1)])
    assert partial.boundary_count == 1
    assert partial.pairs == ((3, 1),)


def test_dehn_fill_rejects_excess_and_bad_pairs():
    with pytest.raises(ValueError, match="exceed"):
        dehn_fill(0, 1, [(2, 1), (3, 1)])
    with pytest.raises(ValueError, match="lowest terms"):
        dehn_fill(0, 1, [(4, 2)])
    with pytest.raises(ValueError):
        dehn_fill(0, 1, [(0, 1)])


# ---------------------------------------------------------------- covers


def test_circle_bundle():
    inv = circle_bundle(2, -3)
    assert inv.genus == 2
    assert euler_number(inv) == -3
    assert classify_geometry(inv) is GeometryTag.SL2R_TILDE


def test_fiber_cover_divides_euler_number():
    inv = circle_bundle(2, 6)
    assert euler_number(fiber_cover(inv, 3)) == 2
    assert fiber_cover(inv, 3).genus == 2
    with pytest.raises(ValueError, match="divide"):
        fiber_cover(inv, 4)


def test_fiber_cover_requires_bundle():
    with pytest.raises(ValueError):
        fiber_cover(parse_seifert("(1; 1/2, 1/2)"), 1)


def test_base_cover_scales_genus_and_euler():
    inv = circle_bundle(2, -1)
    cover = base_cover(inv, 5)
    assert cover.genus == 5 * (2 - 1) + 1
    assert euler_number(cover) == -5


@given(st.integers(2, 5), st.integers(1, 6), st.integers(1, 5))
def test_base_cover_multiplies_chi(genus, euler, degree):
    inv = circle_bundle(genus, euler)
    assert orbifold_chi(base_cover(inv, degree)) == degree * orbifold_chi(inv)
