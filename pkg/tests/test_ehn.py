"""Volume spectra: foliation criterion, canonical enumeration versus the
brute-force window oracle, maxima, and witnesses."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repvol.ehn import (
    VolumeWitness,
    foliation_exists,
    seifert_volume_max,
    volume_set,
    volume_set_bruteforce,
    witnesses_for,
)
from repvol.seifert import (
    SeifertInvariants,
    euler_number,
    orbifold_chi,
    parse_seifert,
)


def sl2r_invariants(max_genus=2, max_fibers=3, max_a=4):
    """Strategy for closed invariants carrying the relevant geometry."""

    def pair(a_b):
        a, b = a_b
        return math.gcd(a, abs(b)) == 1

    pairs = st.tuples(st.integers(2, max_a), st.integers(-max_a, max_a)).filter(pair)
    return (
        st.builds(
            SeifertInvariants,
            genus=st.integers(1, max_genus),
            pairs=st.lists(pairs, max_size=max_fibers).map(tuple),
        )
        .filter(lambda inv: euler_number(inv) != 0)
        .filter(lambda inv: orbifold_chi(inv) < 0)
    )


# ---------------------------------------------------------------- foliation


def test_foliation_exists_worked_cases():
    # genus 1, integer slopes: needs floor sum <= 0 <= ceil sum
    assert foliation_exists(1, [Fraction(1, 2), Fraction(-1, 2)])
    assert foliation_exists(1, [Fraction(1, 2), Fraction(1, 2)])
    assert not foliation_exists(1, [Fraction(3), Fraction(1, 2)])
    assert foliation_exists(2, [Fraction(3), Fraction(-3)])


def test_foliation_requires_positive_genus():
    with pytest.raises(ValueError):
        foliation_exists(0, [Fraction(1, 2)])


@given(
    st.integers(1, 3),
    st.lists(
        st.fractions(min_value=-6, max_value=6, max_denominator=6), max_size=4
    ),
)
def test_foliation_monotone_in_genus_and_order_free(genus, slopes):
    # both inequalities only loosen as the genus grows
    if foliation_exists(genus, slopes):
        assert foliation_exists(genus + 1, slopes)
    assert foliation_exists(genus, list(reversed(slopes))) == foliation_exists(
        genus, slopes
    )


# ---------------------------------------------------------------- spectra


def test_volume_set_worked_example():
    inv = parse_seifert("(1; 1/2, 1/2)")
    assert volume_set(inv) == [Fraction(0), Fraction(1, 4), Fraction(1)]


def test_volume_set_genus_two_bundle():
    inv = parse_seifert("(2; 1)")
    assert volume_set(inv) == [Fraction(0), Fraction(1), Fraction(4)]


def test_volume_set_rejects_other_geometry():
    with pytest.raises(ValueError, match="sl2r-tilde"):
        volume_set(parse_seifert("(1; 1/2, -1/2)"))  # e = 0
    with pytest.raises(ValueError, match="sl2r-tilde"):
        volume_set(parse_seifert("(0; 1/2, 1/2, 1/2)"))  # chi = 1/2 > 0


def test_bruteforce_matches_worked_example():
    inv = parse_seifert("(1; 1/2, 1/2)")
    assert volume_set_bruteforce(inv) == [Fraction(0), Fraction(1, 4), Fraction(1)]


@settings(max_examples=25, deadline=None)
@given(sl2r_invariants())
def test_canonical_equals_bruteforce(inv):
    assert volume_set(inv) == volume_set_bruteforce(inv)


@settings(max_examples=40, deadline=None)
@given(sl2r_invariants(max_genus=3, max_fibers=4, max_a=6))
def test_maximum_closed_form(inv):
    chi = orbifold_chi(inv)
    expected = chi * chi / abs(euler_number(inv))
    assert seifert_volume_max(inv) == expected
    assert volume_set(inv)[-1] == expected


def test_zero_always_in_spectrum():
    # residues all zero with m = 0 always satisfies the constraints
    for text in ("(1; 1/2, 1/2)", "(2; 1)", "(1; 1/3, 1/3, -2/5)"):
        assert Fraction(0) in volume_set(parse_seifert(text))


# ---------------------------------------------------------------- witnesses


def test_witness_worked_example():
    inv = parse_seifert("(2; 1)")
    found = witnesses_for(inv, Fraction(4))
    assert [(w.n_values, w.n, w.zeta, w.z_values) for w in found] == [
        ((0,), -2, Fraction(2), (Fraction(-2),)),
        ((0,), 2, Fraction(-2), (Fraction(2),)),
    ]


def test_witnesses_cover_every_coefficient():
    inv = parse_seifert("(1; 1/2, 1/2)")
    for coeff in volume_set(inv):
        found = witnesses_for(inv, coeff)
        assert found
        for w in found:
            assert w.coeff == coeff


def test_witnesses_reject_missing_coefficient():
    inv = parse_seifert("(1; 1/2, 1/2)")
    with pytest.raises(ValueError, match="not in the volume spectrum"):
        witnesses_for(inv, Fraction(1, 3))


def test_witness_validation_rejects_corrupt_data():
    inv = parse_seifert("(2; 1)")
    good = witnesses_for(inv, Fraction(4))[0]
    with pytest.raises(ValueError, match="zeta"):
        VolumeWitness(
            inv=inv,
            n_values=good.n_values,
            n=good.n,
            zeta=good.zeta + 1,
            z_values=good.z_values,
            coeff=good.coeff,
        )
    with pytest.raises(ValueError, match="floor inequality"):
        VolumeWitness(
            inv=inv,
            n_values=(7,),
            n=0,
            zeta=Fraction(7),
            z_values=(Fraction(0),),
            coeff=Fraction(49),
        )


@settings(max_examples=15, deadline=None)
@given(sl2r_invariants(max_genus=2, max_fibers=2, max_a=3))
def test_every_spectrum_value_has_a_witness(inv):
    spectrum = volume_set(inv)
    rng = random.Random(0)
    for coeff in rng.sample(spectrum, min(3, len(spectrum))):
        for w in witnesses_for(inv, coeff):
            assert w.coeff == coeff  # __post_init__ re-validated everything
