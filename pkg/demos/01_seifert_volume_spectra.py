"""
Seifert invariants and representation-volume spectra
====================================================

A walk through the core pipeline: parse a Seifert symbol, read off the
classical invariants, decide which geometry it carries, and enumerate
the exact set of volume coefficients together with the integer data
that realizes each one.
"""

from fractions import Fraction

from repvol import (
    ExactVolume,
    classify_geometry,
    euler_number,
    foliation_exists,
    orbifold_chi,
    parse_seifert,
    render_volume,
    seifert_volume_max,
    volume_set,
    volume_set_bruteforce,
    witnesses_for,
)

# ------------------------------------------------------------------
# Parsing and classical invariants
# ------------------------------------------------------------------

# Symbols are written (g; b1/a1, ..., bk/ak): base genus first, then one
# slope per exceptional fiber.  Integer entries are allowed and act as
# a_i = 1 fibers.
inv = parse_seifert("(1; 1/2, 1/2)")
print("invariants:", inv)
print("euler number e =", euler_number(inv))
print("orbifold chi   =", orbifold_chi(inv))
print("geometry       =", classify_geometry(inv).name)
print()

# ------------------------------------------------------------------
# Taut foliations from boundary slopes
# ------------------------------------------------------------------

# For a genus-g surface with prescribed rational boundary slopes, the
# realization test is a lattice-point condition on the slope sum.
for slopes in ([Fraction(1, 2), Fraction(1, 3)], [Fraction(5, 2)]):
    ok = foliation_exists(1, slopes)
    print(f"genus 1, slopes {slopes}: foliation exists -> {ok}")
print()

# ------------------------------------------------------------------
# The volume spectrum
# ------------------------------------------------------------------

# Every coefficient has the shape t^2 / |e| with t a rational combination
# of the fiber data; volume_set enumerates the admissible combinations
# exactly, as Fractions in units of 4*pi^2.
spectrum = volume_set(inv)
print(f"spectrum of {inv} ({len(spectrum)} values):")
for coeff in spectrum:
    print("  ", render_volume(ExactVolume(coeff), decimal=True))
print()

# A completely independent enumeration over a brute-force window must
# agree; this is the oracle the test suite leans on.
assert spectrum == volume_set_bruteforce(inv)
print("brute-force enumeration agrees")

# The top of the spectrum also has a closed form, chi_orb^2 / |e|.
maximum = seifert_volume_max(inv)
expected = orbifold_chi(inv) ** 2 / abs(euler_number(inv))
assert maximum == expected
print("maximum coefficient:", maximum, "=", "chi^2/|e| =", expected)
print()

# ------------------------------------------------------------------
# Witnesses
# ------------------------------------------------------------------

# Each nonzero coefficient is realized by integer tuples (n_1..n_k, n);
# witnesses_for reconstructs them together with the translation number
# zeta and the per-fiber shifts z_i.
for coeff in spectrum[1:]:
    for w in witnesses_for(inv, coeff):
        z = ",".join(str(v) for v in w.z_values)
        print(
            f"coefficient {w.coeff}: n_values={w.n_values} n={w.n} "
            f"zeta={w.zeta} z=({z})"
        )

# A larger hyperbolic-base example, spectrum trimmed to its extremes.
big = parse_seifert("(2; 1/2, -1/3, 1/7)")
big_spectrum = volume_set(big)
print()
print(f"{big}: {len(big_spectrum)} coefficients, "
      f"max {seifert_volume_max(big)} = chi^2/|e|")
