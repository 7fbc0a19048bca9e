"""
Maurer-Cartan calculus and the Chern-Simons three-form
======================================================

Symbolic exterior algebra over a Lie algebra given by structure
constants: the left-invariant differentials, the pairing-built
three-form, exactness decompositions, and the characteristic
polynomial coefficients of small curvature matrices.
"""

from fractions import Fraction

from repvol import (
    ExteriorForm,
    chern_poly_coeffs,
    cs_three_form,
    d,
    exactness_split,
    format_form,
    is_ad_invariant,
    iso_sl2r_algebra,
    iso_sl2r_gram,
    mc_differential,
    sl2c_algebra,
    sl2c_gram,
    validate_jacobi,
)

# ------------------------------------------------------------------
# Structure constants and the Maurer-Cartan differentials
# ------------------------------------------------------------------

spec = iso_sl2r_algebra()
print("basis:", ", ".join(spec.basis))
for i, name in enumerate(spec.basis):
    print(f"d(phi{name}) = {format_form(spec, mc_differential(spec, i))}")
print()

# Jacobi holds by construction here; validate_jacobi returns None when
# every basis triple closes, or the first violated triple otherwise.
assert validate_jacobi(spec) is None
print("Jacobi identity: ok")
print()

# ------------------------------------------------------------------
# An invariant pairing and the three-form it builds
# ------------------------------------------------------------------

gram = iso_sl2r_gram()
assert is_ad_invariant(spec, gram)
cs = cs_three_form(spec, gram)
print("T =", format_form(spec, cs))

# The volume-form part (the phiX^phiY^phiZ coefficient on the sl2
# coordinates) is what integrates to representation volumes; the rest
# is exact.  exactness_split hands back a primitive for that rest.
volume_part = ExteriorForm.monomial(spec.dim, (0, 1, 2), Fraction(2, 3))
primitive = exactness_split(spec, cs, volume_part)
assert primitive is not None
print("T - (2/3) phiX^phiY^phiZ = d(", format_form(spec, primitive), ")")

# The volume form itself admits no primitive.
assert exactness_split(spec, volume_part, ExteriorForm.zero(spec.dim, 3)) is None
print("phiX^phiY^phiZ alone is not exact")
print()

# ------------------------------------------------------------------
# The complex form of the same computation
# ------------------------------------------------------------------

cspec = sl2c_algebra()
ccs = cs_three_form(cspec, sl2c_gram())
print("sl2(C) with the normalized trace pairing: T =", format_form(cspec, ccs))
print()

# ------------------------------------------------------------------
# Characteristic coefficients of curvature matrices
# ------------------------------------------------------------------

# For a traceless 2x2 matrix the second Chern coefficient reduces to
# tr(A^2)/(8 pi^2); for an antisymmetric 3x3 the first Pontrjagin
# coefficient is the negative of the same trace expression.
traceless = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(-1)]]
c1, c2 = chern_poly_coeffs(traceless, kind="chern")
print("chern:       C1 =", c1, " C2 =", c2)

antisym = [
    [Fraction(0), Fraction(1), Fraction(-2)],
    [Fraction(-1), Fraction(0), Fraction(3)],
    [Fraction(2), Fraction(-3), Fraction(0)],
]
(p1,) = chern_poly_coeffs(antisym, kind="pontrjagin")
print("pontrjagin:  P1 =", p1)

# d is a genuine differential: d(d(phi)) vanishes for every generator.
for i in range(spec.dim):
    assert d(spec, mc_differential(spec, i)).is_zero()
print()
print("d o d = 0 on every Maurer-Cartan differential")
