"""
Covering-space arithmetic at the gluing tori
============================================

The counting problems that come up when graph-manifold pieces are
covered and the covers must be matched along the shared tori:
elevation counts of curves, intersection numbers upstairs, merging
covers of different degrees, and the colored variant where each side
prescribes its own corridor lengths.
"""

from repvol import (
    TorusCoverDatum,
    base_cover,
    circle_bundle,
    colored_merge_counts,
    cover_intersection,
    elevation_count,
    euler_number,
    fiber_cover,
    merge_copy_counts,
    orbifold_chi,
)

# ------------------------------------------------------------------
# Elevations of a curve to a torus cover
# ------------------------------------------------------------------

# A degree-d cover of the torus splits a curve with a degree-c cover
# into d/c elevations; c must divide d.
print("elevations (torus 6, curve 2):", elevation_count(TorusCoverDatum(6, 2)))
print("elevations (torus 6, curve 3):", elevation_count(TorusCoverDatum(6, 3)))
try:
    elevation_count(TorusCoverDatum(6, 4))
except ValueError as exc:
    print("torus 6, curve 4 ->", exc)
print()

# ------------------------------------------------------------------
# Intersection numbers upstairs
# ------------------------------------------------------------------

# Curves meeting i times downstairs meet i * df * ds / dT times in a
# degree-dT torus cover, where df and ds are the curve-cover degrees.
print("intersections (1, 2, 3, 6):", cover_intersection(1, 2, 3, 6))
print("intersections (2, 2, 2, 4):", cover_intersection(2, 2, 2, 4))
try:
    cover_intersection(1, 2, 2, 8)
except ValueError as exc:
    print("intersections (1, 2, 2, 8) ->", exc)
print()

# ------------------------------------------------------------------
# Merging covers of mixed degrees
# ------------------------------------------------------------------

# Pieces covered with degrees d_i merge into a common degree-D cover,
# D = lcm(d_i), by taking D/d_i copies of each; a boundary torus whose
# elevations have degree m (m | d_i) contributes D/m elevations.
counts = merge_copy_counts(degrees=[2, 3], m=1)
print("merge degrees [2, 3], m = 1:")
print("  common degree:", counts.common_degree)
print("  copies:       ", counts.copies)
print("  per torus:    ", counts.per_torus_elevations)
print()

# The colored variant glues corridor pieces to both signs of a central
# piece: corridor i meets the central piece in k_i curves and carries
# multiplicity l_i.  Taking K = lcm(k_i) central copies per sign and
# l_i * K / k_i copies of corridor i makes every corridor boundary
# expose exactly l_i * K elevations -- the count the central side
# offers it.
colored = colored_merge_counts(k=[2, 3], l=[1, 2])
print("colored merge k = [2, 3], l = [1, 2]:")
print("  central copies per sign:", colored.central_positive)
print("  corridor copies:        ", colored.corridor_copies)
print("  matched elevations:     ", colored.matched_elevations)
print()

# ------------------------------------------------------------------
# Covers of circle bundles
# ------------------------------------------------------------------

# Unwrapping the fiber divides the euler number; covering the base
# multiplies it and scales chi, so the volume bound chi^2/|e| scales by
# the degree in both directions.
bundle = circle_bundle(genus=2, euler=-3)
print("bundle:", bundle, " e =", euler_number(bundle), " chi =", orbifold_chi(bundle))
along_fiber = fiber_cover(bundle, 3)
print("fiber cover x3:", along_fiber, " e =", euler_number(along_fiber))
along_base = base_cover(bundle, 4)
print("base cover x4: ", along_base, " e =", euler_number(along_base),
      " chi =", orbifold_chi(along_base))
