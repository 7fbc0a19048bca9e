"""Volume spectra of closed Seifert spaces with sl2r-tilde geometry.

A transversely projective horizontal foliation exists for the data
(g; n_1/a_1, ..., n_p/a_p, n) exactly when

    sum(floor(n_i / a_i)) - n <= 2g - 2   and
    sum(ceil(n_i / a_i))  - n >= 2 - 2g,

and every representation volume of the fibration equals

    (sum(n_i / a_i) - n)^2 / |e|

in units of 4*pi^2 for some such tuple.  Shifting any n_i by a_i while
shifting n by 1 changes neither the constraints nor the value, so the
whole spectrum is already produced by the residues 0 <= r_i < a_i
together with a bounded offset m; that finite enumeration is what
``volume_set`` runs.  ``volume_set_bruteforce`` checks the same
constraints over a plain integer window and exists only to cross-check
the reduction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import rat_ceil, rat_floor
from .seifert import (
    GeometryTag,
    SeifertInvariants,
    classify_geometry,
    euler_number,
    orbifold_chi,
)

__all__ = [
    "VolumeWitness",
    "foliation_exists",
    "volume_set",
    "volume_set_bruteforce",
    "seifert_volume_max",
    "witnesses_for",
]


def foliation_exists(genus: int, slopes: Sequence[Fraction]) -> bool:
    """Horizontal-foliation test for a closed fibration over genus >= 1."""
    if genus < 1:
        raise ValueError("foliation criterion requires base genus >= 1")
    floor_sum = sum(rat_floor(s) for s in slopes)
    ceil_sum = sum(rat_ceil(s) for s in slopes)
    return floor_sum <= 2 * genus - 2 and ceil_sum >= 2 - 2 * genus


def _require_volume_input(inv: SeifertInvariants) -> None:
    if classify_geometry(inv) is not GeometryTag.SL2R_TILDE:
        raise ValueError(
            f"volume spectrum needs sl2r-tilde geometry "
            f"(e = {euler_number(inv)}, chi = {orbifold_chi(inv)})"
        )
    if inv.genus < 1:
        raise ValueError("volume spectrum requires base genus >= 1")


def _canonical_tuples(inv: SeifertInvariants) -> Iterable[tuple[tuple[int, ...], int, Fraction]]:
    """Yield (residues, m, value) over the canonical enumeration.

    With n_i = r_i and n = m the constraints collapse to
    2 - 2g <= m <= 2g - 2 + #{i : r_i > 0}.
    """
    g = inv.genus
    a_list = [a for a, _ in inv.pairs]
    lcm = math.lcm(*a_list) if a_list else 1
    e = euler_number(inv)
    # value = (s/lcm - m)^2 / |e| with integer s; build each Fraction once.
    denom = lcm * lcm * abs(e.numerator)
    scale = e.denominator
    weights = [lcm // a for a in a_list]
    for residues in itertools.product(*(range(a) for a in a_list)):
        s = sum(r * w for r, w in zip(residues, weights))
        positive = sum(1 for r in residues if r > 0)
        for m in range(2 - 2 * g, 2 * g - 2 + positive + 1):
            t = s - m * lcm
            yield residues, m, Fraction(t * t * scale, denom)


def volume_set(inv: SeifertInvariants) -> list[Fraction]:
    """All volume coefficients (units of 4*pi^2), ascending and exact."""
    _require_volume_input(inv)
    return sorted({value for _, _, value in _canonical_tuples(inv)})


def volume_set_bruteforce(inv: SeifertInvariants, bound: int | None = None) -> list[Fraction]:
    """Same spectrum from the defining constraints over a finite window.

    Every tuple (n_1, ..., n_p, n) with all entries in [-B, B] is tested
    against the two inequalities directly; B defaults to 2 + 2g + sum(a_i),
    which is wide enough to contain every canonical representative.  This
    path deliberately shares no code with ``volume_set``.
    """
    _require_volume_input(inv)
    g = inv.genus
    a_list = [a for a, _ in inv.pairs]
    if bound is None:
        bound = 2 + 2 * g + sum(a_list)
    lcm = math.lcm(*a_list) if a_list else 1
    e = euler_number(inv)
    denom = lcm * lcm * abs(e.numerator)
    scale = e.denominator
    window = range(-bound, bound + 1)
    # Per coordinate: (floor(v/a), ceil(v/a), v scaled to the common denominator).
    tables = [
        [(v // a, -((-v) // a), v * (lcm // a)) for v in window]
        for a in a_list
    ]
    values: set[Fraction] = set()
    hi_shift = 2 * g - 2
    for combo in itertools.product(*tables):
        floor_sum = 0
        ceil_sum = 0
        s = 0
        for f, c, sv in combo:
            floor_sum += f
            ceil_sum += c
            s += sv
        n_lo = max(floor_sum - hi_shift, -bound)
        n_hi = min(ceil_sum + hi_shift, bound)
        for n in range(n_lo, n_hi + 1):
            t = s - n * lcm
            values.add(Fraction(t * t * scale, denom))
    return sorted(values)


def seifert_volume_max(inv: SeifertInvariants) -> Fraction:
    """Largest coefficient; must agree with chi^2/|e| or something is wrong."""
    spectrum = volume_set(inv)
    enumerated = spectrum[-1]
    chi = orbifold_chi(inv)
    closed_form = chi * chi / abs(euler_number(inv))
    if enumerated != closed_form:
        raise RuntimeError(
            f"volume maximum mismatch: enumeration gives {enumerated}, "
            f"closed form gives {closed_form}"
        )
    return enumerated


@dataclass(frozen=True)
class VolumeWitness:
    """Foliation data certifying one volume coefficient.

    ``n_values``/``n`` satisfy the two defining inequalities, ``zeta`` is
    the common translation length (sum(n_i/a_i) - n) / e, and each
    ``z_values[i]`` equals n_i/a_i - (b_i/a_i) * zeta.
    """

    inv: SeifertInvariants
    n_values: tuple[int, ...]
    n: int
    zeta: Fraction
    z_values: tuple[Fraction, ...]
    coeff: Fraction

    def __post_init__(self) -> None:
        inv = self.inv
        if len(self.n_values) != len(inv.pairs):
            raise ValueError("witness length does not match exceptional data")
        slopes = [Fraction(ni, a) for ni, (a, _) in zip(self.n_values, inv.pairs)]
        g = inv.genus
        if sum(rat_floor(s) for s in slopes) - self.n > 2 * g - 2:
            raise ValueError("witness violates the floor inequality")
        if sum(rat_ceil(s) for s in slopes) - self.n < 2 - 2 * g:
            raise ValueError("witness violates the ceiling inequality")
        e = euler_number(inv)
        total = sum(slopes, Fraction(0)) - self.n
        if self.zeta != total / e:
            raise ValueError("witness zeta does not match its data")
        expected_z = tuple(
            s - Fraction(b, a) * self.zeta for s, (a, b) in zip(slopes, inv.pairs)
        )
        if tuple(self.z_values) != expected_z:
            raise ValueError("witness z-values do not match its data")
        if self.coeff != total * total / abs(e):
            raise ValueError("witness coefficient does not match its data")


def witnesses_for(inv: SeifertInvariants, coeff: Fraction) -> list[VolumeWitness]:
    """All canonical tuples attaining ``coeff``, as full witnesses."""
    _require_volume_input(inv)
    coeff = Fraction(coeff)
    e = euler_number(inv)
    found = []
    for residues, m, value in _canonical_tuples(inv):
        if value != coeff:
            continue
        slopes = [Fraction(r, a) for r, (a, _) in zip(residues, inv.pairs)]
        total = sum(slopes, Fraction(0)) - m
        zeta = total / e
        z_values = tuple(
            s - Fraction(b, a) * zeta for s, (a, b) in zip(slopes, inv.pairs)
        )
        found.append(
            VolumeWitness(
                inv=inv,
                n_values=tuple(residues),
                n=m,
                zeta=zeta,
                z_values=z_values,
                coeff=value,
            )
        )
    if not found:
        raise ValueError(f"coefficient {coeff} is not in the volume spectrum")
    found.sort(key=lambda w: (w.n, w.n_values))
    return found
