"""Structure-constant Lie algebras, invariant forms, and the left-invariant
Chern-Simons 3-form of the Maurer-Cartan connection.

Conventions, fixed once and covered by golden-value tests:

* Basis k-forms are indexed by strictly increasing tuples and evaluate to 1
  on their own index tuple (determinant convention, no factorial factors).
* The structure equation reads  d(phi^i) = - sum_{j<k} c^i_jk phi^j^phi^k,
  where [X_j, X_k] = sum_i c^i_jk X_i.
* In the pairing f(alpha ^ beta) of Lie-algebra-valued forms the sum over
  shuffles is averaged (divided by the number of shuffles), while the
  graded bracket [omega, omega] is the plain shuffle sum.  With that,
  T_f(omega) = f(d omega ^ omega) + (1/3) f(omega ^ [omega, omega]) of the
  Maurer-Cartan form decomposes as (2/3) * (volume form) + (exact form)
  for the unit-tangent-bundle geometry, the classical normalization.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from . import linalg
from .exact import (
    GAUSSIAN_ZERO,
    GaussianRational,
    PI_ZERO,
    PiScalar,
)

__all__ = [
    "LieAlgebraSpec",
    "JacobiViolation",
    "GramForm",
    "ExteriorForm",
    "validate_jacobi",
    "is_ad_invariant",
    "mc_differential",
    "bracket_two_form",
    "d",
    "cs_three_form",
    "exactness_split",
    "chern_poly_coeffs",
    "format_form",
    "iso_sl2r_algebra",
    "iso_sl2r_gram",
    "sl2c_algebra",
    "sl2c_gram",
    "algebra_from_json",
]

ScalarLike = Union[int, Fraction, GaussianRational, PiScalar]


def _scalar(x: ScalarLike) -> PiScalar:
    return PiScalar.of(x)


class JacobiViolation(ValueError):
    """Raised or reported when a bracket table fails the Jacobi identity."""

    def __init__(self, triple: tuple[str, str, str], residual: tuple[PiScalar, ...]):
        self.triple = triple
        self.residual = residual
        super().__init__(f"Jacobi identity fails on {triple}")


@dataclass(frozen=True)
class LieAlgebraSpec:
    """Finite-dimensional Lie algebra given by its structure constants.

    ``brackets`` maps an index pair (j, k) with j < k to the coordinate
    vector of [X_j, X_k]; missing pairs are zero brackets.  Coefficients
    must be pi-free scalars.  The Jacobi identity is checked on
    construction unless ``check_jacobi=False`` (used when loading
    untrusted tables that a caller wants to diagnose).
    """

    basis: tuple[str, ...]
    brackets: tuple[tuple[tuple[int, int], tuple[PiScalar, ...]], ...]
    check_jacobi: bool = True

    def __post_init__(self) -> None:
        names = tuple(self.basis)
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        object.__setattr__(self, "basis", names)
        dim = len(names)
        table: dict[tuple[int, int], tuple[PiScalar, ...]] = {}
        for (j, k), vec in self.brackets:
            if not (0 <= j < k < dim):
                raise ValueError(f"bracket pair ({j}, {k}) out of range or unordered")
            if (j, k) in table:
                raise ValueError(f"duplicate bracket entry for ({j}, {k})")
            if len(vec) != dim:
                raise ValueError(f"bracket vector for ({j}, {k}) has wrong length")
            coeffs = tuple(_scalar(c) for c in vec)
            for c in coeffs:
                if c and c.pi_power != 0:
                    raise ValueError("structure constants must be pi-free")
            if any(coeffs):
                table[(j, k)] = coeffs
        object.__setattr__(
            self, "brackets", tuple(sorted(table.items()))
        )
        if self.check_jacobi:
            violation = validate_jacobi(self)
            if violation is not None:
                raise violation

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, j: int, k: int) -> tuple[PiScalar, ...]:
        """Coordinates of [X_j, X_k] for any index order."""
        if j == k:
            return (PI_ZERO,) * self.dim
        lookup = dict(self.brackets)
        if j < k:
            return lookup.get((j, k), (PI_ZERO,) * self.dim)
        vec = lookup.get((k, j), (PI_ZERO,) * self.dim)
        return tuple(-c for c in vec)

    def bracket_vectors(self, v: Sequence[PiScalar], w: Sequence[PiScalar]) -> tuple[PiScalar, ...]:
        """[v, w] for arbitrary coordinate vectors."""
        out = [PI_ZERO] * self.dim
        for j, cj in enumerate(v):
            if not cj:
                continue
            for k, ck in enumerate(w):
                if not ck:
                    continue
                for i, c in enumerate(self.bracket(j, k)):
                    if c:
                        out[i] = out[i] + cj * ck * c
        return tuple(out)

    def index_of(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise ValueError(f"unknown basis element {name!r}") from None


def _basis_vector(dim: int, i: int) -> tuple[PiScalar, ...]:
    return tuple(PiScalar.of(1) if j == i else PI_ZERO for j in range(dim))


def validate_jacobi(spec: LieAlgebraSpec) -> Optional[JacobiViolation]:
    """None when the Jacobi identity holds; otherwise the first violation."""
    n = spec.dim
    for a, b, c in itertools.combinations(range(n), 3):
        va, vb, vc = (_basis_vector(n, i) for i in (a, b, c))
        res = [PI_ZERO] * n
        for left, right, outer in ((va, vb, vc), (vb, vc, va), (vc, va, vb)):
            inner = spec.bracket_vectors(left, right)
            term = spec.bracket_vectors(inner, outer)
            res = [x + y for x, y in zip(res, term)]
        if any(res):
            names = (spec.basis[a], spec.basis[b], spec.basis[c])
            return JacobiViolation(names, tuple(res))
    return None


@dataclass(frozen=True)
class ExteriorForm:
    """Left-invariant form: scalar coefficients on increasing index tuples."""

    dim: int
    degree: int
    terms: tuple[tuple[tuple[int, ...], PiScalar], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree {self.degree} must be non-negative")
        # degree > dim is allowed; such a form is necessarily zero since no
        # strictly increasing index tuple of that length fits in range.
        cleaned = {}
        for indices, coeff in self.terms:
            indices = tuple(indices)
            coeff = _scalar(coeff)
            if len(indices) != self.degree:
                raise ValueError(f"index tuple {indices} has wrong degree")
            if any(not 0 <= i < self.dim for i in indices):
                raise ValueError(f"index tuple {indices} out of range")
            if list(indices) != sorted(set(indices)):
                raise ValueError(f"index tuple {indices} must be strictly increasing")
            if coeff:
                cleaned[indices] = cleaned.get(indices, PI_ZERO) + coeff
        object.__setattr__(
            self,
            "terms",
            tuple(sorted((i, c) for i, c in cleaned.items() if c)),
        )

    @staticmethod
    def zero(dim: int, degree: int) -> "ExteriorForm":
        return ExteriorForm(dim, degree)

    @staticmethod
    def monomial(dim: int, indices: Sequence[int], coeff: ScalarLike = 1) -> "ExteriorForm":
        return ExteriorForm(dim, len(tuple(indices)), ((tuple(indices), _scalar(coeff)),))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]) -> PiScalar:
        lookup = dict(self.terms)
        return lookup.get(tuple(indices), PI_ZERO)

    def _check_compatible(self, other: "ExteriorForm") -> None:
        if self.dim != other.dim:
            raise ValueError("forms live on algebras of different dimension")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "ExteriorForm") -> "ExteriorForm":
        self._check_compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        merged = dict(self.terms)
        for indices, coeff in other.terms:
            merged[indices] = merged.get(indices, PI_ZERO) + coeff
        return ExteriorForm(self.dim, self.degree, tuple(merged.items()))

    def __neg__(self) -> "ExteriorForm":
        return ExteriorForm(
            self.dim, self.degree, tuple((i, -c) for i, c in self.terms)
        )

    def __sub__(self, other: "ExteriorForm") -> "ExteriorForm":
        return self + (-other)

    def scaled(self, factor: ScalarLike) -> "ExteriorForm":
        f = _scalar(factor)
        return ExteriorForm(
            self.dim, self.degree, tuple((i, c * f) for i, c in self.terms)
        )

    def wedge(self, other: "ExteriorForm") -> "ExteriorForm":
        if self.dim != other.dim:
            raise ValueError("forms live on algebras of different dimension")
        degree = self.degree + other.degree
        if degree > self.dim:
            return ExteriorForm.zero(self.dim, min(degree, self.dim))
        acc: dict[tuple[int, ...], PiScalar] = {}
        for left, cl in self.terms:
            for right, cr in other.terms:
                merged = _merge_indices(left, right)
                if merged is None:
                    continue
                indices, sign = merged
                coeff = cl * cr if sign > 0 else -(cl * cr)
                acc[indices] = acc.get(indices, PI_ZERO) + coeff
        return ExteriorForm(self.dim, degree, tuple(acc.items()))


def _merge_indices(
    left: tuple[int, ...], right: tuple[int, ...]
) -> Optional[tuple[tuple[int, ...], int]]:
    """Merge two increasing tuples; None when they share an index.

    The sign is the parity of the permutation sorting the concatenation.
    """
    if set(left) & set(right):
        return None
    combined = left + right
    inversions = sum(
        1
        for a in range(len(combined))
        for b in range(a + 1, len(combined))
        if combined[a] > combined[b]
    )
    return tuple(sorted(combined)), (-1) ** inversions


def mc_differential(spec: LieAlgebraSpec, i: int) -> ExteriorForm:
    """d(phi^i) = - sum_{j<k} c^i_jk phi^j ^ phi^k."""
    if not 0 <= i < spec.dim:
        raise ValueError(f"basis index {i} out of range")
    terms = []
    for (j, k), vec in spec.brackets:
        if vec[i]:
            terms.append(((j, k), -vec[i]))
    return ExteriorForm(spec.dim, 2, tuple(terms))


def bracket_two_form(spec: LieAlgebraSpec, i: int) -> ExteriorForm:
    """i-th coordinate of [omega, omega] as a 2-form (shuffle sum, so the
    coefficient on phi^j^phi^k is 2 c^i_jk).  Independent route used to
    cross-check ``mc_differential`` against the structure equation."""
    terms = []
    for (j, k), vec in spec.brackets:
        if vec[i]:
            terms.append(((j, k), vec[i] * 2))
    return ExteriorForm(spec.dim, 2, tuple(terms))


def d(spec: LieAlgebraSpec, form: ExteriorForm) -> ExteriorForm:
    """Exterior derivative of a left-invariant form."""
    if form.dim != spec.dim:
        raise ValueError("form dimension does not match the algebra")
    if form.degree >= spec.dim:
        return ExteriorForm.zero(spec.dim, min(form.degree + 1, spec.dim))
    result = ExteriorForm.zero(spec.dim, form.degree + 1)
    for indices, coeff in form.terms:
        for t, idx in enumerate(indices):
            rest = indices[:t] + indices[t + 1 :]
            piece = mc_differential(spec, idx).wedge(
                ExteriorForm.monomial(spec.dim, rest)
            )
            signed = coeff if t % 2 == 0 else -coeff
            result = result + piece.scaled(signed)
    return result


@dataclass(frozen=True)
class GramForm:
    """Symmetric bilinear form on the algebra, as a matrix of scalars."""

    entries: tuple[tuple[PiScalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_scalar(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def pair(self, v: Sequence[PiScalar], w: Sequence[PiScalar]) -> PiScalar:
        total = PI_ZERO
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j, wj in enumerate(w):
                if wj and self.entries[i][j]:
                    total = total + vi * wj * self.entries[i][j]
        return total


def is_ad_invariant(spec: LieAlgebraSpec, gram: GramForm) -> bool:
    """f([a,b],c) + f(b,[a,c]) = 0 on all basis triples."""
    if gram.dim != spec.dim:
        raise ValueError("Gram dimension does not match the algebra")
    n = spec.dim
    for a in range(n):
        ea = _basis_vector(n, a)
        for b in range(n):
            eb = _basis_vector(n, b)
            ab = spec.bracket(a, b)
            for c in range(n):
                ec = _basis_vector(n, c)
                ac = spec.bracket(a, c)
                if gram.pair(ab, ec) + gram.pair(eb, ac):
                    return False
    return True


def cs_three_form(spec: LieAlgebraSpec, gram: GramForm) -> ExteriorForm:
    """T_f(omega) = f(d omega ^ omega) + (1/3) f(omega ^ [omega, omega])
    for the Maurer-Cartan form omega = sum phi^i (x) X_i.

    Each pairing averages over its shuffles: a (2,1) pairing carries 1/3.
    """
    if gram.dim != spec.dim:
        raise ValueError("Gram dimension does not match the algebra")
    if not is_ad_invariant(spec, gram):
        warnings.warn(
            "Gram form is not ad-invariant; the 3-form is basis-dependent",
            stacklevel=2,
        )
    third = PiScalar.of(Fraction(1, 3))
    n = spec.dim
    first = ExteriorForm.zero(n, 3)
    second = ExteriorForm.zero(n, 3)
    for i in range(n):
        dphi = mc_differential(spec, i)
        brk = bracket_two_form(spec, i)
        for l in range(n):
            f_il = gram.entries[i][l]
            if not f_il:
                continue
            phi_l = ExteriorForm.monomial(n, (l,))
            first = first + dphi.wedge(phi_l).scaled(f_il)
            second = second + phi_l.wedge(brk).scaled(f_il)
    return first.scaled(third) + second.scaled(third * third)


def _three_basis(n: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), 3))


def _two_basis(n: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), 2))


def exactness_split(
    spec: LieAlgebraSpec, form: ExteriorForm, target: ExteriorForm
) -> Optional[ExteriorForm]:
    """A 2-form beta with d(beta) = form - target, or None if there is none.

    The linear system is solved exactly; free coefficients are pinned to
    zero in a fixed basis order, so the primitive is deterministic.
    """
    n = spec.dim
    difference = form - target
    if difference.degree != 3 and not difference.is_zero():
        raise ValueError("exactness_split expects 3-forms")
    two_basis = _two_basis(n)
    three_basis = _three_basis(n)
    three_pos = {idx: r for r, idx in enumerate(three_basis)}
    # Column j holds d(phi^{two_basis[j]}); structure constants are pi-free,
    # so every entry is a plain gaussian rational.
    matrix = [[GAUSSIAN_ZERO] * len(two_basis) for _ in three_basis]
    for col, pair in enumerate(two_basis):
        image = d(spec, ExteriorForm.monomial(n, pair))
        for indices, coeff in image.terms:
            matrix[three_pos[indices]][col] = coeff.coeff
    strata: dict[int, list[GaussianRational]] = {}
    for indices, coeff in difference.terms:
        stratum = strata.setdefault(coeff.pi_power, [GAUSSIAN_ZERO] * len(three_basis))
        stratum[three_pos[indices]] = coeff.coeff
    solution_terms: dict[tuple[int, ...], PiScalar] = {}
    for power in sorted(strata):
        rhs = strata[power]
        sol = linalg.solve(matrix, rhs, zero=GAUSSIAN_ZERO)
        if sol is None:
            return None
        for pair, value in zip(two_basis, sol):
            if value:
                existing = solution_terms.get(pair, PI_ZERO)
                solution_terms[pair] = existing + PiScalar(value, power)
    beta = ExteriorForm(n, 2, tuple(solution_terms.items()))
    if d(spec, beta) != difference:
        raise RuntimeError("primitive verification failed after solving")
    return beta


def format_form(spec: LieAlgebraSpec, form: ExteriorForm) -> str:
    """Render as ``c * phiX^phiY`` terms joined by `` + ``, basis order."""
    if form.is_zero():
        return "0"
    parts = []
    for indices, coeff in form.terms:
        if indices:
            monomial = "^".join(f"phi{spec.basis[i]}" for i in indices)
            parts.append(f"{coeff} * {monomial}")
        else:
            parts.append(str(coeff))
    return " + ".join(parts)


# Matrix models used to derive the canned Gram forms.  sl2 basis:
#   X = [[1, 0], [0, -1]],  Y = [[0, 0], [1, 0]],  Z = [[0, 1], [0, 0]].
_SL2_MATS = {
    "X": ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1))),
    "Y": ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))),
    "Z": ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0))),
}


def _mat_mul2(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def _trace2(m) -> Fraction:
    return m[0][0] + m[1][1]


def sl2c_algebra() -> LieAlgebraSpec:
    """sl2: [X,Y] = -2Y, [X,Z] = 2Z, [Y,Z] = -X."""
    z = PI_ZERO
    s = PiScalar.of
    return LieAlgebraSpec(
        basis=("X", "Y", "Z"),
        brackets=(
            ((0, 1), (z, s(-2), z)),
            ((0, 2), (z, z, s(2))),
            ((1, 2), (s(-1), z, z)),
        ),
    )


def iso_sl2r_algebra() -> LieAlgebraSpec:
    """Four-dimensional isometry algebra of the unit tangent geometry.

    Basis X, Y, Z, W where W = Z - Y - T and T spans the central
    translation direction:
        [X,Y] = -2Y   [X,Z] = 2Z    [X,W] = 2Y + 2Z
        [Y,Z] = -X    [Y,W] = -X    [Z,W] = -X
    """
    z = PI_ZERO
    s = PiScalar.of
    return LieAlgebraSpec(
        basis=("X", "Y", "Z", "W"),
        brackets=(
            ((0, 1), (z, s(-2), z, z)),
            ((0, 2), (z, z, s(2), z)),
            ((0, 3), (z, s(2), s(2), z)),
            ((1, 2), (s(-1), z, z, z)),
            ((1, 3), (s(-1), z, z, z)),
            ((2, 3), (s(-1), z, z, z)),
        ),
    )


def iso_sl2r_gram() -> GramForm:
    """Gram matrix of R(A1, A2) = Tr(m1 m2) + t1 t2 on the basis X, Y, Z, W.

    Elements are pairs (m, t) with m in sl2 and t the translation
    coordinate; W = Z - Y - T has m = Z - Y and t = -1.  The matrix is
    derived here rather than written out, and pinned by unit tests.
    """
    x, y, zmat = _SL2_MATS["X"], _SL2_MATS["Y"], _SL2_MATS["Z"]
    z_minus_y = tuple(
        tuple(zmat[i][j] - y[i][j] for j in range(2)) for i in range(2)
    )
    reps = [
        (x, Fraction(0)),
        (y, Fraction(0)),
        (zmat, Fraction(0)),
        (z_minus_y, Fraction(-1)),
    ]
    entries = tuple(
        tuple(
            PiScalar.of(_trace2(_mat_mul2(m1, m2)) + t1 * t2)
            for (m2, t2) in reps
        )
        for (m1, t1) in reps
    )
    return GramForm(entries)


def sl2c_gram() -> GramForm:
    """Multiple of the trace form on sl2 entering the hyperbolic-volume
    identity: normalized so the Chern-Simons 3-form of the Maurer-Cartan
    connection is exactly (1/pi^2) phiX^phiY^phiZ (pinned by tests)."""
    names = ("X", "Y", "Z")
    unit = PiScalar(GaussianRational(Fraction(3, 2)), -2)
    entries = tuple(
        tuple(
            unit * PiScalar.of(_trace2(_mat_mul2(_SL2_MATS[a], _SL2_MATS[b])))
            for b in names
        )
        for a in names
    )
    return GramForm(entries)


def _coeff_from_json(value) -> PiScalar:
    if isinstance(value, bool):
        raise ValueError(f"bad structure constant {value!r}")
    if isinstance(value, int):
        return PiScalar.of(value)
    if isinstance(value, str):
        return PiScalar.of(Fraction(value))
    raise ValueError(f"bad structure constant {value!r} (use int or 'p/q')")


def algebra_from_json(doc: Mapping) -> LieAlgebraSpec:
    """Build an (unvalidated) algebra from a JSON document of the shape

        {"basis": ["X", "Y"], "brackets": [["X", "Y", {"X": 1}], ...]}

    Brackets not listed are zero.  Run ``validate_jacobi`` on the result;
    loading does not reject non-Lie tables so they can be diagnosed.
    """
    basis = tuple(doc["basis"])
    if not basis:
        raise ValueError("basis must not be empty")
    index = {name: i for i, name in enumerate(basis)}
    table: dict[tuple[int, int], list[PiScalar]] = {}
    for entry in doc.get("brackets", []):
        if len(entry) != 3:
            raise ValueError(f"bracket entry {entry!r} must be [left, right, coeffs]")
        left, right, coeffs = entry
        if left not in index or right not in index:
            raise ValueError(f"bracket entry {entry!r} uses unknown basis names")
        j, k = index[left], index[right]
        if j == k:
            raise ValueError(f"bracket [{left}, {left}] must be zero, not listed")
        sign = 1
        if j > k:
            j, k, sign = k, j, -1
        vec = table.setdefault((j, k), [PI_ZERO] * len(basis))
        for name, value in coeffs.items():
            if name not in index:
                raise ValueError(f"bracket entry {entry!r} uses unknown basis names")
            coeff = _coeff_from_json(value)
            vec[index[name]] = vec[index[name]] + (coeff if sign > 0 else -coeff)
    return LieAlgebraSpec(
        basis=basis,
        brackets=tuple((pair, tuple(vec)) for pair, vec in sorted(table.items())),
        check_jacobi=False,
    )


def chern_poly_coeffs(
    matrix: Sequence[Sequence[ScalarLike]], kind: str
) -> tuple[PiScalar, ...]:
    """Nontrivial coefficients of the characteristic-polynomial expansion.

    ``chern``: 2x2 traceless input A; expands det(lambda I - A/(2 i pi))
    = lambda^2 + C1 lambda + C2, checks C1 = 0 and C2 = Tr(A^2)/(8 pi^2),
    and returns (C1, C2).

    ``pontrjagin``: 3x3 antisymmetric input A; expands
    det(lambda I - A/(2 pi)) = lambda^3 + P1 lambda, checks the two other
    coefficients vanish and P1 = -Tr(A^2)/(8 pi^2), and returns (P1,).
    """
    rows = [[_scalar(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")

    def tr_square() -> PiScalar:
        total = PI_ZERO
        for i in range(n):
            for j in range(n):
                total = total + rows[i][j] * rows[j][i]
        return total

    if kind == "chern":
        if n != 2:
            raise ValueError("chern expects a 2x2 matrix")
        if rows[0][0] + rows[1][1]:
            raise ValueError("chern expects a traceless matrix")
        # Entries of A / (2 i pi): divide by 2i and lower the pi power.
        half_i = PiScalar(GaussianRational(Fraction(0), Fraction(2)), 1)
        m = [[x / half_i for x in row] for row in rows]
        c1 = -(m[0][0] + m[1][1])
        c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if c1:
            raise RuntimeError("C1 must vanish for a traceless matrix")
        expected = tr_square() * PiScalar(GaussianRational(Fraction(1, 8)), -2)
        if c2 != expected:
            raise RuntimeError(
                f"chern coefficient mismatch: expansion {c2}, trace identity {expected}"
            )
        return (c1, c2)

    if kind == "pontrjagin":
        if n != 3:
            raise ValueError("pontrjagin expects a 3x3 matrix")
        for i in range(n):
            for j in range(n):
                if rows[i][j] + rows[j][i]:
                    raise ValueError("pontrjagin expects an antisymmetric matrix")
        two_pi = PiScalar(GaussianRational(Fraction(2)), 1)
        m = [[x / two_pi for x in row] for row in rows]
        e1 = m[0][0] + m[1][1] + m[2][2]
        e2 = PI_ZERO
        for i, j in itertools.combinations(range(3), 2):
            e2 = e2 + (m[i][i] * m[j][j] - m[i][j] * m[j][i])
        e3 = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if e1 or e3:
            raise RuntimeError("odd coefficients must vanish for an antisymmetric matrix")
        expected = -(tr_square() * PiScalar(GaussianRational(Fraction(1, 8)), -2))
        if e2 != expected:
            raise RuntimeError(
                f"pontrjagin coefficient mismatch: expansion {e2}, trace identity {expected}"
            )
        return (e2,)

    raise ValueError(f"unknown kind {kind!r} (use 'chern' or 'pontrjagin')")
