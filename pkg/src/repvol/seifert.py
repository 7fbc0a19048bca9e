"""Seifert fibered spaces over orientable closed base orbifolds.

A space is recorded by its unnormalized Seifert invariants
``(g; b_1/a_1, ..., b_p/a_p)``: base genus ``g`` and exceptional data
pairs ``(a_i, b_i)`` with ``a_i >= 1`` and ``gcd(a_i, |b_i|) = 1``.
Pairs with ``a_i = 1`` are legal and are kept as written; the volume
and Euler-number formulas do not depend on how the data is normalized.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "SeifertInvariants",
    "GeometryTag",
    "ParseError",
    "euler_number",
    "orbifold_chi",
    "classify_geometry",
    "dehn_fill",
    "circle_bundle",
    "fiber_cover",
    "base_cover",
    "parse_seifert",
    "format_seifert",
]


class ParseError(ValueError):
    """Seifert notation error carrying the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _check_pair(a: int, b: int, where: str) -> None:
    if a <= 0:
        raise ValueError(f"{where}: multiplicity must be positive, got {a}")
    if math.gcd(a, abs(b)) != 1:
        raise ValueError(f"{where}: {b}/{a} is not in lowest terms")


@dataclass(frozen=True, eq=False)
class SeifertInvariants:
    """Unnormalized invariants (genus; pairs) plus open boundary count.

    Equality treats the pair list as a multiset: two records differing
    only in pair order describe the same space.
    """

    genus: int
    pairs: tuple[tuple[int, int], ...] = ()
    boundary_count: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))
        if self.genus < 0:
            raise ValueError(f"base genus must be >= 0, got {self.genus}")
        if self.boundary_count < 0:
            raise ValueError(f"boundary count must be >= 0, got {self.boundary_count}")
        for k, (a, b) in enumerate(self.pairs, start=1):
            _check_pair(a, b, f"pair {k}")

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    def sorted_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def _key(self) -> tuple:
        return (self.genus, self.boundary_count, self.sorted_pairs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeifertInvariants):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return format_seifert(self)


class GeometryTag(enum.Enum):
    SL2R_TILDE = "sl2r-tilde"
    OTHER = "other"


def _require_closed(inv: SeifertInvariants, what: str) -> None:
    if not inv.is_closed:
        raise ValueError(f"{what} requires a closed space, got boundary count {inv.boundary_count}")


def euler_number(inv: SeifertInvariants) -> Fraction:
    """Euler number e = sum(b_i / a_i) of a closed Seifert fibration."""
    _require_closed(inv, "euler_number")
    return sum((Fraction(b, a) for a, b in inv.pairs), Fraction(0))


def orbifold_chi(inv: SeifertInvariants) -> Fraction:
    """Orbifold Euler characteristic 2 - 2g - sum(1 - 1/a_i) of the base."""
    _require_closed(inv, "orbifold_chi")
    return Fraction(2 - 2 * inv.genus) - sum(
        (Fraction(a - 1, a) for a, _ in inv.pairs), Fraction(0)
    )


def classify_geometry(inv: SeifertInvariants) -> GeometryTag:
    """SL2R_TILDE exactly when e != 0 and the base orbifold is hyperbolic."""
    _require_closed(inv, "classify_geometry")
    if euler_number(inv) != 0 and orbifold_chi(inv) < 0:
        return GeometryTag.SL2R_TILDE
    return GeometryTag.OTHER


def dehn_fill(
    genus: int,
    open_boundary: int,
    fillings: Sequence[tuple[int, int]],
    existing_pairs: Sequence[tuple[int, int]] = (),
) -> SeifertInvariants:
    """Fill ``len(fillings)`` of the ``open_boundary`` torus boundaries.

    Each filling pair (a, b) becomes new exceptional data; it must have
    a > 0 and be in lowest terms.  The result is closed when every
    boundary is filled.
    """
    if len(fillings) > open_boundary:
        raise ValueError(
            f"{len(fillings)} fillings exceed {open_boundary} open boundaries"
        )
    for k, (a, b) in enumerate(fillings, start=1):
        _check_pair(a, b, f"filling {k}")
    return SeifertInvariants(
        genus=genus,
        pairs=tuple(existing_pairs) + tuple(fillings),
        boundary_count=open_boundary - len(fillings),
    )


def circle_bundle(genus: int, euler: int) -> SeifertInvariants:
    """Closed orientable circle bundle with integer Euler number."""
    pairs = ((1, euler),) if euler else ()
    return SeifertInvariants(genus=genus, pairs=pairs)


def _require_bundle(inv: SeifertInvariants, what: str) -> int:
    _require_closed(inv, what)
    if any(a != 1 for a, _ in inv.pairs):
        raise ValueError(f"{what} requires a circle bundle (all multiplicities 1)")
    return sum(b for _, b in inv.pairs)


def fiber_cover(inv: SeifertInvariants, degree: int) -> SeifertInvariants:
    """Degree-d cover along the fiber direction: divides the Euler number."""
    e = _require_bundle(inv, "fiber_cover")
    if degree <= 0:
        raise ValueError(f"cover degree must be positive, got {degree}")
    if e % degree != 0:
        raise ValueError(f"fiber cover degree {degree} does not divide Euler number {e}")
    return circle_bundle(inv.genus, e // degree)


def base_cover(inv: SeifertInvariants, degree: int) -> SeifertInvariants:
    """Pullback along a degree-k cover of the base surface (genus >= 1).

    The base genus becomes k(g-1)+1 and the Euler number is multiplied
    by k.
    """
    e = _require_bundle(inv, "base_cover")
    if degree <= 0:
        raise ValueError(f"cover degree must be positive, got {degree}")
    if inv.genus < 1:
        raise ValueError("base_cover requires base genus >= 1")
    return circle_bundle(degree * (inv.genus - 1) + 1, degree * e)


_TOKEN = re.compile(r"\s*(-?\d+|[();,/])")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _TokenStream:
    def __init__(self, tokens: list[tuple[str, int]], length: int):
        self.tokens = tokens
        self.i = 0
        self.length = length

    def peek(self) -> tuple[str, int]:
        if self.i >= len(self.tokens):
            return ("", self.length)
        return self.tokens[self.i]

    def take(self) -> tuple[str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, literal: str) -> int:
        tok, pos = self.take()
        if tok != literal:
            shown = tok if tok else "end of input"
            raise ParseError(f"expected {literal!r}, found {shown}", pos)
        return pos

    def integer(self, what: str) -> tuple[int, int]:
        tok, pos = self.take()
        if not re.fullmatch(r"-?\d+", tok or ""):
            shown = tok if tok else "end of input"
            raise ParseError(f"expected {what}, found {shown}", pos)
        return int(tok), pos


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse ``(g; b1/a1, b2/a2, ...)`` notation for a closed space.

    A bare integer entry means b/1.  The base must be orientable, so a
    negative genus is rejected.
    """
    stream = _TokenStream(_tokenize(text), len(text))
    stream.expect("(")
    genus, gpos = stream.integer("genus")
    if genus < 0:
        raise ParseError("negative genus (non-orientable bases are not supported)", gpos)
    stream.expect(";")
    pairs: list[tuple[int, int]] = []
    tok, _ = stream.peek()
    while tok != ")":
        b, bpos = stream.integer(f"numerator of pair {len(pairs) + 1}")
        a = 1
        tok, _ = stream.peek()
        if tok == "/":
            stream.take()
            a, apos = stream.integer(f"multiplicity of pair {len(pairs) + 1}")
        else:
            apos = bpos
        try:
            _check_pair(a, b, f"pair {len(pairs) + 1}")
        except ValueError as exc:
            raise ParseError(str(exc), apos) from None
        pairs.append((a, b))
        tok, pos = stream.peek()
        if tok == ",":
            stream.take()
            tok, _ = stream.peek()
            if tok == ")":
                raise ParseError("trailing comma", pos)
        elif tok != ")":
            shown = tok if tok else "end of input"
            raise ParseError(f"expected ',' or ')', found {shown}", pos)
    stream.expect(")")
    tok, pos = stream.peek()
    if tok:
        raise ParseError(f"unexpected trailing {tok!r}", pos)
    return SeifertInvariants(genus=genus, pairs=tuple(pairs))


def format_seifert(inv: SeifertInvariants) -> str:
    """Canonical notation: pairs in lowest terms, sorted by (a, b)."""
    body = ", ".join(f"{b}/{a}" for a, b in inv.sorted_pairs())
    return f"({inv.genus}; {body})" if body else f"({inv.genus};)"
