"""Exact representation-volume data for Seifert and graph 3-manifolds.

Everything is computed in exact arithmetic: volume coefficients are
``fractions.Fraction`` multiples of 4*pi^2, and the symbolic 3-form
machinery works over Gaussian rationals times integer powers of pi.
"""

from .exact import (
    ExactVolume,
    GaussianRational,
    NumericVolume,
    PiScalar,
    Rational,
    VolumeValue,
    render_volume,
    volume_sum,
)
from .seifert import (
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
from .ehn import (
    VolumeWitness,
    foliation_exists,
    seifert_volume_max,
    volume_set,
    volume_set_bruteforce,
    witnesses_for,
)
from .liecs import (
    ExteriorForm,
    GramForm,
    JacobiViolation,
    LieAlgebraSpec,
    algebra_from_json,
    bracket_two_form,
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
from .jsj import (
    DirectVolume,
    Edge,
    FilledSeifert,
    GraphManifoldSpec,
    MotegiResult,
    Piece,
    RWResult,
    SmallImage,
    additivity_sum,
    load_graph_document,
    motegi_case,
    motegi_spec,
    rw_consistency,
    validate_spec,
)
from .covers import (
    ColoredMergeCounts,
    MergeCounts,
    TorusCoverDatum,
    colored_merge_counts,
    cover_intersection,
    elevation_count,
    merge_copy_counts,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredMergeCounts",
    "DirectVolume",
    "Edge",
    "ExactVolume",
    "ExteriorForm",
    "FilledSeifert",
    "GaussianRational",
    "GeometryTag",
    "GramForm",
    "GraphManifoldSpec",
    "JacobiViolation",
    "LieAlgebraSpec",
    "MergeCounts",
    "MotegiResult",
    "NumericVolume",
    "ParseError",
    "PiScalar",
    "Piece",
    "RWResult",
    "Rational",
    "SeifertInvariants",
    "SmallImage",
    "TorusCoverDatum",
    "VolumeValue",
    "VolumeWitness",
    "additivity_sum",
    "algebra_from_json",
    "base_cover",
    "bracket_two_form",
    "chern_poly_coeffs",
    "circle_bundle",
    "classify_geometry",
    "colored_merge_counts",
    "cover_intersection",
    "cs_three_form",
    "d",
    "dehn_fill",
    "elevation_count",
    "euler_number",
    "exactness_split",
    "fiber_cover",
    "foliation_exists",
    "format_form",
    "format_seifert",
    "is_ad_invariant",
    "iso_sl2r_algebra",
    "iso_sl2r_gram",
    "load_graph_document",
    "mc_differential",
    "merge_copy_counts",
    "motegi_case",
    "motegi_spec",
    "orbifold_chi",
    "parse_seifert",
    "render_volume",
    "rw_consistency",
    "seifert_volume_max",
    "sl2c_algebra",
    "sl2c_gram",
    "validate_jacobi",
    "validate_spec",
    "volume_set",
    "volume_set_bruteforce",
    "volume_sum",
    "witnesses_for",
]
