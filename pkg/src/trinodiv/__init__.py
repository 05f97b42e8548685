"""Exact polyhedral divisors for complexity-one torus actions on trinomial hypersurfaces."""

from .trinomial import (
    Classification,
    GcdInvariants,
    RationalityClass,
    TrinomialInput,
    build_L,
    classify,
    gcd_invariants,
    validate,
)
from .downgrade import TorusData, build_torus_data, image_generators, ray_generators
from .ppdivisor import (
    BaseCurve,
    PPDivisor,
    SupportDivisor,
    compute_ppdivisor,
    evaluate,
    pham_brieskorn,
    properness_report,
)
from .oracle import HilbertQuery, hilbert_dim, section_dim, verify_equality
from .cli import format_trinomial, parse_trinomial_expression

__all__ = [
    "BaseCurve",
    "Classification",
    "GcdInvariants",
    "HilbertQuery",
    "PPDivisor",
    "RationalityClass",
    "SupportDivisor",
    "TorusData",
    "TrinomialInput",
    "build_L",
    "build_torus_data",
    "classify",
    "compute_ppdivisor",
    "evaluate",
    "format_trinomial",
    "gcd_invariants",
    "hilbert_dim",
    "image_generators",
    "parse_trinomial_expression",
    "pham_brieskorn",
    "properness_report",
    "ray_generators",
    "section_dim",
    "validate",
    "verify_equality",
]
