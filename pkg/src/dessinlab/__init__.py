"""Clean dessins d'enfants, their Brauer graph algebras and Kauer mutations."""

from .errors import (
    DessinError,
    FormulaInapplicable,
    InvariantViolation,
    ParseError,
    ResourceLimitError,
    ValidationError,
)
from .perm import Permutation, compose, cycle_type, cycles, format_cycles, inverse, power
from .dessin import (
    CleanDessin,
    Passport,
    PassportFilter,
    canonical_digest,
    canonical_form,
    clean_cover,
    enumerate_dessins,
    find_isomorphism,
    from_cycles,
    is_isomorphic,
    make_dessin,
    passport,
    random_dessin,
    triangulate,
)
from .quiver import Quiver, check_gentle, quiver_of, relations_of
from .algebra import build_algebra, invariant_report
from .mutation import (
    derived_equivalent,
    exact_period,
    mutate,
    mutation_class,
    period_bound,
    star_reduce,
)
from .formats import export_dot, parse_document, parse_permutation, report

__version__ = "0.1.0"

__all__ = [
    "DessinError", "FormulaInapplicable", "InvariantViolation", "ParseError",
    "ResourceLimitError", "ValidationError",
    "Permutation", "compose", "cycle_type", "cycles", "format_cycles", "inverse", "power",
    "CleanDessin", "Passport", "PassportFilter", "canonical_digest", "canonical_form",
    "clean_cover", "enumerate_dessins", "find_isomorphism", "from_cycles", "is_isomorphic",
    "make_dessin", "passport", "random_dessin", "triangulate",
    "Quiver", "check_gentle", "quiver_of", "relations_of",
    "build_algebra", "invariant_report",
    "derived_equivalent", "exact_period", "mutate", "mutation_class", "period_bound",
    "star_reduce",
    "export_dot", "parse_document", "parse_permutation", "report",
]
