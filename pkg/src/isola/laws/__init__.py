"""Named, bounded, exhaustive checks of the library's mathematical claims.

Importing this package registers every law. ``run_suite("CG-*")`` runs the
cograph laws at their default bounds; bounds live in ``isola/data/bounds.json``.
"""

from . import cograph_laws, fac_laws, iso_laws, line_laws, morphism_laws, one_laws  # noqa: F401  (registers laws)
from .core import (
    REGISTRY,
    Law,
    LawResult,
    Mutation,
    SuiteReport,
    UnknownLawError,
    get_law,
    load_bounds,
    load_manifest,
    run_law,
    run_suite,
    select,
)

__all__ = [
    "REGISTRY",
    "Law",
    "LawResult",
    "Mutation",
    "SuiteReport",
    "UnknownLawError",
    "get_law",
    "load_bounds",
    "load_manifest",
    "run_law",
    "run_suite",
    "select",
]
