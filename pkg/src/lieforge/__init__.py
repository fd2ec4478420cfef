"""Exceptional and classical Lie algebras assembled from binary codes.

The pipeline runs code -> lattice root system -> coordinate algebra ->
structure constants -> exact verification.  ``classical`` supplies matrix
realizations used as an independent check on the bracket conventions.
"""

from .analysis import VerificationReport, extract_roots, verify
from .classical import build_classical, extract_coordinate_algebra
from .codes import BinaryCode, Word, builtin, dual, weight_enumerator
from .coordalg import axiom_report, builtin_coordinate_algebra
from .lattices import identify_root_system, roots_of_code_lattice
from .liealg import LieAlgebra, build_lie_algebra

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "LieAlgebra",
    "VerificationReport",
    "Word",
    "axiom_report",
    "build_algebra",
    "build_classical",
    "build_lie_algebra",
    "builtin",
    "builtin_coordinate_algebra",
    "dual",
    "extract_coordinate_algebra",
    "extract_roots",
    "identify_root_system",
    "roots_of_code_lattice",
    "verify",
    "weight_enumerator",
]


def build_algebra(kind: str) -> LieAlgebra:
    """Structure constants of e7, e8 or f4 from the built-in coordinate algebra."""
    L = build_lie_algebra(builtin_coordinate_algebra(kind))
    L.name = kind.lower()
    return L
