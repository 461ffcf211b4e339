"""Exact determinants, switching classes and D_k membership for tournaments."""

from .core import (
    Tournament,
    canonical_form,
    cone_minus,
    cone_plus,
    dominates,
    from_bits,
    from_code,
    induce,
    join,
    parse_trn,
    read_trn,
    relabel,
    to_bits,
    to_code,
    transitive_order,
    transitive_tournament,
    write_trn,
)
from .errors import CapacityError, FormatError, InvariantViolation, StructureError
from .linalg import determinant, pfaffian, skew_matrix
from .switching import switch, switching_canonical, switching_equivalent_labeled

__all__ = [
    "CapacityError",
    "FormatError",
    "InvariantViolation",
    "StructureError",
    "Tournament",
    "canonical_form",
    "cone_minus",
    "cone_plus",
    "determinant",
    "dominates",
    "from_bits",
    "from_code",
    "induce",
    "join",
    "parse_trn",
    "pfaffian",
    "read_trn",
    "relabel",
    "skew_matrix",
    "switch",
    "switching_canonical",
    "switching_equivalent_labeled",
    "to_bits",
    "to_code",
    "transitive_order",
    "transitive_tournament",
    "write_trn",
]

__version__ = "0.1.0"
