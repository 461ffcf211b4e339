"""Exception types shared by every module.

Plain argument mistakes (a vertex out of range, ``i == j``) raise the builtin
``ValueError``; the subclasses below mark the failure categories that the CLI
maps to distinct messages.
"""


class FormatError(ValueError):
    """Malformed serialized input (``.trn`` text, bit strings, matrices)."""


class CapacityError(ValueError):
    """An order or size exceeds what an operation supports."""


class StructureError(ValueError):
    """The input lacks a structure the operation requires (e.g. transitivity)."""


class InvariantViolation(RuntimeError):
    """A mathematical identity the library relies on failed to hold.

    This never signals bad input; it means an implementation bug.
    """
