"""Exception types shared across the package."""


class QgapError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(QgapError):
    """Operands have incompatible dimensions."""


class InvalidStateError(QgapError):
    """A state vector is zero or otherwise not a valid ray representative."""


class UnsupportedConnectiveError(QgapError):
    """A connective was applied outside its defined domain.

    Conjunction requires commuting operands; exclusive-or requires
    mutually orthogonal ones.
    """


class IncompleteAssignmentError(QgapError):
    """A classical valuation was asked for an atom it does not cover."""


class ImpossibleOutcomeError(QgapError):
    """A verification outcome annihilates the current state."""


class ParseError(QgapError):
    """Malformed scalar, vector, or proposition text."""
