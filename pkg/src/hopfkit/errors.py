"""Named error types.  Each carries an optional witness (basis indices)."""
from __future__ import annotations


class HopfkitError(Exception):
    """Base class; ``witness`` holds the offending index tuple if any."""

    def __init__(self, message: str = "", witness=None):
        super().__init__(message)
        self.witness = witness


class DivisionByZero(HopfkitError, ZeroDivisionError):
    pass


class DimensionMismatch(HopfkitError, ValueError):
    pass


class NotFiniteOrder(HopfkitError):
    pass


class NotSplit(HopfkitError):
    """A simple block (or eigenvalue) does not split over Q(zeta_m)."""

    def __init__(self, message: str = "", block_dim: int | None = None,
                 suggested_order: int | None = None, witness=None):
        super().__init__(message, witness)
        self.block_dim = block_dim
        self.suggested_order = suggested_order


class ParseError(HopfkitError, ValueError):
    pass


class BadParameter(HopfkitError, ValueError):
    pass


# coalgebra / algebra axioms
class NotCoassociative(HopfkitError):
    pass


class CounitFails(HopfkitError):
    pass


class NotAssociative(HopfkitError):
    pass


class UnitFails(HopfkitError):
    pass


class NotBialgebra(HopfkitError):
    """Delta or epsilon fails to be multiplicative/unital."""


class AntipodeAxiomFails(HopfkitError):
    pass


class NotGrouplike(HopfkitError):
    pass


class NotClosed(HopfkitError):
    pass


class NotSubcoalgebra(HopfkitError):
    pass


class NotHopfMap(HopfkitError):
    pass


class NotCoalgebraMap(HopfkitError):
    pass


class NotInvertible(HopfkitError):
    pass


class NotStable(HopfkitError):
    pass


class OrderOne(HopfkitError):
    pass


class ExceedsCap(HopfkitError):
    pass


class InternalMismatch(HopfkitError):
    pass


class HypothesisMissing(HopfkitError):
    pass


class BadDivisibility(HopfkitError, ValueError):
    pass
