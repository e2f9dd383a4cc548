"""Exception types shared across the library.

Every error carries enough context (the offending arc, vertex, walk or
quantity) to be actionable from a CLI run.
"""


class BridgelabError(Exception):
    """Base class for all library errors."""


# -- graph construction ------------------------------------------------------

class SymmetryViolation(BridgelabError):
    """An arc is present without its reverse."""


class Disconnected(BridgelabError):
    """The graph is not connected."""


class LoopPresent(BridgelabError):
    """A self-loop (z -> z) was found."""


class DimensionTooSmall(BridgelabError):
    """Lattice window too small to contain a face."""


class VertexUnknown(BridgelabError):
    """A vertex label is not part of the graph."""


class NotSpanning(BridgelabError):
    """A purported spanning tree does not span the graph."""


class BudgetExceeded(BridgelabError):
    """Walk enumeration exceeded its configured cap."""


class WindowTooSmall(BridgelabError):
    """An operation touched the boundary of a finite window standing in
    for an infinite graph."""


# -- intensities and characteristics ----------------------------------------

class MissingRate(BridgelabError):
    """A walk uses an arc the intensity does not cover."""


class BasisMismatch(BridgelabError):
    """A closed-walk basis does not belong to the given graph."""


class PrescriptionIncomplete(BridgelabError):
    """A characteristic prescription misses a required closed walk."""


class NonPositiveRate(BridgelabError):
    """A rate or prescribed characteristic is not strictly positive."""


class NoConvergence(BridgelabError):
    """Power iteration failed to reach the residual target."""


# -- bridges -----------------------------------------------------------------

class WindowLeak(BridgelabError):
    """Probability mass leaked through the window boundary beyond the
    acceptable threshold."""


class UnreachableEndpoint(BridgelabError):
    """Bridge endpoint has zero transition probability."""


class DegenerateWeights(BridgelabError):
    """Importance-sampling effective sample size collapsed."""


class InsufficientTail(BridgelabError):
    """No deviation level had enough exceedance samples."""


class RNotInRegime(BridgelabError):
    """Deviation level below the admissible threshold of the tail bound."""


class RangeTooSmall(BridgelabError):
    """Requested range too short to certify a monotonicity property."""


class DomainError(BridgelabError):
    """Argument outside the mathematical domain of a formula."""


class EvaluatorFailure(BridgelabError):
    """A user-supplied potential evaluator raised or returned bad values."""
