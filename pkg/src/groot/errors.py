"""Exception hierarchy.

Input problems derive from :class:`InvalidInput`; violated internal
invariants (which indicate a bug rather than bad input) derive from
:class:`InvariantViolation`.  The CLI maps these to exit codes 2 and 3.
"""


class GrootError(Exception):
    pass


class InvalidInput(GrootError, ValueError):
    pass


class InvariantViolation(GrootError):
    pass


class InvalidTriple(InvalidInput):
    pass


class InvalidParams(InvalidInput):
    pass


class OddGrading(InvalidInput):
    pass


class AsymmetricRoot(InvalidInput):
    pass


class FormulaInapplicable(GrootError):
    """No exact r0 rule covers this oriented sphere."""


class NegativeDefinitenessFailure(InvariantViolation):
    pass


class NonIntegralShift(InvariantViolation):
    pass


class NotStabilized(InvariantViolation):
    pass


class OddExponent(InvariantViolation):
    pass


class ChainAxiomError(InvariantViolation):
    pass


class CounterexampleFound(InvariantViolation):
    def __init__(self, claim, witness):
        super().__init__(f"{claim} fails at {witness!r}")
        self.claim = claim
        self.witness = witness
