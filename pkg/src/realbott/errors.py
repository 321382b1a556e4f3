"""Exception hierarchy.

``DomainError`` covers inputs that are well-formed but mathematically
invalid; ``BudgetExceeded`` covers computations refused because they would
run past a configured size cap.
"""


class BottError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BottError, ValueError):
    pass


class NotBottMatrix(DomainError):
    """Matrix has a nonzero diagonal entry or its digraph has a cycle."""


class NotAcyclic(NotBottMatrix):
    pass


class PreconditionViolated(DomainError):
    pass


class SizeMismatch(DomainError):
    pass


class MalformedInput(DomainError):
    pass


class MalformedD6(MalformedInput):
    pass


class EmptyInput(DomainError):
    pass


class BudgetExceeded(BottError):
    pass


class OrbitBudgetExceeded(BudgetExceeded):
    pass
