"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class EvaluationError(ArithmeticError):
    """A specialization hits a vanishing denominator."""


class UnsupportedError(NotImplementedError):
    """The request needs machinery the package deliberately leaves out."""


class InternalError(RuntimeError):
    """A condition that the theory rules out was observed."""
