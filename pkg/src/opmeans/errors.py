"""Exception types shared across the package.

Everything derives from ValueError or ArithmeticError so callers that do not
care about the fine distinctions can catch the built-in bases.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DegenerateIntervalError(ValueError):
    """An operation needing a nondegenerate interval [m, M] received m == M."""


class InvalidMeanError(ValueError):
    """A representing function violated positivity/concavity prerequisites."""


class DimensionMismatch(ValueError):
    """Matrix operands have incompatible or unsupported dimensions."""


class NumericalDegeneracy(ArithmeticError):
    """A quantity that must be positive definite lost definiteness beyond
    the documented round-off allowance."""


class PreconditionError(ValueError):
    """A verifier was called outside its stated hypothesis region."""


class ConstraintViolation(PreconditionError):
    """An instance failed the two-sided order constraint m*A <= B <= M*A."""
