"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation was requested too close to a singular set."""


class PreconditionError(ValueError):
    """A caller-supplied object fails a required certification."""


class QuaternionParseError(ValueError):
    """Malformed quaternion literal.  Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
