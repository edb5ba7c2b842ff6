"""Exception hierarchy shared by all modules."""


class JordanCohError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(JordanCohError, ZeroDivisionError):
    pass


class BothZero(JordanCohError, ValueError):
    pass


class DenominatorVanishes(JordanCohError, ZeroDivisionError):
    def __init__(self, value):
        super().__init__(f"denominator vanishes at t = {value}")
        self.value = value


class ParseError(JordanCohError, ValueError):
    """Malformed input text or document; ``position`` is a character offset
    for scalar text, or a JSON path string for documents."""

    def __init__(self, message, position=None):
        where = f" at {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


class DimensionMismatch(JordanCohError, ValueError):
    pass


class GradingViolation(JordanCohError, ValueError):
    pass


class InconsistentSymmetricPair(JordanCohError, ValueError):
    pass


class NotASubspace(JordanCohError, ValueError):
    pass


class LayoutMismatch(JordanCohError, ValueError):
    pass


class ConsistencyError(JordanCohError):
    """An internal mathematical invariant failed (e.g. B is not inside Z)."""
