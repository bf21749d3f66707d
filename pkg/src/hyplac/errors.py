"""Exception hierarchy shared by every hyplac module."""


class HyplacError(Exception):
    """Base class for all analyzer errors."""


class InvalidInput(HyplacError, ValueError):
    pass


class DivisionByZero(HyplacError, ZeroDivisionError):
    pass


class SingularMatrix(HyplacError, ZeroDivisionError):
    pass


class PrecisionExhausted(HyplacError, ArithmeticError):
    """An interval sign stayed ambiguous up to the maximum working precision."""


class NonGenericParameters(HyplacError, ValueError):
    """Repeated entries inside alpha or inside beta."""


class Reducible(HyplacError, ValueError):
    """Some alpha_j coincides with some beta_k modulo 1."""


class NeedsDualization(HyplacError, ValueError):
    pass


class InvalidCandidate(HyplacError, ValueError):
    pass


class NotAUnit(HyplacError, ValueError):
    pass


class NotAPseudoreflection(HyplacError, ValueError):
    pass


class NoInvariantForm(HyplacError, ArithmeticError):
    pass


class PoleInDenominatorParameters(HyplacError, ValueError):
    pass


class InconsistentVerdict(HyplacError, AssertionError):
    """Two independent routes to the same verdict disagreed."""
