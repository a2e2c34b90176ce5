"""Exception hierarchy shared by every module of the package."""


class BerkError(Exception):
    """Base class for all errors raised by berk."""


class PrecisionExhausted(BerkError, ArithmeticError):
    """A decision depends on digits beyond the tracked p-adic precision."""


class DivisionByZero(BerkError, ZeroDivisionError):
    pass


class BackendMismatch(BerkError, TypeError):
    pass


class NotSimpleRoot(BerkError, ValueError):
    pass


class SquareRootFailure(BerkError, ValueError):
    pass


class NotLoxodromic(BerkError, ValueError):
    pass


class FixesInfinity(BerkError, ValueError):
    pass


class NotNested(BerkError, ValueError):
    pass


class TargetAtBasepoint(BerkError, ValueError):
    pass


class BasePointNotInDomain(BerkError, ValueError):
    pass


class SearchFailed(BerkError):
    """No candidate produced a valid Schottky figure. Not a proof of anything."""


class Inconclusive(BerkError):
    """A word search hit its length bound before reaching a verdict."""


class InternalInconsistency(BerkError, AssertionError):
    pass
