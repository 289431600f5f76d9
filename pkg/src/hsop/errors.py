class HsopError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionFailed(HsopError, ValueError):
    pass


class NotPolynomial(HsopError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class UnsupportedDegree(HsopError, ValueError):
    pass


class LengthMismatch(HsopError, ValueError):
    pass


class IndexMismatch(HsopError, ValueError):
    pass


class OrderTooHigh(HsopError, ValueError):
    pass


class NotUnimodular(HsopError, ValueError):
    pass


class ZeroForm(HsopError, ValueError):
    pass
