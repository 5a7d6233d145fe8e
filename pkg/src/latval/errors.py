"""Exception hierarchy shared by every module."""


class LatvalError(Exception):
    """Base class; the CLI maps any of these to exit status 2."""


class DuplicateElement(LatvalError):
    pass


class UnknownElement(LatvalError):
    pass


class CycleDetected(LatvalError):
    pass


class NotAPermutation(LatvalError):
    pass


class InvalidRealizer(LatvalError):
    pass


class SizeLimitExceeded(LatvalError):
    pass


class UnknownDownset(LatvalError):
    pass


class NotAnAntichain(LatvalError):
    pass


class DomainMismatch(LatvalError):
    pass


class NotAValuation(LatvalError):
    pass


class NotBijective(LatvalError):
    pass


class NotComplete(LatvalError):
    pass


class DuplicateConeValue(LatvalError):
    pass


class EmptyInput(LatvalError):
    pass


class AtTop(LatvalError):
    pass


class NotALinearExtension(LatvalError):
    pass
