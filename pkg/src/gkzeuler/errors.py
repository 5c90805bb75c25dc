"""Shared exception types for the toolkit."""


class GkzError(Exception):
    """Base class for all toolkit errors."""


class SingularMatrix(GkzError):
    pass


class LatticeNotFull(GkzError):
    pass


class BadDimensions(GkzError):
    pass


class DegenerateLifting(GkzError):
    pass


class NotATriangulation(GkzError):
    pass


class ExhaustedRetries(GkzError):
    pass


class NonGenericParameter(GkzError):
    pass


class DivergentTail(GkzError):
    pass


class SineZero(GkzError):
    pass


class NotUnimodular(GkzError):
    pass


class NotConvergent(GkzError):
    pass


class PoleAtNonpositiveInteger(GkzError):
    pass


class UndefinedRatio(GkzError):
    pass


class ZeroDenominator(GkzError):
    pass


class DegenerateParameter(GkzError):
    pass


class ScaleTooSmall(GkzError):
    pass
