"""Exception hierarchy.

Input errors map to CLI exit code 2, internal inconsistencies to exit code 3.
"""


class CurveError(Exception):
    """Base class for every error raised by the engine."""


class InputError(CurveError, ValueError):
    """Malformed or unsupported input."""


class InternalInconsistency(CurveError, RuntimeError):
    """Two routes that must agree did not; always an engine bug."""


# exact fields

class NonMonic(InputError):
    pass


class NotSquarefree(InputError):
    pass


class DivisionByZero(CurveError, ZeroDivisionError):
    pass


class ZeroDivisor(CurveError, ZeroDivisionError):
    """Inverting a zero divisor; the minimal polynomial is reducible."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


# polynomials and parsing

class PolySyntaxError(InputError):
    def __init__(self, message, pos=None, text=None):
        if pos is not None:
            message = f"{message} at position {pos}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(message)
        self.pos = pos


class InhomogeneousInput(InputError):
    pass


class UnknownSymbol(InputError):
    pass


class DegenerateRestriction(CurveError):
    pass


class NotOnCurve(InputError):
    pass


# linear algebra

class DegreeMismatch(CurveError, ValueError):
    pass


class BadPrime(CurveError):
    pass


# global invariants

class ZeroGradient(InputError):
    pass


class NoStabilization(InputError):
    pass


class NotFoundBelowDegree(InternalInconsistency):
    pass


class OutOfRange(CurveError, ValueError):
    pass


# local invariants

class NonIsolated(InputError):
    pass


class NotSingular(InputError):
    pass


class UnclassifiedType(CurveError, ValueError):
    pass


class EmptySingularSet(CurveError, ValueError):
    pass


# arrangements / cli

class ProportionalLines(InputError):
    pass


class MalformedTuple(InputError):
    pass


class IncompleteSingularData(CurveError):
    pass
