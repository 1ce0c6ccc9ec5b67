"""Exception hierarchy shared by every ppcode module."""


class PPCError(Exception):
    """Base class for all errors raised by ppcode."""


# -- finite fields ---------------------------------------------------------

class NotPrimeError(PPCError, ValueError):
    pass


class ReducibleModulusError(PPCError, ValueError):
    pass


class NoModulusFoundError(PPCError, RuntimeError):
    pass


class UnsupportedFieldError(PPCError, ValueError):
    pass


class ZeroElementError(PPCError, ZeroDivisionError):
    pass


class DivisionByZeroPolyError(PPCError, ZeroDivisionError):
    pass


class FieldMismatchError(PPCError, ValueError):
    pass


# -- code construction -----------------------------------------------------

class DegreesOutOfRangeError(PPCError, ValueError):
    pass


class NonCoprimeOrdersError(PPCError, ValueError):
    pass


class FixedPointError(PPCError, ValueError):
    """An evaluation start point is fixed by its affine map."""


class DegreeTooLargeError(PPCError, ValueError):
    pass


class ShapeMismatchError(PPCError, ValueError):
    pass


class TooLargeToEnumerateError(PPCError, ValueError):
    pass


# -- decoding --------------------------------------------------------------

class WindowOutOfRangeError(PPCError, ValueError):
    pass


class InternalNoSolutionError(PPCError, RuntimeError):
    pass


class UnsupportedAffineMapError(PPCError, ValueError):
    pass


class DimensionBoundViolatedError(PPCError, RuntimeError):
    pass


class SubspaceTooLargeToEnumerateError(TooLargeToEnumerateError):
    pass


# -- cyclic analysis -------------------------------------------------------

class NonDefaultInstantiationError(PPCError, ValueError):
    pass


class InexactDivisionError(PPCError, RuntimeError):
    pass


class MultiplicityExceedsCharacteristicError(PPCError, ValueError):
    pass


# -- harness ---------------------------------------------------------------

class TooManyErrorsError(PPCError, ValueError):
    pass


class InfeasibleRateError(PPCError, ValueError):
    pass


class ConfigError(PPCError, ValueError):
    pass
