"""Exception types shared across the package."""


class HopfGaloisError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(HopfGaloisError):
    pass


class RingMismatch(HopfGaloisError):
    pass


class NonEuclideanRing(HopfGaloisError):
    pass


class ScalarParseError(HopfGaloisError):
    pass


class InvalidGroupTable(HopfGaloisError):
    pass


class UnsupportedBase(HopfGaloisError):
    pass


class AssociativityFailure(HopfGaloisError):
    pass


class RetryBudgetExhausted(HopfGaloisError):
    pass


class FiberNotGalois(HopfGaloisError):
    pass


class DegenerateForm(HopfGaloisError):
    pass


class CharTwo(HopfGaloisError):
    pass


class NotNakayama(HopfGaloisError):
    pass


class NotNormalized(HopfGaloisError):
    pass


class NotCosemisimple(HopfGaloisError):
    pass


class ModuleMismatch(HopfGaloisError):
    pass


class NoCertificate(HopfGaloisError):
    pass


class NotASubgroup(HopfGaloisError):
    pass


class DegreeTooLarge(HopfGaloisError):
    pass


class StructureInvalid(HopfGaloisError):
    pass


class LambdaUnitNotFound(HopfGaloisError):
    pass


class InvalidFamily(HopfGaloisError):
    pass


class InputError(HopfGaloisError):
    """Malformed user input (CLI/service exit code 2)."""
