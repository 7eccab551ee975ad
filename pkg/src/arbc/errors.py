"""Exception hierarchy shared by every module.

``ArbcError`` subclasses signal bad data (wrong shapes, singular input,
malformed key files); the CLI maps them to a data-error exit code.
``NotFound`` is kept separate because a failed attack is an expected
outcome rather than a data problem.
"""


class ArbcError(Exception):
    pass


class DimensionMismatch(ArbcError, ValueError):
    pass


class SingularMatrix(ArbcError):
    pass


class RankDeficient(ArbcError):
    pass


class DimensionTooLarge(ArbcError):
    pass


class TableTooLarge(ArbcError):
    pass


class DistanceTooSmall(ArbcError):
    pass


class WeightExceedsT(ArbcError):
    pass


class DecodeFailure(ArbcError):
    pass


class MalformedCiphertext(ArbcError):
    pass


class RetriesExceeded(ArbcError):
    pass


class NoSolution(ArbcError):
    pass


class MultipleSolutions(ArbcError):
    pass


class FormatError(ArbcError):
    """A key or ciphertext file failed to parse or does not match its envelope."""


class NotFound(Exception):
    """Raised by information-set decoding when the iteration budget runs out."""

    def __init__(self, iterations, message=None):
        self.iterations = iterations
        super().__init__(message or f"no solution after {iterations} iterations")
