"""Exception types shared across the package."""


class QueaError(Exception):
    pass


class NonRepresentableExponent(QueaError):
    """A q-power cannot be written in the exact coefficient field.

    Callers may catch this and retry with the numeric backend.
    """


class NotReduced(QueaError):
    pass


class TruncationExceeded(QueaError):
    pass


class TruncationLeak(QueaError):
    """An action hits a K_q-type outside the configured truncation set."""

    def __init__(self, leaked_types, message=None):
        self.leaked_types = tuple(leaked_types)
        super().__init__(message or "types outside truncation: %s" % (self.leaked_types,))


class RankUnstable(QueaError):
    pass


class BasisDegenerate(QueaError):
    pass


class MalformedWord(QueaError):
    pass


class NotEmbeddable(QueaError):
    pass


class DimensionCapExceeded(QueaError):
    pass


class WrongType(QueaError):
    pass


class HypothesisFailed(QueaError):
    pass


class Inconclusive(QueaError):
    """Numeric backend cannot certify a discrete verdict."""
