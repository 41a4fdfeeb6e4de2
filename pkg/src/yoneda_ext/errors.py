"""Exception hierarchy shared by every layer of the engine."""


class HomAlgError(Exception):
    """Base class for all domain errors raised by yoneda_ext."""


class ContractViolation(HomAlgError, ValueError):
    """Shapes, rings or endpoints of the arguments do not fit together."""


class RingMismatch(ContractViolation):
    pass


class UnsupportedRing(HomAlgError):
    """The operation has no finitely generated realization over this ring."""


class NotExact(HomAlgError):
    """A candidate chain of morphisms fails to be an exact sequence."""


class NotMono(NotExact):
    def __init__(self, msg="first arrow is not a monomorphism"):
        super().__init__(msg)


class NotEpi(NotExact):
    def __init__(self, msg="last arrow is not an epimorphism"):
        super().__init__(msg)


class NotExactAt(NotExact):
    def __init__(self, index, msg=None):
        self.index = index
        super().__init__(msg or f"NotExactAt({index}): image of incoming arrow != kernel of outgoing arrow")


class NoSolution(HomAlgError):
    """A requested lift or factorization does not exist."""


class InternalConsistencyError(HomAlgError, AssertionError):
    """A mathematically guaranteed identity failed; indicates a bug."""


class SizeBoundExceeded(HomAlgError):
    """An enumeration would exceed the configured element bound."""


class MalformedInput(HomAlgError):
    """A JSON document does not match the module/morphism/sequence schema."""
