"""Exception hierarchy shared by all nlacs modules."""


class NlacsError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(NlacsError):
    pass


class SingularMatrix(NlacsError):
    pass


class BadIndex(NlacsError):
    pass


class NotALieAlgebra(NlacsError):
    """The structure constants violate the Jacobi identity."""


class NotNilpotent(NlacsError):
    pass


class NotAnIdeal(NlacsError):
    pass


class OddDimension(NlacsError):
    pass


class NotAlmostComplex(NlacsError):
    """The candidate endomorphism does not square to minus the identity."""


class NotIntegrable(NlacsError):
    """The almost complex structure has a nonzero Nijenhuis tensor."""


class IndexOutOfRange(NlacsError):
    pass


class NotJAdapted(NlacsError):
    """Basis columns do not come in (X, JX) pairs."""


class BadPairing(NlacsError):
    """The requested (X, JX) index pairing does not match the structure."""


class ForeignParameter(NlacsError):
    """A parameter value was supplied for a symbol the family does not use."""


class JacobiViolated(NlacsError):
    """The parameter point lies outside the family's Jacobi variety."""


class ConjugationInconsistent(NlacsError):
    """A complex equation table is malformed (bad basis keys or indices)."""
