"""Exception types raised across the package."""


class TrielemError(Exception):
    """Base class for every package-specific error."""


class SingularMatrix(TrielemError):
    """Inversion was requested for a matrix with determinant zero."""


class NotSymmetric(TrielemError):
    """A symmetric matrix was required."""


class ZeroScale(TrielemError):
    """Rescaling by zero would degenerate the bilinear form."""


class Degenerate(TrielemError):
    """The operation needs a nondegenerate Gram matrix."""


class NotEven(TrielemError):
    """The operation is only defined for even lattices."""


class NotElementary(TrielemError):
    """The operation needs a p-elementary discriminant group."""


class UnknownName(TrielemError):
    """The requested name is not in the lattice catalog."""


class ParseError(TrielemError):
    """A lattice expression could not be parsed.

    ``offset`` is the character position of the offending input.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class InvalidKey(TrielemError):
    """Rank or generator count outside the classification's range."""


class RankMismatch(TrielemError):
    """Two lattices of equal rank were required."""


class SizeMismatch(TrielemError):
    """Matrix size does not match the lattice rank."""


class NotIsometry(TrielemError):
    """The matrix does not preserve the Gram matrix."""


class NotDefinite(TrielemError):
    """Enumeration is only possible for definite lattices."""


class RankTooLarge(TrielemError):
    """Exhaustive enumeration is guarded to small ranks."""


class InvalidRho(TrielemError):
    """Picard number outside the admissible range."""


class NonIntegralGenus(TrielemError):
    """A genus computation produced a non-integer; the configuration is
    inconsistent."""


class NegativeGenus(TrielemError):
    """A genus computation produced a negative value; the configuration is
    inconsistent."""


class NotClassified(TrielemError):
    """The lattice is not one of the classified embeddable lattices."""
