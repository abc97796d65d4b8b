"""Exception types shared across the package."""


class DualPerronError(Exception):
    """Base class for every error raised by this library."""


class DivisionUndefined(DualPerronError, ZeroDivisionError):
    """Dual division a/b with b_s = 0 and (a_s != 0 or b_d = 0)."""


class ZeroVector(DualPerronError, ValueError):
    """Normalization of a vector whose standard and dual parts are both zero."""


class DimensionMismatch(DualPerronError, ValueError):
    """Operands with incompatible shapes."""


class SingularStandardPart(DualPerronError, ValueError):
    """Matrix inversion where the standard part has no usable factorization."""


class NotSquare(DualPerronError, ValueError):
    """A square matrix was required."""


class TooLarge(DualPerronError, ValueError):
    """Input exceeds the size guard of a desk-scale routine."""


class StructureViolation(DualPerronError, ValueError):
    """Standard part is not irreducible nonnegative; the solver refuses it."""


class NonPositiveIterate(DualPerronError, ValueError):
    """Iterate whose standard part is not strictly positive componentwise."""


class NonPositiveVector(DualPerronError, ValueError):
    """Minimax ratios asked for a vector that is not strictly positive."""


class RankDeficient(DualPerronError, ValueError):
    """Dual-part recovery system is numerically singular."""


class NoPositivePerronVector(DualPerronError, ValueError):
    """Dense spectrum found no simple positive dominant eigenpair."""


class BadSpec(DualPerronError, ValueError):
    """Malformed test-matrix specification."""
