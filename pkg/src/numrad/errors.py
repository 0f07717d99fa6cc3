"""Exception hierarchy shared by every numrad module."""


class NumradError(Exception):
    """Base class for all errors raised by numrad."""


class NotHermitian(NumradError, ValueError):
    """Input expected to be Hermitian is not, beyond roundoff tolerance."""


class IndefiniteInput(NumradError, ValueError):
    """Input expected to be positive semidefinite has a negative eigenvalue."""


class DomainError(NumradError, ValueError):
    """A spectral function produced a non-finite value on the spectrum."""


class NumericalFailure(NumradError, ArithmeticError):
    """An eigen- or singular-value solver did not converge."""


class DimensionMismatch(NumradError, ValueError):
    """Operands have incompatible shapes."""


class NegativeWeight(NumradError, ValueError):
    """A weight matrix has an eigenvalue below the negative rank cut."""


class SingularWeight(NumradError, ValueError):
    """The operation needs a strictly positive weight."""


class NegativeEntry(NumradError, ValueError):
    """A matrix expected to have real nonnegative entries does not."""


class UnknownSuite(NumradError, KeyError):
    """Requested verification suite is not registered."""


class ConstructionFailure(NumradError, RuntimeError):
    """A generated instance failed its own hypothesis residual check."""
