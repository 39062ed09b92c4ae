"""Exception types raised across the toolkit."""


class FramegapError(Exception):
    """Base class for all toolkit errors."""


class DomainError(FramegapError, ValueError):
    """An argument lies outside the domain of the operation."""


class IterationLimitError(FramegapError, RuntimeError):
    """A bracketed search did not resolve within the allowed iterations."""


class UnsupportedMeasureError(FramegapError, TypeError):
    """The operation is not defined for this measure variant."""


class ToleranceTooTightError(FramegapError, ValueError):
    """The requested tolerance is not larger than the certified truncation error."""


class InsufficientPointsError(FramegapError, ValueError):
    """Fewer than two points of the set fall inside the requested window."""


class AuditFailure(FramegapError, AssertionError):
    """A structural audit of a constructed spectrum found an offending point."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class LemmaViolation(FramegapError, AssertionError):
    """A zero-set scan produced a solution off the lines l2 = +-l1."""

    def __init__(self, message, solutions=()):
        super().__init__(message)
        self.solutions = list(solutions)


class LinkFailure(FramegapError, RuntimeError):
    """One link of a verification chain failed."""

    def __init__(self, link, details):
        super().__init__(f"link {link!r} failed: {details}")
        self.link = link
        self.details = details


class NotSpectralError(FramegapError, ValueError):
    """No spectrum can be constructed for the given additive-measure parameters.

    Attributes
    ----------
    difference_condition, sum_condition : bool
        Whether t1 - t2 is a nonzero integer / t1 + t2 an integer other than -1.
    nearest : tuple of float
        The closest parameter pair (t1, t2') for which a spectrum exists,
        obtained by moving t2 only.
    """

    def __init__(self, t1, t2, nearest):
        self.t1 = t1
        self.t2 = t2
        self.difference_condition = False
        self.sum_condition = False
        self.nearest = nearest
        super().__init__(
            f"rho_(t1={t1!r}, t2={t2!r}) is not spectral: t1-t2 is not a nonzero "
            f"integer and t1+t2 is not an integer other than -1; nearest spectral "
            f"parameters (t1, t2) = ({nearest[0]!r}, {nearest[1]!r})"
        )
