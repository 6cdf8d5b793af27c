"""Exception hierarchy shared by every module in the package."""


class CevianError(Exception):
    pass


class DegenerateTriangleError(CevianError, ValueError):
    """Raised when three vertices are collinear."""


class DegenerateIntersectionError(CevianError, ArithmeticError):
    """Raised when two lines are parallel or coincident."""


class DegreeOverflowError(CevianError, OverflowError):
    pass


class OracleDomainError(CevianError, ValueError):
    """Raised by the float oracle on coincident points or a zero base."""
