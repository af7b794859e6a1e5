"""Exception hierarchy shared by the whole library."""


class MultigradedError(Exception):
    """Base class for all library errors."""


class DimensionError(MultigradedError):
    """Multidegree lengths or grading dimensions do not match."""


class SpaceMismatchError(MultigradedError):
    """Operands live over different graded spaces."""


class HomogeneityError(MultigradedError):
    """A map entry violates the degree bookkeeping K(V^x0 x ... x V^xk) <= V^(sum+weight)."""


class ArityError(MultigradedError):
    """Wrong number of arguments for a multilinear map."""


class AlternationError(MultigradedError):
    """A map claimed to be graded-alternating is not."""


class StructureError(MultigradedError):
    """An input fails a structure precondition ([P,P] != 0, non-cocycle, ...)."""


class ResourceLimitError(MultigradedError):
    """A requested computation exceeds the configured slice-size guard."""


class ValidationError(MultigradedError):
    """A problem file failed parsing or validation."""
