"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`IndexTraceError`.  The CLI maps :class:`JobError` subclasses to exit
code 2 and every other :class:`IndexTraceError` to exit code 1.
"""


class IndexTraceError(Exception):
    """Base class for all domain errors."""


# root systems
class NotFiniteType(IndexTraceError, ValueError):
    pass


class DimensionMismatch(IndexTraceError, ValueError):
    pass


class IndexOutOfRange(IndexTraceError, IndexError):
    pass


class CapExceeded(IndexTraceError, RuntimeError):
    pass


# discrete series
class NotDominant(IndexTraceError, ValueError):
    pass


class NotIntegral(IndexTraceError, ValueError):
    pass


class NonIntegerDimension(IndexTraceError, ArithmeticError):
    """Weyl dimension came out non-integral; indicates a bug or a bad grading."""


class FactorizationViolation(IndexTraceError, ArithmeticError):
    """tau_G != factor * dim V.  Must never fire."""


# genera
class InvalidDimension(IndexTraceError, ValueError):
    pass


class LengthMismatch(IndexTraceError, ValueError):
    pass


class SeriesOrderCapExceeded(IndexTraceError, ValueError):
    pass


# job documents
class JobError(IndexTraceError):
    pass


class ParseError(JobError):
    pass


class SchemaError(JobError):
    pass
