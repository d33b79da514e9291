"""Exception hierarchy for blobdecomp."""


class BlobError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(BlobError, ValueError):
    pass


class EvenOrSmallL(ParameterError):
    pass


class MOutOfRange(ParameterError):
    pass


class BadN(ParameterError):
    pass


class MalformedWalk(BlobError, ValueError):
    pass


class SizeMismatch(BlobError, ValueError):
    pass


class BadPosition(BlobError, ValueError):
    pass


class NotInResidueClass(BlobError, ValueError):
    pass


class NotAPartition(BlobError, ValueError):
    pass


class IndexMismatch(BlobError, ValueError):
    pass


class TooLarge(BlobError, ValueError):
    pass


class InconsistentData(BlobError, RuntimeError):
    """A graded dimension came out with a negative coefficient."""


class NotSolvable(BlobError, RuntimeError):
    """The triangular recovery system has no unique solution."""
