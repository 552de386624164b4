"""Exception types raised across the package.

Every error derives from :class:`SimpEvalError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class SimpEvalError(ValueError):
    """Base class for all package errors."""


class EmptyInput(SimpEvalError):
    """The source (complex) document of a triple has no tokens."""


class EmptyReference(SimpEvalError):
    """The reference document has no tokens."""


class EmptyDocument(SimpEvalError):
    """A readability score was requested for a document with no words."""


class ZeroDenominator(SimpEvalError):
    """The comparison corpus never contains the token, so the ratio is undefined."""


class LengthMismatch(SimpEvalError):
    """Two paired sequences differ in length."""


class DegenerateInput(SimpEvalError):
    """A sequence is too short or constant for the requested statistic."""


class LineCountMismatch(SimpEvalError):
    """Line-aligned files have different numbers of lines."""

    def __init__(self, message, shorter_path=None, line=None):
        super().__init__(message)
        self.shorter_path = shorter_path
        self.line = line


class DecodingError(SimpEvalError):
    """A line of an input file is not valid UTF-8."""

    def __init__(self, path, line, reason):
        super().__init__(f"{path}:{line}: not valid UTF-8 ({reason})")
        self.path = path
        self.line = line


class SizesExceedCorpus(SimpEvalError):
    """Requested split sizes add up to more pairs than are available."""
