"""Exception hierarchy shared by all modules."""


class DeBruijnError(ValueError):
    """Base class for every error raised by this package."""


class AlphabetTooSmall(DeBruijnError):
    pass


class LetterOutOfRange(DeBruijnError):
    pass


class AlphabetMismatch(DeBruijnError):
    pass


class EmptyWord(DeBruijnError):
    pass


class InvalidParameter(DeBruijnError):
    pass


class NotPreNecklace(DeBruijnError):
    pass


class CapExceeded(DeBruijnError):
    pass


class LengthMismatch(DeBruijnError):
    pass
