"""Exception hierarchy shared by the library and the command line."""


class KronRSKError(ValueError):
    """Base class for every error raised by kronrsk."""


class SizeMismatchError(KronRSKError):
    pass


class InvalidTableauError(KronRSKError):
    pass


class ModeError(KronRSKError):
    """Matrix entries are incompatible with the requested (integer/binary) mode."""


class InvalidPacketError(KronRSKError):
    pass


class NotInImageError(KronRSKError):
    """An inverse map was asked to invert something outside the image."""


class NotMinimalError(KronRSKError):
    pass


class OracleLimitError(KronRSKError):
    """The character oracle was asked for n above the configured cap."""


class MalformedInputError(KronRSKError):
    """Input JSON does not have the documented structure."""
