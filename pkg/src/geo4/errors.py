"""Exception types shared across the package.

Exit-code mapping used by the CLI: InputError subclasses -> 2,
UnsupportedError subclasses -> 3.
"""


class Geo4Error(Exception):
    pass


class InputError(Geo4Error):
    """Malformed or invalid input data (CLI exit code 2)."""


class UnsupportedError(Geo4Error):
    """Valid input outside the implemented families (CLI exit code 3)."""


class UnsupportedDimension(InputError):
    pass


class InvalidCubic(InputError):
    pass


class NotUnimodular(InputError):
    pass


class RangeExceeded(UnsupportedError):
    pass


class NotPolycyclic(UnsupportedError):
    pass


class BadWord(InputError):
    pass


class MonodromyNotTrivial(UnsupportedError):
    pass


class UnsupportedFlatBase(UnsupportedError):
    pass


class UnsupportedBase(UnsupportedError):
    pass


class Unsupported(UnsupportedError):
    pass


class NotNilpotent(UnsupportedError):
    pass


class NotHyperbolic(InputError):
    pass


class InconsistentPresentation(Geo4Error):
    pass


class ValidationError(InputError):
    """Carries the offending field path for descriptor documents."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")
