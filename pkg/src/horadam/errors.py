"""Exception types shared across the package."""


class HoradamError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(HoradamError, ZeroDivisionError):
    """Raised on division by an exact zero scalar."""


class ParseError(HoradamError, ValueError):
    """Malformed scalar or preset text.

    ``position`` is the zero-based offset of the offending character.
    """

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class IndexGuardExceeded(HoradamError, ValueError):
    """A term index lies outside the configured guard."""


class PreconditionUnmet(HoradamError):
    """An identity's hypothesis fails at a concrete instance.

    ``reason`` is a short stable tag such as ``"w_{r-1}!=0"``.
    """

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class UnknownPreset(HoradamError, ValueError):
    pass


class UnknownIdentity(HoradamError, KeyError):
    pass


class ConfigError(HoradamError, ValueError):
    pass
