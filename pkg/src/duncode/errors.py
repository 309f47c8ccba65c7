"""Exception hierarchy.  Everything derives from ValueError."""


class DuncodeError(ValueError):
    pass


class ContractError(DuncodeError):
    """A caller handed a function something its contract forbids."""


class InvalidInputError(DuncodeError):
    """Text contains something that is not a Unicode scalar value."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class MalformedUnitError(DuncodeError):
    pass


class DecodeError(DuncodeError, UnicodeError):
    """Strict-mode decoding failure.  ``offset`` is the unit's byte offset."""

    def __init__(self, reason, offset):
        super().__init__("%s at offset %d" % (reason, offset))
        self.reason = reason
        self.offset = offset


class TableError(DuncodeError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)
        self.lineno = lineno
