"""Exception hierarchy shared by all modules."""


class AlgebroidError(Exception):
    """Base class for all library errors."""


class ParseError(AlgebroidError):
    """Malformed polynomial / input file."""


class PreconditionError(AlgebroidError):
    """An operation was called outside its contract."""


class InconsistencyError(AlgebroidError):
    """Two independently computed results disagree (should never happen)."""
