"""Exception hierarchy shared across the package."""


class CodedimError(Exception):
    """Base class for all errors raised by codedim."""


class InputError(CodedimError, ValueError):
    """Malformed user input: bad codeword syntax, bad edges, bad flags."""


class GuardError(CodedimError):
    """A size guard was exceeded; the computation was refused."""


class VoidComplexError(CodedimError):
    """An operation that needs at least the empty face met the void complex."""


class ConsistencyError(CodedimError):
    """Two evaluation routes that must agree disagreed; indicates a bug."""
