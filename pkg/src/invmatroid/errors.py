"""Exception hierarchy shared by the solvers and the command line."""


class InverseMatroidError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class MalformedInputError(InverseMatroidError, ValueError):
    """Input that cannot be interpreted (bad element ids, bad file contents)."""

    exit_code = 2


class PreconditionError(InverseMatroidError, ValueError):
    """A structural requirement of the requested problem is violated."""

    exit_code = 3


class IntegralityError(PreconditionError):
    """An integral-only problem received non-integer weights."""


class CapacityError(InverseMatroidError, RuntimeError):
    """Brute-force enumeration was asked to exceed its size bound."""

    exit_code = 4


class VerificationError(InverseMatroidError, RuntimeError):
    """A computed answer failed its own feasibility re-check."""

    exit_code = 5
