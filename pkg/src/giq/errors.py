"""Exception hierarchy shared by the engine and the CLI."""


class GiqError(Exception):
    """Base class for all engine errors."""


class InputError(GiqError, ValueError):
    """Malformed or invariant-violating user input (CLI exit code 1)."""


class SignatureMismatch(InputError):
    """Two polynomials or maps live over different rings."""


class IntegrityError(GiqError):
    """A computed object failed an internal consistency check (CLI exit code 2)."""


class BalanceError(InputError):
    """A preset was requested with weights that are not balanced."""


class DegenerateMatrixError(GiqError, ValueError):
    """A symmetric form expected to be nondegenerate is degenerate."""
