"""Kernel exceptions.

Every error raised on purpose by the kernel derives from ``KernelError`` so that
front ends can report it uniformly.
"""


class KernelError(Exception):
    """Base class for all kernel errors."""


class ParseError(KernelError):
    """Input text does not conform to the grammar."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None and column is not None else ""
        super().__init__(f"{where}{message}")


class DirectiveConflict(KernelError):
    """An ``#external`` directive is repeated for the same theory atom."""


class PartitionConflict(KernelError):
    """A theory atom would be both founded and external."""


class UniverseNotClosed(KernelError):
    """A universe of theory atoms is not closed under complement."""


class UniverseTooLarge(KernelError):
    """Too many theory atoms to enumerate candidate solutions."""


class BoxTooLarge(KernelError):
    """The finite box has more cells than the configured cap."""


class TooManyAtoms(KernelError):
    """Too many atoms for exhaustive stable-model enumeration."""


class CaseSplitLimit(KernelError):
    """Disequality case splitting exceeds the configured branch cap."""


class NotAbsolute(KernelError):
    """Entailment requested from a theory without absolute complement."""


class TheoryMismatch(KernelError):
    """An atom is outside the fragment a theory can decide."""


class HeadNotTheory(KernelError):
    """Head shifting requested for a rule whose head is not a theory atom."""


class SignatureMismatch(KernelError):
    """Two theories cannot be compared over a shared signature."""


class NameCollision(KernelError):
    """An auxiliary variable name clashes with a user variable."""


class BoundsError(KernelError, ValueError):
    """Malformed interval bounds."""
