"""Exception types shared across the package."""

from __future__ import annotations


class PragmaQLError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(PragmaQLError):
    """Formula text rejected by the tokenizer or parser.

    Carries the 1-based character position of the offending spot.  For
    syntax errors, ``expected`` is the set of token kinds that would have
    been accepted there; end of input is reported at ``len(text) + 1``.
    """

    def __init__(self, message: str, position: int, expected=frozenset()):
        super().__init__(message)
        self.position = position
        self.expected = frozenset(expected)


class ProjectorError(PragmaQLError):
    """Matrix or vector data does not describe a valid projector or state."""

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.code = code


class ModelError(PragmaQLError):
    """Malformed model, overlay, or lattice document."""

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.code = code


class UnknownNameError(PragmaQLError):
    """A state, property, or atom name is not declared by the model."""


class NonQuantumFormulaError(PragmaQLError):
    """An operation restricted to the quantum fragment got a wider formula."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)
