"""Exception types shared across the package."""


class SeqControlError(Exception):
    """Base class for all package-specific errors."""


class MalformedInputError(SeqControlError, ValueError):
    """An operation received structurally inconsistent data (e.g. a vote
    that is not an order over the expected candidates)."""


class ValidationError(SeqControlError):
    """A control instance violates one or more model invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ContractError(SeqControlError):
    """An operation was called outside its precondition (wrong game phase,
    missing assignment variable, ...)."""


class SizeLimitError(SeqControlError):
    """The search guard refused an input whose worst-case cost estimate
    exceeds the configured bound."""


class IllegalActionError(SeqControlError):
    """The chair (or universe) attempted a move the rules forbid.

    ``reason`` carries the human-readable statement of the violated rule.
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class FormulaParseError(SeqControlError, ValueError):
    """Syntax error in a boolean formula, with the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DocumentError(SeqControlError, ValueError):
    """An instance document could not be decoded; ``path`` names the field."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
