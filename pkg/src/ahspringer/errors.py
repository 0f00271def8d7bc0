"""Shared exception types."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of an operation.

    Distinct from a plain ValueError (malformed argument) so callers can
    tell "you passed garbage" from "this element is not nilpotent".
    """
