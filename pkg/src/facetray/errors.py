"""Shared exception types."""


class ParseError(ValueError):
    """Malformed JSON input (bad structure, unknown keys, invalid values)."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class CertificationError(RuntimeError):
    """Internal re-verification of a constructed certificate failed."""
