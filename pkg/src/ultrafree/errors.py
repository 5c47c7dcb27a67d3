"""Shared failure modes for the self-checking pipelines."""

__all__ = ["PreconditionViolated", "ClaimViolation", "InternalContradiction"]


class PreconditionViolated(ValueError):
    """The input does not satisfy the operation's stated hypothesis."""


class ClaimViolation(RuntimeError):
    """A pipeline postcondition failed on this input.

    Surfaced, never silently repaired: it signals either a bug or an input
    that does not satisfy the theory the pipeline encodes.
    """


class InternalContradiction(RuntimeError):
    """A constructive procedure hit a state its hypothesis rules out
    (e.g. a forbidden clique appeared); carries the offending witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
