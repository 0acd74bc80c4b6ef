"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class AbelianPointsError(Exception):
    """Base class for all library errors."""


class ResourceLimitError(AbelianPointsError):
    """A configured search or effort bound was exhausted (CLI exit 3)."""


class NotFoundError(AbelianPointsError):
    """A bounded search finished without a hit.

    Distinct from :class:`ResourceLimitError`: the scan completed, the
    predicate is unsatisfiable in the scanned range.
    """


class HypothesisError(AbelianPointsError, ValueError):
    """Input violates a named hypothesis of the construction being built."""

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        msg = f"hypothesis violated: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotSquarefreeError(AbelianPointsError, ValueError):
    """Reduction mod p is not squarefree, so a cycle type is undefined."""


class UnsupportedError(AbelianPointsError, ValueError):
    """Input lies outside the explicitly supported range (e.g. degree > 4)."""


class InternalContradiction(AbelianPointsError, AssertionError):
    """A postcondition that should be impossible to violate failed."""
