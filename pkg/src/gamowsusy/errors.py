"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class RangeError(DomainError, OverflowError):
    """Argument would overflow double precision."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of the scattering amplitude."""

    def __init__(self, k, msg=None):
        self.k = k
        super().__init__(msg or f"at pole: S(k) is singular at k={k!r}")


class NodeError(DomainError):
    """A transformation function vanishes on the evaluation grid."""

    def __init__(self, radii, msg=None):
        self.radii = list(radii)
        shown = ", ".join(f"{r:.9g}" for r in self.radii[:8])
        super().__init__(msg or f"node of the transformation function at r = {shown}")


class ParityError(DomainError):
    """Resonance index with the wrong parity for the given well."""


class ApproximationDomainError(DomainError):
    """The analytic resonance expansion is invalid for these parameters."""


class PreconditionError(DomainError):
    """An operation was called with inputs violating its contract."""


class ClassificationError(DomainError):
    """Asymptotic tail cannot be assigned to a single class."""


class ConvergenceError(RuntimeError):
    """Newton refinement failed; ``trace`` holds the iterates."""

    def __init__(self, msg, trace=()):
        self.trace = list(trace)
        super().__init__(msg)


class ApproximationWarning(UserWarning):
    """Parameters are close to the edge of an asymptotic approximation."""
