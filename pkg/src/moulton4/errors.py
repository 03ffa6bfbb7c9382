"""Exception types shared across the package."""


class MassDomainError(ValueError):
    """A mass value is non-positive or non-finite."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"mass m{index} = {value!r} must be positive and finite")


class CollisionSingularityError(ValueError):
    """Two bodies share the same line coordinate; the potential diverges."""

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"bodies {i} and {j} are coincident on the line")


class ProjectionInfinityError(ValueError):
    """Stereographic projection requested at the projection pole."""


class SeedSearchError(RuntimeError):
    """Rejection sampling exhausted its budget without an interior seed."""


class RegionExitError(RuntimeError):
    """A solver iterate left its ordering region."""


class ConvergenceError(RuntimeError):
    """An iteration failed to reach its tolerance within the step cap."""


class EnumerationError(RuntimeError):
    """One or more ordering regions failed to solve."""

    def __init__(self, failures: dict[str, Exception]):
        self.failures = failures
        detail = "; ".join(f"{label}: {exc}" for label, exc in failures.items())
        super().__init__(f"failed regions: {detail}")


class ClassMismatchError(ValueError):
    """Two configurations being compared belong to different ordering classes."""
