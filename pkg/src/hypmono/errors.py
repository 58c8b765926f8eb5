class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to reach its tolerance within the cap."""


class IntegrandSingularityWarning(RuntimeWarning):
    """The Euler integrand has an (integrable) endpoint singularity."""
