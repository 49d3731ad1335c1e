"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(ValueError):
    """A root/inversion target is not enclosed by the supplied bracket."""


class SizeError(ValueError):
    """An array argument is too short for the requested stencil or transform."""


class ConfigurationError(ValueError):
    """Grid, method, or evolution configuration is inconsistent."""


class NonConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its evaluation budget.

    Carries the best available estimate in ``best``.
    """

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


class NumericalAbort(RuntimeError):
    """Time evolution produced non-finite samples.

    Carries the last finite field in ``last_field`` and the diagnostics
    recorded up to the abort in ``diagnostics``.
    """

    def __init__(self, message, last_field, diagnostics):
        super().__init__(message)
        self.last_field = last_field
        self.diagnostics = diagnostics
