"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the range an operation is defined on."""


class ConfigurationError(RuntimeError):
    """Embedded data or a runtime setting is unusable."""
