"""Exception hierarchy shared across the package."""


class WeatherLensError(Exception):
    """Base class for all package errors."""


class ParseError(WeatherLensError):
    """A raw input table cannot be read (bad header, bad layout)."""


class ConfigurationError(WeatherLensError):
    """An input file or configuration value is unusable."""


class UndefinedStatisticError(WeatherLensError):
    """A statistic is undefined for the given inputs (too few points, no variance)."""


class UndefinedSkillError(WeatherLensError):
    """The skill-score denominator is zero (climatology is 0 or 1)."""


class DesignError(WeatherLensError):
    """A model design matrix cannot be built."""


class ProjectionDomainError(WeatherLensError):
    """A coordinate falls outside the projection's valid domain."""


class BundleError(WeatherLensError):
    """An artifact bundle is missing files or fails manifest verification."""


class StageError(WeatherLensError):
    """A pipeline stage failed; carries the stage name."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"stage '{stage}' failed: {message}")
        self.stage = stage


class NotFittedError(ValueError, AttributeError, WeatherLensError):
    """An estimator method was called before ``fit``."""
