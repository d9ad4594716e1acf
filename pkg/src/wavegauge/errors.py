"""Exception types shared across the package."""


class WavegaugeError(Exception):
    """Base class for package errors."""


class ConfigError(WavegaugeError):
    """Bad configuration value or malformed config file."""


class NumericsError(WavegaugeError):
    """A numerical procedure failed (bracket lost, solve singular, domain left)."""
