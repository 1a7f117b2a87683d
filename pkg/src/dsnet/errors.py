"""Exception hierarchy shared across the package.

Plain ``ValueError`` is used for ordinary argument/domain violations; the
classes below mark failure modes that callers (and the CLI exit-code table)
need to tell apart.
"""


class DSNetError(Exception):
    """Base class for package-specific failures."""


class ConfigError(DSNetError):
    """Invalid configuration or hyperparameter setting."""


class DataError(DSNetError):
    """Input data violates the documented schema or invariants."""


class RegistrationError(DSNetError):
    """Least-squares registration of a curve is ill posed."""


class RankDeficiencyError(DSNetError):
    """Basis construction failed because the knot set is degenerate."""


class NotPositiveDefiniteError(DSNetError):
    """Covariance factorization failed even after jitter escalation."""


class UnsupportedParameterError(DSNetError):
    """A parameter value outside the implemented family was requested."""


class DivergenceError(DSNetError):
    """Training produced a non-finite loss."""


class VariantError(DSNetError):
    """Operation不supported for this model variant."""


class ModelIOError(DSNetError):
    """Model file is missing a version, corrupted, or incompatible."""
