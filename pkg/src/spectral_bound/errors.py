class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class CertificationError(RuntimeError):
    """Stored metadata for a named graph disagrees with the graph actually built."""
