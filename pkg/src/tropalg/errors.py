"""Exception hierarchy."""


class TropAlgError(Exception):
    pass


class DomainError(TropAlgError, ValueError):
    """Operands live in different structures, or an argument violates a precondition."""


class StructuralError(TropAlgError, ValueError):
    """Malformed input data (ragged tables, unknown labels, bad JSON)."""


class ResourceError(TropAlgError, RuntimeError):
    """An exhaustive enumeration would exceed the configured bound."""


class UnsupportedError(TropAlgError, NotImplementedError):
    """The operation is not available for this backend."""


class DescentError(TropAlgError):
    """Gluing data fails the cocycle condition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
