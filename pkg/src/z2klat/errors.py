"""Exception types shared across the library."""


class Z2klatError(Exception):
    pass


class InputError(Z2klatError, ValueError):
    """Malformed or mismatched inputs (lengths, moduli, ranges)."""


class DomainError(Z2klatError, ValueError):
    """Operation undefined for this input (e.g. odd modulus, k > 6)."""


class ConstructionError(Z2klatError, ValueError):
    """A construction precondition failed (e.g. AA^T + BB^T != -I)."""


class CatalogError(Z2klatError, KeyError):
    """Unknown catalog reference."""


class ResourceError(Z2klatError, RuntimeError):
    """A computation exceeded its enumeration cap or node budget.

    ``partial`` optionally carries whatever certified partial result was
    obtained before the budget ran out.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
