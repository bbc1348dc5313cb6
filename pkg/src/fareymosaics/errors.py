"""Exception types shared across the package."""


class FareyMosaicsError(Exception):
    """Base class for all package errors."""


class DomainError(FareyMosaicsError):
    """Input outside the mathematical domain of an operation."""


class RangeError(FareyMosaicsError):
    """Index outside the valid range of a sequence or tuple."""


class GeometryError(FareyMosaicsError):
    """Invalid polygon or geometric construction."""


class OverlapError(GeometryError):
    """Two polygons that must be interior-disjoint intersect."""


class BudgetError(FareyMosaicsError):
    """A configured enumeration budget was exceeded."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class SizeError(FareyMosaicsError):
    """An enumeration request exceeds the configured size limit."""


class AmbiguityError(FareyMosaicsError):
    """A tile could be attached to more than one mosaic."""

    def __init__(self, message, tile_k=None, candidates=()):
        super().__init__(message)
        self.tile_k = tile_k
        self.candidates = tuple(candidates)


class OrphanWarning(UserWarning):
    """Tiles left unattached to any mosaic (enumeration bound too small)."""


class ShapeError(FareyMosaicsError):
    """Mosaic outline does not fit the naming convention's repertoire."""

    def __init__(self, message, vertex_count=None):
        super().__init__(message)
        self.vertex_count = vertex_count


class PartnerMissing(FareyMosaicsError):
    """The diagonal-reflection partner of a mosaic was not found."""
