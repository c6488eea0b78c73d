"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed its built-in size guard."""


class MatchingError(ValueError):
    """A twist specification's matching is not a bijection on the expected labels."""


class ArcStructureError(ValueError):
    """An arc set is not a vertex-disjoint union of directed paths."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class DocumentError(ValueError):
    """A graph document failed to parse or validate.

    ``location`` points at the offending part of the document, e.g. a JSON
    key path or a line/column position.
    """

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location
