"""Exception hierarchy shared across the package."""


class ClosedGraphsError(Exception):
    """Base class for all package-specific errors."""


class EdgeListParseError(ClosedGraphsError, ValueError):
    """Malformed edge-list input (loop line, bad token count, empty graph)."""


class UnknownVertexError(ClosedGraphsError, ValueError):
    """A vertex name was referenced that the graph does not contain."""


class LabellingError(ClosedGraphsError, ValueError):
    """A labelling violates its invariants or does not match the graph."""


class CapExceededError(ClosedGraphsError):
    """A brute-force search was refused because the input exceeds the cap."""


class NotClosedComplexError(ClosedGraphsError, ValueError):
    """An operation requiring a closed complex was given one that is not."""


class OrderSpecError(ClosedGraphsError, ValueError):
    """A textual term-order specification could not be parsed."""


class InternalInvariantError(ClosedGraphsError):
    """A theorem-backed runtime assertion failed; indicates a bug."""
