"""Exception hierarchy shared by every module."""


class DepthStabError(Exception):
    """Base class for all library errors."""


class HypergraphError(DepthStabError, ValueError):
    def __init__(self, message, edge_index=None):
        super().__init__(message)
        self.edge_index = edge_index


class EmptyEdge(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class SizeLimitExceeded(DepthStabError):
    pass


# The polytope and harness modules speak of "caps" rather than size limits.
CapExceeded = SizeLimitExceeded


class UnknownFamily(DepthStabError, ValueError):
    pass


class BadParams(DepthStabError, ValueError):
    pass


class MixedAmbient(DepthStabError, ValueError):
    pass


class NegativeExponentOutsideF(DepthStabError, ValueError):
    pass


class ZeroOrUnitIdeal(DepthStabError, ValueError):
    pass


class ZeroIdeal(ZeroOrUnitIdeal):
    pass


class NotBalanced(DepthStabError):
    pass


class NoEdges(DepthStabError):
    pass


class ParseError(DepthStabError, ValueError):
    pass


class CacheCorrupt(DepthStabError):
    pass


class TheoremViolation(DepthStabError):
    """Raised when a computed instance contradicts an asserted theorem.

    The offending report is attached so callers can dump it.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
