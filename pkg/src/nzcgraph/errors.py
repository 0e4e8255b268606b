class NZCError(Exception):
    """Base class for errors raised by nzcgraph."""


class InvalidEdge(NZCError, ValueError):
    pass


class SelfLoopRejected(NZCError, ValueError):
    pass


class InvalidParams(NZCError, ValueError):
    pass


class ExplicitTooLarge(NZCError):
    def __init__(self, vertex_count, cap):
        self.vertex_count = vertex_count
        self.cap = cap
        super().__init__(
            f"explicit graph would have {vertex_count} vertices, above the "
            f"explicit cap of {cap}; use the quotient path or raise the cap"
        )


class MissingSymbolInput(NZCError, ValueError):
    pass


class EmptyGrid(NZCError, ValueError):
    pass


class UnsupportedFormat(NZCError, ValueError):
    pass
