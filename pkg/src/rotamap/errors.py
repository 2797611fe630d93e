"""Exception hierarchy shared by every rotamap module."""


class RotamapError(Exception):
    """Base class for all errors raised by rotamap."""


class IndexOutOfRange(RotamapError, IndexError):
    pass


class UnsupportedFamily(RotamapError, ValueError):
    pass


class DuplicateItem(RotamapError, ValueError):
    pass


class NotABijection(RotamapError, ValueError):
    pass


class ItemNotFound(RotamapError, KeyError):
    pass


class InvalidMap(RotamapError, ValueError):
    pass


class StarMismatch(InvalidMap):
    def __init__(self, node, message=None):
        self.node = node
        super().__init__(message or f"rotation at node {node} does not cover its star")


class NotSingleCycle(InvalidMap):
    def __init__(self, node, message=None):
        self.node = node
        super().__init__(message or f"rotation at node {node} is not a single cycle")


class NotConnected(RotamapError, ValueError):
    pass


class PositionOutOfRange(RotamapError, IndexError):
    pass


class EndpointMismatch(RotamapError, ValueError):
    pass


class InvalidWalk(RotamapError, ValueError):
    pass


class ZeroLength(RotamapError, ValueError):
    pass


class PositionNotOnFace(RotamapError, ValueError):
    pass


class InvariantViolation(RotamapError, AssertionError):
    pass


class FormatError(RotamapError, ValueError):
    """A document does not parse against its file format."""
