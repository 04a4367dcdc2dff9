"""Exception types raised across the package."""


class FleischnerError(Exception):
    """Base class for every error raised by this package."""


class MapError(FleischnerError, ValueError):
    """Invalid rotation system or an illegal operation on a plane map."""


class DartReused(MapError):
    pass


class DanglingDart(MapError):
    pass


class LoopEdge(MapError):
    pass


class NotPlanarEmbedding(MapError):
    pass


class Disconnected(MapError):
    pass


class BridgeEdge(MapError):
    pass


class ChordEndpointsEqual(MapError):
    pass


class CornerNotOnFace(MapError):
    pass


class UnknownVertex(MapError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class TwoFactorError(FleischnerError, ValueError):
    pass


class DegreeViolation(TwoFactorError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree} in the edge set (expected 2)")
        self.vertex = vertex
        self.degree = degree


class MatchingNotPerfect(TwoFactorError):
    pass


class NotCubic(TwoFactorError):
    pass


class LimitExceeded(FleischnerError):
    pass


class ConstructionError(FleischnerError):
    """The construction pipeline hit a state its invariants rule out."""


class DualDisconnectedOverX(ConstructionError):
    pass


class ParityClash(ConstructionError):
    pass


class NoBondOrdering(ConstructionError):
    pass


class ChordParallelInSimple(ConstructionError):
    pass


class DiamondOverlap(ConstructionError):
    pass


class EdgeNotPresentForRemoval(ConstructionError):
    pass


class NotInClass(ConstructionError):
    pass


class SizeLimit(FleischnerError):
    pass


class UnknownName(FleischnerError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class BadParity(FleischnerError, ValueError):
    pass


class PmgSyntaxError(FleischnerError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class LayoutDegenerate(UserWarning):
    """Barycentric layout collapsed; a circular layout was used instead."""
