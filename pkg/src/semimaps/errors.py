"""Exception hierarchy shared by all modules."""


class SemimapsError(Exception):
    """Base class for every error raised by this package."""


class MapValidationError(SemimapsError, ValueError):
    """A face list does not describe a polyhedral map on a closed surface.

    ``invariant`` names the violated condition; subclasses carry the
    offending faces or edges as attributes.
    """

    invariant = "polyhedral map"


class FaceTooShort(MapValidationError):
    invariant = "face length >= 3"

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"face {self.face} has fewer than 3 vertices")


class InvalidVertexId(MapValidationError):
    invariant = "vertex ids are non-negative integers"

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex id {vertex!r} is not a non-negative integer")


class RepeatedVertexInFace(MapValidationError):
    invariant = "no face repeats a vertex"

    def __init__(self, face):
        self.face = tuple(face)
        super().__init__(f"face {self.face} repeats a vertex")


class EdgeNotInTwoFaces(MapValidationError):
    invariant = "every edge lies in exactly two faces"

    def __init__(self, edge, count):
        self.edge = tuple(sorted(edge))
        self.count = count
        super().__init__(f"edge {self.edge} lies in {count} face(s)")


class NonPolyhedralIntersection(MapValidationError):
    invariant = "two faces meet in nothing, a vertex or an edge"

    def __init__(self, face_a, face_b):
        self.face_a = tuple(face_a)
        self.face_b = tuple(face_b)
        super().__init__(f"faces {self.face_a} and {self.face_b} meet in more than a vertex or an edge")


class DuplicateFace(NonPolyhedralIntersection):
    """Two faces have the same boundary cycle.

    A special case of a non-polyhedral intersection: the faces share every edge.
    """

    invariant = "no two faces are identical"

    def __init__(self, face_a, face_b):
        super().__init__(face_a, face_b)
        self.args = (f"faces {self.face_a} and {self.face_b} are the same cycle",)


class VertexLinkNotSingleCycle(MapValidationError):
    invariant = "faces around each vertex form one cycle"

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"faces around vertex {vertex} do not form a single cycle")


class DualNotPolyhedral(SemimapsError):
    def __init__(self, cause):
        self.cause = cause
        super().__init__(f"dual is not a polyhedral map: {cause}")


class UnknownVertex(SemimapsError, KeyError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")

    def __str__(self):
        return self.args[0]


class MapFormatError(SemimapsError, ValueError):
    """A map file could not be parsed."""


class TypeStringError(SemimapsError, ValueError):
    """A type string is malformed."""


class SizeTooSmall(TypeStringError):
    def __init__(self, sizes):
        self.sizes = tuple(sizes)
        super().__init__(f"face-size sequence {self.sizes} needs at least 3 entries, each >= 3")


class UnsupportedSurface(SemimapsError, ValueError):
    def __init__(self, surface):
        self.surface = surface
        super().__init__(f"unsupported surface {surface!r}; expected 'torus' or 'klein_bottle'")


class DisconnectedMap(SemimapsError, ValueError):
    def __init__(self):
        super().__init__("map is not connected")


class DegenerateBasis(SemimapsError, ValueError):
    def __init__(self, a, b):
        self.a, self.b = tuple(a), tuple(b)
        super().__init__(f"lattice basis {self.a}, {self.b} has determinant 0")


class QuotientNotPolyhedral(SemimapsError, ValueError):
    """The torus quotient fails map validation; usually the lattice is too small."""

    def __init__(self, det, cause):
        self.det = det
        self.cause = cause
        self.invariant = cause.invariant
        super().__init__(f"quotient with |det| = {det} is not polyhedral: {cause}")


class UnknownTiling(SemimapsError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"no built-in tiling of type {name}")

    def __str__(self):
        return self.args[0]


class UnknownName(SemimapsError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"no catalog entry named {name!r}")

    def __str__(self):
        return self.args[0]


class SelectorInapplicable(SemimapsError, ValueError):
    def __init__(self, selector, reason):
        self.selector = selector
        super().__init__(f"selector {selector!r} is inapplicable: {reason}")


class NotTwoRegular(SemimapsError, ValueError):
    def __init__(self, vertex, degree):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree} in a graph required to be 2-regular")
