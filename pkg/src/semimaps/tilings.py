"""Torus quotients of Archimedean tilings.

A tiling is described by its translation cell: ``orbit_classes`` vertices
per cell and one face template per translation class of faces.  A template
lists the face's corners as ``(class, dx, dy)``, meaning vertex ``class``
of the cell offset ``(dx, dy)`` from the base cell.  Quotienting by an
integer sublattice identifies cells whose offsets differ by a lattice
vector.

Cell conventions (coordinates are in the tiling's own translation basis):

``[3^6]``
    the triangular lattice; cells are lattice points, an up and a down
    triangle per cell.
``[4^4]``
    the square grid.
``[6^3]``
    the honeycomb with two vertex classes, one hexagon per cell.
``[3^3,4^2]``
    class 0 on row 2j, class 1 on row 2j+1; squares between rows 2j and
    2j+1, a strip of triangles between 2j+1 and 2j+2.
``[3^1,6^1,3^1,6^1]``
    edge midpoints of the triangular lattice: class 0 horizontal, class 1
    diagonal, class 2 antidiagonal edges; one hexagon per lattice point.
``[3^2,4^1,3^1,4^1]``
    the snub of the square grid: vertices are the four corners of a grid
    square, classes 0..3 counter-clockwise from the lower left.
"""
from __future__ import annotations

from dataclasses import dataclass

from .classify import TypeString, as_type
from .errors import DegenerateBasis, MapValidationError, QuotientNotPolyhedral, UnknownTiling
from .polymap import PolyhedralMap, build_map


@dataclass(frozen=True)
class TilingSpec:
    type: TypeString
    orbit_classes: int
    face_rules: tuple
    name: str = ""

    def faces_per_cell(self) -> dict:
        out = {}
        for rule in self.face_rules:
            out[len(rule)] = out.get(len(rule), 0) + 1
        return out


@dataclass(frozen=True)
class LatticeBasis:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def det(self) -> int:
        return self.a[0] * self.b[1] - self.a[1] * self.b[0]

    def __str__(self):
        return f"{self.a[0]} {self.a[1]} {self.b[0]} {self.b[1]}"


def _spec(name, classes, rules):
    return TilingSpec(TypeString.parse(name), classes, tuple(tuple(r) for r in rules), name)


_SPECS = [
    _spec("[3^6]", 1, [
        [(0, 0, 0), (0, 1, 0), (0, 0, 1)],
        [(0, 1, 0), (0, 1, 1), (0, 0, 1)],
    ]),
    _spec("[4^4]", 1, [
        [(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
    ]),
    _spec("[6^3]", 2, [
        [(0, 0, 0), (1, -1, 0), (0, -1, 0), (1, -1, -1), (0, 0, -1), (1, 0, -1)],
    ]),
    _spec("[3^3,4^2]", 2, [
        [(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)],
        [(1, 0, 0), (1, 1, 0), (0, 0, 1)],
        [(1, 0, 0), (0, 0, 1), (0, -1, 1)],
    ]),
    _spec("[3^1,6^1,3^1,6^1]", 3, [
        [(0, 0, 0), (2, 0, 0), (1, 0, 0)],
        [(1, 1, 0), (0, 0, 1), (2, 0, 0)],
        [(0, 0, 0), (1, 0, 0), (2, -1, 0), (0, -1, 0), (1, 0, -1), (2, 0, -1)],
    ]),
    _spec("[3^2,4^1,3^1,4^1]", 4, [
        [(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)],
        [(0, 0, 0), (1, -1, 0), (2, -1, -1), (3, 0, -1)],
        [(0, 0, 0), (1, 0, 0), (2, 0, -1)],
        [(0, 0, 0), (2, 0, -1), (3, 0, -1)],
        [(1, -1, 0), (0, 0, 0), (3, 0, 0)],
        [(1, -1, 0), (3, 0, 0), (2, -1, 0)],
    ]),
]


def builtin_tilings() -> dict:
    return {s.type: s for s in _SPECS}


def get_tiling(t) -> TilingSpec:
    if isinstance(t, TilingSpec):
        return t
    key = as_type(t)
    try:
        return builtin_tilings()[key]
    except KeyError:
        raise UnknownTiling(str(key)) from None


class _Reducer:
    """Canonical coset representatives of Z^2 modulo a full-rank sublattice."""

    def __init__(self, basis: LatticeBasis):
        (a1, a2), (b1, b2) = basis.a, basis.b
        det = basis.det
        if det == 0:
            raise DegenerateBasis(basis.a, basis.b)
        g, s, t = _xgcd(a2, b2)
        # (v1, r) generates the second coordinates; (p, 0) the lattice points with y = 0
        self.r = g
        self.p = abs(det) // g
        self.v1 = (s * a1 + t * b1) % self.p
        self.size = abs(det)

    def reduce(self, x: int, y: int) -> tuple:
        k = y // self.r
        x -= k * self.v1
        y -= k * self.r
        return (x % self.p, y)

    def index(self, x: int, y: int) -> int:
        x, y = self.reduce(x, y)
        return y * self.p + x


def _xgcd(a: int, b: int) -> tuple:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def as_basis(basis) -> LatticeBasis:
    if isinstance(basis, LatticeBasis):
        return basis
    basis = tuple(basis)
    if len(basis) == 4:
        return LatticeBasis(basis[:2], basis[2:])
    a, b = basis
    return LatticeBasis(a, b)


def cells(basis) -> list:
    """Representative cell offsets, one per coset."""
    red = _Reducer(as_basis(basis))
    return [(x, y) for y in range(red.r) for x in range(red.p)]


def vertex_id(spec: TilingSpec, basis, cls: int, x: int, y: int) -> int:
    red = _Reducer(as_basis(basis))
    return cls * red.size + red.index(x, y)


def torus_quotient(spec, basis) -> PolyhedralMap:
    """The quotient of ``spec`` by the lattice spanned by ``basis``.

    Vertex ``class * |det| + (y * p + x)`` is vertex ``class`` of the cell
    with canonical offset ``(x, y)``.
    """
    spec = get_tiling(spec)
    basis = as_basis(basis)
    red = _Reducer(basis)
    n = red.size
    faces = []
    for y in range(red.r):
        for x in range(red.p):
            for rule in spec.face_rules:
                faces.append(tuple(c * n + red.index(x + dx, y + dy) for c, dx, dy in rule))
    header = [f"tiling {spec.type}", f"basis {basis}"]
    try:
        return build_map(faces, comments=header)
    except MapValidationError as exc:
        raise QuotientNotPolyhedral(basis.det, exc) from exc


def translation(spec, basis, shift) -> dict:
    """Vertex permutation of the quotient induced by translating by ``shift`` cells."""
    spec = get_tiling(spec)
    red = _Reducer(as_basis(basis))
    n = red.size
    dx, dy = shift
    perm = {}
    for y in range(red.r):
        for x in range(red.p):
            for c in range(spec.orbit_classes):
                perm[c * n + red.index(x, y)] = c * n + red.index(x + dx, y + dy)
    return perm


def random_bases(count: int, rng, max_entry: int = 8, min_det: int = 1, max_det: int | None = None):
    """Yield ``count`` random bases with ``min_det <= |det| <= max_det``."""
    made = 0
    while made < count:
        a = (rng.randint(-max_entry, max_entry), rng.randint(-max_entry, max_entry))
        b = (rng.randint(-max_entry, max_entry), rng.randint(-max_entry, max_entry))
        d = abs(a[0] * b[1] - a[1] * b[0])
        if d < min_det or (max_det is not None and d > max_det):
            continue
        made += 1
        yield LatticeBasis(a, b)


__all__ = [
    "TilingSpec", "LatticeBasis", "builtin_tilings", "get_tiling", "torus_quotient",
    "translation", "cells", "vertex_id", "random_bases",
]
