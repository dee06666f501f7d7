"""Polyhedral maps on closed surfaces.

A map is given by its faces, each a cyclic sequence of integer vertex ids.
:func:`build_map` validates the face list once; every other function in
the package assumes a validated :class:`PolyhedralMap`.

The text file format is line based::

    # comment
    name u1 0
    f 0 1 2 3

``f`` lines list one face in cyclic order, ``name`` lines attach a label to
a vertex id. Line order carries no meaning.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    DualNotPolyhedral,
    DuplicateFace,
    EdgeNotInTwoFaces,
    FaceTooShort,
    InvalidVertexId,
    MapFormatError,
    MapValidationError,
    NonPolyhedralIntersection,
    RepeatedVertexInFace,
    UnknownVertex,
    VertexLinkNotSingleCycle,
)

Edge = tuple


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def cycle_key(cycle: Sequence[int]) -> tuple:
    """Key identifying a cycle up to rotation and reflection."""
    n = len(cycle)
    best = None
    for seq in (tuple(cycle), tuple(reversed(cycle))):
        for i in range(n):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def face_edges(face: Sequence[int]):
    n = len(face)
    return [_edge(face[i], face[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True, eq=False)
class PolyhedralMap:
    """A validated polyhedral map. Construct with :func:`build_map`."""

    faces: tuple
    names: Mapping[str, int] = field(default_factory=dict)
    comments: tuple = ()

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.faces for v in f)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for f in self.faces for e in face_edges(f))

    @cached_property
    def faces_at(self) -> dict:
        """vertex -> indices of the faces containing it"""
        inc = defaultdict(list)
        for i, f in enumerate(self.faces):
            for v in f:
                inc[v].append(i)
        return dict(inc)

    @cached_property
    def faces_on_edge(self) -> dict:
        inc = defaultdict(list)
        for i, f in enumerate(self.faces):
            for e in face_edges(f):
                inc[e].append(i)
        return dict(inc)

    @cached_property
    def neighbours(self) -> dict:
        adj = defaultdict(set)
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def labels(self) -> dict:
        """vertex id -> label, for vertices that have one"""
        return {v: k for k, v in self.names.items()}

    @property
    def f0(self) -> int:
        return len(self.vertices)

    @property
    def f1(self) -> int:
        return len(self.edges)

    @property
    def f2(self) -> int:
        return len(self.faces)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def vertex(self, name: str) -> int:
        """Vertex id for a drawing label."""
        try:
            return self.names[name]
        except KeyError:
            raise UnknownVertex(name) from None

    def degree(self, v: int) -> int:
        return len(self.faces_at[v])

    def is_connected(self) -> bool:
        if not self.faces:
            return True
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for v in self.faces[i]:
                for j in self.faces_at[v]:
                    if j not in seen:
                        seen.add(j)
                        todo.append(j)
        return len(seen) == len(self.faces)

    def relabel(self, perm: Mapping[int, int]) -> "PolyhedralMap":
        faces = [tuple(perm[v] for v in f) for f in self.faces]
        names = {k: perm[v] for k, v in self.names.items()}
        return build_map(faces, names=names)

    def __eq__(self, other):
        if not isinstance(other, PolyhedralMap):
            return NotImplemented
        return self.face_keys == other.face_keys

    def __hash__(self):
        return hash(self.face_keys)

    @cached_property
    def face_keys(self) -> frozenset:
        return frozenset(cycle_key(f) for f in self.faces)

    def __repr__(self):
        return f"PolyhedralMap(f0={self.f0}, f1={self.f1}, f2={self.f2})"


@dataclass(frozen=True)
class SurfaceInfo:
    euler_characteristic: int
    orientable: bool

    @property
    def name(self) -> str:
        chi, o = self.euler_characteristic, self.orientable
        if chi == 2:
            return "sphere"
        if chi == 0:
            return "torus" if o else "klein_bottle"
        if chi == 1 and not o:
            return "projective_plane"
        if o:
            return f"orientable genus {(2 - chi) // 2}"
        return f"non-orientable genus {2 - chi}"


def build_map(faces: Iterable[Sequence[int]], names: Mapping[str, int] | None = None,
              comments: Sequence[str] = ()) -> PolyhedralMap:
    """Validate ``faces`` and return the map they describe.

    Raises a :class:`~semimaps.errors.MapValidationError` subclass naming the
    first violated invariant.
    """
    faces = tuple(tuple(f) for f in faces)
    for f in faces:
        for v in f:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InvalidVertexId(v)
        if len(f) < 3:
            raise FaceTooShort(f)
        if len(set(f)) != len(f):
            raise RepeatedVertexInFace(f)

    seen = {}
    for f in faces:
        k = cycle_key(f)
        if k in seen:
            raise DuplicateFace(seen[k], f)
        seen[k] = f

    on_edge = defaultdict(list)
    for i, f in enumerate(faces):
        for e in face_edges(f):
            on_edge[e].append(i)
    for e in sorted(on_edge):
        if len(on_edge[e]) != 2:
            raise EdgeNotInTwoFaces(e, len(on_edge[e]))

    at = defaultdict(list)
    for i, f in enumerate(faces):
        for v in f:
            at[v].append(i)
    sets = [frozenset(f) for f in faces]
    edge_sets = [set(face_edges(f)) for f in faces]
    checked = set()
    for v in sorted(at):
        inc = at[v]
        for x in range(len(inc)):
            for y in range(x + 1, len(inc)):
                i, j = inc[x], inc[y]
                if (i, j) in checked:
                    continue
                checked.add((i, j))
                common = sets[i] & sets[j]
                if len(common) == 1:
                    continue
                if len(common) == 2 and _edge(*common) in edge_sets[i] and _edge(*common) in edge_sets[j]:
                    continue
                raise NonPolyhedralIntersection(faces[i], faces[j])

    for v in sorted(at):
        # link of v: one edge per incident face, joining the two neighbours of v in it
        link = defaultdict(list)
        for i in at[v]:
            f = faces[i]
            k = f.index(v)
            a, b = f[k - 1], f[(k + 1) % len(f)]
            link[a].append(b)
            link[b].append(a)
        if any(len(nb) != 2 for nb in link.values()):
            raise VertexLinkNotSingleCycle(v)
        start = next(iter(link))
        prev, cur, steps = None, start, 0
        while True:
            a, b = link[cur]
            nxt = a if a != prev else b
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != len(link):
            raise VertexLinkNotSingleCycle(v)

    names = dict(names or {})
    return PolyhedralMap(faces=faces, names=names, comments=tuple(comments))


def _orientation_from(m: PolyhedralMap, seed: int) -> bool:
    orient = {}
    for start in [seed] + list(range(len(m.faces))):
        if start in orient:
            continue
        orient[start] = m.faces[start]
        todo = deque([start])
        while todo:
            i = todo.popleft()
            f = orient[i]
            n = len(f)
            for k in range(n):
                a, b = f[k], f[(k + 1) % n]
                for j in m.faces_on_edge[_edge(a, b)]:
                    if j == i:
                        continue
                    g = orient.get(j)
                    if g is None:
                        g = m.faces[j]
                        if _has_directed(g, a, b):
                            g = tuple(reversed(g))
                        orient[j] = g
                        todo.append(j)
                    elif _has_directed(g, a, b):
                        return False
    return True


def _has_directed(face, a, b) -> bool:
    n = len(face)
    k = face.index(a)
    return face[(k + 1) % n] == b


def is_orientable(m: PolyhedralMap, seed: int = 0) -> bool:
    """Try to orient every face consistently, starting from face ``seed``."""
    if not m.faces:
        return True
    return _orientation_from(m, seed % len(m.faces))


def surface_info(m: PolyhedralMap, seed: int = 0) -> SurfaceInfo:
    chi = m.f0 - m.f1 + m.f2
    return SurfaceInfo(euler_characteristic=chi, orientable=is_orientable(m, seed))


def vertex_link(m: PolyhedralMap, v: int) -> tuple:
    """The faces around ``v`` in cyclic order, as ``(face index, face size)`` pairs."""
    if v not in m.faces_at:
        raise UnknownVertex(v)
    inc = m.faces_at[v]
    first = inc[0]
    order = [first]
    f = m.faces[first]
    k = f.index(v)
    w = f[(k + 1) % len(f)]
    cur = first
    while True:
        a, b = m.faces_on_edge[_edge(v, w)]
        nxt = b if a == cur else a
        if nxt == first:
            break
        order.append(nxt)
        g = m.faces[nxt]
        k = g.index(v)
        w = g[k - 1] if g[(k + 1) % len(g)] == w else g[(k + 1) % len(g)]
        cur = nxt
    return tuple((i, len(m.faces[i])) for i in order)


def dual(m: PolyhedralMap) -> PolyhedralMap:
    """Dual map: vertex i is face i of ``m``; one face per vertex of ``m``."""
    faces = [tuple(i for i, _ in vertex_link(m, v)) for v in sorted(m.vertices)]
    try:
        return build_map(faces)
    except MapValidationError as exc:
        raise DualNotPolyhedral(exc) from exc


# ---------------------------------------------------------------- file format

def parse_map(text: str) -> PolyhedralMap:
    faces = []
    names = {}
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        try:
            if parts[0] == "f":
                faces.append(tuple(int(x) for x in parts[1:]))
            elif parts[0] == "name" and len(parts) == 3:
                if parts[1] in names:
                    raise MapFormatError(f"line {lineno}: label {parts[1]!r} defined twice")
                names[parts[1]] = int(parts[2])
            else:
                raise MapFormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, MapFormatError):
                raise
            raise MapFormatError(f"line {lineno}: {exc}") from None
    return build_map(faces, names=names, comments=comments)


def format_map(m: PolyhedralMap, header: Sequence[str] | None = None) -> str:
    lines = [f"# {c}".rstrip() for c in (m.comments if header is None else header)]
    for label, v in sorted(m.names.items(), key=lambda kv: (kv[1], kv[0])):
        lines.append(f"name {label} {v}")
    for f in m.faces:
        lines.append("f " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def read_map(path) -> PolyhedralMap:
    return parse_map(Path(path).read_text(encoding="utf-8"))


def write_map(m: PolyhedralMap, path, header: Sequence[str] | None = None) -> None:
    Path(path).write_text(format_map(m, header), encoding="utf-8")
