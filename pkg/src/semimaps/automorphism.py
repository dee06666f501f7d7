"""Automorphism groups of polyhedral maps by flag propagation.

A flag is an incident (vertex, edge, face) triple.  Flags are numbered
``0..4*f1-1`` and three involutions change one component each.  An
automorphism is determined by the image of a single flag, so the whole
group is found by trying every compatible image of one base flag and
propagating along the involutions.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

from .classify import face_cycle_type
from .errors import DisconnectedMap
from .polymap import PolyhedralMap, cycle_key, _edge

if os.environ.get("SEMIMAPS_PURE_PYTHON"):
    from ._flagkernel_py import search as _search
    KERNEL = "python"
else:
    try:
        from ._flagkernel import search as _search
        KERNEL = "cython"
    except ImportError:  # extension not built
        from ._flagkernel_py import search as _search
        KERNEL = "python"


class FlagSystem:
    """Flags of a map with the involutions s0 (vertex), s1 (edge), s2 (face).

    Flag ``(i, k, d)`` is vertex ``face[k]`` of face ``i`` together with the
    edge from it towards ``face[k+d]``.
    """

    def __init__(self, m: PolyhedralMap):
        self.map = m
        index = {}
        flags = []
        for i, f in enumerate(m.faces):
            for k in range(len(f)):
                for d in (1, -1):
                    index[(i, k, d)] = len(flags)
                    flags.append((i, k, d))
        n = len(flags)
        s0 = np.empty(n, dtype=np.int_)
        s1 = np.empty(n, dtype=np.int_)
        s2 = np.empty(n, dtype=np.int_)
        vertex = np.empty(n, dtype=np.int_)
        face = np.empty(n, dtype=np.int_)
        for x, (i, k, d) in enumerate(flags):
            f = m.faces[i]
            p = len(f)
            v, w = f[k], f[(k + d) % p]
            vertex[x] = v
            face[x] = i
            s0[x] = index[(i, (k + d) % p, -d)]
            s1[x] = index[(i, k, -d)]
            a, b = m.faces_on_edge[_edge(v, w)]
            j = b if a == i else a
            g = m.faces[j]
            kk = g.index(v)
            dd = 1 if g[(kk + 1) % len(g)] == w else -1
            s2[x] = index[(j, kk, dd)]
        self.flags = flags
        self.involutions = np.stack([s0, s1, s2])
        self.vertex = vertex
        self.face = face

    def __len__(self):
        return len(self.flags)

    def edge(self, x: int) -> tuple:
        i, k, d = self.flags[x]
        f = self.map.faces[i]
        return _edge(f[k], f[(k + d) % len(f)])

    @cached_property
    def colours(self) -> list:
        """Isomorphism-invariant label of each flag, used to prune candidate images."""
        m = self.map
        vtype = {v: face_cycle_type(m, v).expanded for v in m.vertices}
        s0, _, s2 = self.involutions
        out = []
        for x in range(len(self.flags)):
            out.append((len(m.faces[self.face[x]]), len(m.faces[self.face[s2[x]]]),
                        vtype[int(self.vertex[x])], vtype[int(self.vertex[s0[x]])]))
        return out


@dataclass(frozen=True, eq=False)
class MapAutomorphism:
    """A vertex permutation preserving the face set; faces and edges follow."""

    vertex_perm: Mapping[int, int]
    face_perm: tuple
    flag_perm: tuple = ()

    @cached_property
    def key(self) -> tuple:
        return tuple(sorted(self.vertex_perm.items()))

    def __eq__(self, other):
        return isinstance(other, MapAutomorphism) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __call__(self, v: int) -> int:
        return self.vertex_perm[v]

    def edge_image(self, e) -> tuple:
        return _edge(self.vertex_perm[e[0]], self.vertex_perm[e[1]])

    def __mul__(self, other: "MapAutomorphism") -> "MapAutomorphism":
        """``(g * h)(v) == g(h(v))``"""
        vp = {v: self.vertex_perm[w] for v, w in other.vertex_perm.items()}
        fp = tuple(self.face_perm[j] for j in other.face_perm)
        return MapAutomorphism(vp, fp)

    def inverse(self) -> "MapAutomorphism":
        vp = {w: v for v, w in self.vertex_perm.items()}
        fp = [0] * len(self.face_perm)
        for i, j in enumerate(self.face_perm):
            fp[j] = i
        return MapAutomorphism(vp, tuple(fp))

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.vertex_perm.items())

    def preserves(self, m: PolyhedralMap) -> bool:
        keys = m.face_keys
        return all(cycle_key([self.vertex_perm[v] for v in f]) in keys for f in m.faces)

    def __repr__(self):
        moved = sum(1 for v, w in self.vertex_perm.items() if v != w)
        return f"MapAutomorphism(moves {moved} vertices)"


def _from_flag_perm(fs: FlagSystem, phi, target: FlagSystem | None = None) -> MapAutomorphism:
    target = target or fs
    vp = {}
    fp = [0] * len(fs.map.faces)
    for x, y in enumerate(phi):
        vp[int(fs.vertex[x])] = int(target.vertex[y])
        fp[int(fs.face[x])] = int(target.face[y])
    return MapAutomorphism(vp, tuple(fp), tuple(phi))


def _require_connected(m):
    if not m.is_connected():
        raise DisconnectedMap()


def _flag_system(m: PolyhedralMap) -> FlagSystem:
    # cached on the (immutable) map instance
    fs = m.__dict__.get("_flag_system")
    if fs is None:
        fs = FlagSystem(m)
        m.__dict__["_flag_system"] = fs
    return fs


def _candidates(src: FlagSystem, dst: FlagSystem, base: int) -> list:
    c = src.colours[base]
    return [y for y, cy in enumerate(dst.colours) if cy == c]


def automorphism_group(m: PolyhedralMap, base_flag: int | None = None) -> frozenset:
    """Every automorphism of ``m``, orientation-reversing ones included."""
    _require_connected(m)
    cache = m.__dict__.setdefault("_aut_cache", {})
    if base_flag in cache:
        return cache[base_flag]
    fs = _flag_system(m)
    base = 0 if base_flag is None else base_flag % len(fs)
    perms = _search(fs.involutions, fs.involutions, base, _candidates(fs, fs, base))
    group = frozenset(_from_flag_perm(fs, phi) for phi in perms)
    cache[base_flag] = group
    return group


def group_order(m: PolyhedralMap) -> int:
    return len(automorphism_group(m))


def is_isomorphic(m1: PolyhedralMap, m2: PolyhedralMap) -> bool:
    return find_isomorphism(m1, m2) is not None


def find_isomorphism(m1: PolyhedralMap, m2: PolyhedralMap) -> MapAutomorphism | None:
    """A vertex bijection from ``m1`` to ``m2`` carrying faces to faces, if any."""
    if (m1.f0, m1.f1, m1.f2) != (m2.f0, m2.f1, m2.f2):
        return None
    _require_connected(m1)
    _require_connected(m2)
    a, b = _flag_system(m1), _flag_system(m2)
    cands = _candidates(a, b, 0)
    for t in cands:
        found = _search(a.involutions, b.involutions, 0, [t])
        if found:
            return _from_flag_perm(a, found[0], b)
    return None


def _orbits(items, images) -> list:
    seen = set()
    out = []
    for x in sorted(items):
        if x in seen:
            continue
        orb = sorted(images(x))
        seen.update(orb)
        out.append(tuple(orb))
    return out


def vertex_orbits(m: PolyhedralMap) -> list:
    """Vertex orbits, each sorted, ordered by least member."""
    group = automorphism_group(m)
    return _orbits(m.vertices, lambda v: {g.vertex_perm[v] for g in group})


def face_orbits(m: PolyhedralMap) -> list:
    """Face-index orbits, each sorted, ordered by least member."""
    group = automorphism_group(m)
    return _orbits(range(len(m.faces)), lambda i: {g.face_perm[i] for g in group})


def is_vertex_transitive(m: PolyhedralMap) -> bool:
    return len(vertex_orbits(m)) == 1


def is_face_transitive(m: PolyhedralMap) -> bool:
    return len(face_orbits(m)) == 1
