"""Auxiliary graphs that certify a map is not vertex-transitive.

Each selector picks a set of vertex pairs from a map using only
combinatorial data, so every automorphism of the map maps the selected
graph to itself.  If that graph has two components of different sizes, or
two vertices of different degree, no automorphism can carry one vertex to
the other.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import NotTwoRegular, SelectorInapplicable
from .polymap import PolyhedralMap, vertex_link, _edge

SELECTOR_KINDS = (
    "quad_diagonals",
    "long_diagonals",
    "shared_edges",
    "nice_edges",
    "induced_3_cycles",
    "non_edge_complement",
)


@dataclass(frozen=True)
class Selector:
    kind: str
    size: int | None = None

    def __str__(self):
        return self.kind if self.size is None else f"{self.kind}({self.size})"


@dataclass(frozen=True)
class AuxGraphSpec:
    selectors: tuple

    @classmethod
    def parse(cls, text: str) -> "AuxGraphSpec":
        """Parse ``quad_diagonals+long_diagonals(12)`` style selector lists."""
        out = []
        for part in re.split(r"[+\s]+", text.strip()):
            if not part:
                continue
            m = re.fullmatch(r"([a-z_0-9]+?)(?:\((\d+)\))?", part)
            if not m or m.group(1) not in SELECTOR_KINDS:
                raise SelectorInapplicable(part, "unknown selector; expected one of " + ", ".join(SELECTOR_KINDS))
            kind, size = m.group(1), m.group(2)
            if kind in ("long_diagonals", "shared_edges") and size is None:
                raise SelectorInapplicable(part, f"{kind} needs a face size, e.g. {kind}(8)")
            out.append(Selector(kind, int(size) if size else None))
        if not out:
            raise SelectorInapplicable(text, "empty selector list")
        return cls(tuple(out))

    def __str__(self):
        return "+".join(str(s) for s in self.selectors)


def as_spec(spec) -> AuxGraphSpec:
    if isinstance(spec, AuxGraphSpec):
        return spec
    if isinstance(spec, Selector):
        return AuxGraphSpec((spec,))
    return AuxGraphSpec.parse(spec)


@dataclass(frozen=True)
class AuxGraph:
    vertices: frozenset
    edges: frozenset

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return adj


def _faces_of_size(m, p):
    return [f for f in m.faces if len(f) == p]


def _quad_diagonals(m, sel):
    quads = _faces_of_size(m, 4)
    if not quads:
        raise SelectorInapplicable(str(sel), "map has no 4-gons")
    return {_edge(f[0], f[2]) for f in quads} | {_edge(f[1], f[3]) for f in quads}


def _long_diagonals(m, sel):
    p = sel.size
    if p % 2:
        raise SelectorInapplicable(str(sel), f"{p}-gons have no long diagonals")
    faces = _faces_of_size(m, p)
    if not faces:
        raise SelectorInapplicable(str(sel), f"map has no {p}-gons")
    k = p // 2
    return {_edge(f[i], f[i + k]) for f in faces for i in range(k)}


def _shared_edges(m, sel):
    p = sel.size
    if not _faces_of_size(m, p):
        raise SelectorInapplicable(str(sel), f"map has no {p}-gons")
    out = set()
    for e, (i, j) in m.faces_on_edge.items():
        if len(m.faces[i]) == p and len(m.faces[j]) == p:
            out.add(e)
    return out


def _triangle_split(m, u, w) -> tuple:
    """Triangles on the two sides of edge uw at u, bounded by the non-triangles."""
    link = [i for i, _ in vertex_link(m, u)]
    on = set(m.faces_on_edge[_edge(u, w)])
    n = len(link)
    for k in range(n):
        if link[k] in on and link[(k + 1) % n] in on:
            break
    seq = [len(m.faces[link[(k + 1 + j) % n]]) for j in range(n)]
    lead = next((j for j, s in enumerate(seq) if s != 3), n)
    trail = next((j for j, s in enumerate(reversed(seq)) if s != 3), n)
    return tuple(sorted((lead, trail)))


def _nice_edges(m, sel):
    if not _faces_of_size(m, 3):
        raise SelectorInapplicable(str(sel), "map has no 3-gons")
    if all(len(f) == 3 for f in m.faces):
        raise SelectorInapplicable(str(sel), "map has no faces other than 3-gons")
    return {e for e in m.edges if _triangle_split(m, *e) == (1, 3) == _triangle_split(m, e[1], e[0])}


def induced_triangles(m: PolyhedralMap) -> list:
    """3-cycles of the edge graph that do not bound a face."""
    facial = {frozenset(f) for f in m.faces if len(f) == 3}
    nb = m.neighbours
    out = []
    for u, v in sorted(m.edges):
        for w in sorted(nb[u] & nb[v]):
            if w > v and frozenset((u, v, w)) not in facial:
                out.append((u, v, w))
    return out


def _induced_3_cycles(m, sel):
    out = set()
    for u, v, w in induced_triangles(m):
        out |= {_edge(u, v), _edge(v, w), _edge(u, w)}
    return out


def _non_edge_complement(m, sel):
    return {(u, v) for u, v in combinations(sorted(m.vertices), 2) if (u, v) not in m.edges}


_SELECT = {
    "quad_diagonals": _quad_diagonals,
    "long_diagonals": _long_diagonals,
    "shared_edges": _shared_edges,
    "nice_edges": _nice_edges,
    "induced_3_cycles": _induced_3_cycles,
    "non_edge_complement": _non_edge_complement,
}


def auxiliary_graph(m: PolyhedralMap, spec) -> AuxGraph:
    """Graph on all vertices of ``m`` whose edges are the union of the selections."""
    spec = as_spec(spec)
    edges = set()
    for sel in spec.selectors:
        edges |= _SELECT[sel.kind](m, sel)
    return AuxGraph(frozenset(m.vertices), frozenset(edges))


def cycles(graph: AuxGraph) -> list:
    """Vertex cycles of a 2-regular graph, each starting at its least vertex."""
    adj = graph.adjacency
    for v in sorted(adj):
        if len(adj[v]) != 2:
            raise NotTwoRegular(v, len(adj[v]))
    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(tuple(cyc))
    return out


def cycle_components(graph: AuxGraph) -> tuple:
    """Sorted multiset of component lengths of a 2-regular graph."""
    return tuple(sorted(len(c) for c in cycles(graph)))


@dataclass(frozen=True)
class Witness:
    """Two vertices no automorphism can swap, and why."""

    selector: str
    reason: str  # "component length" or "degree"
    vertices: tuple
    values: tuple
    components: tuple = ()

    def render(self, m: PolyhedralMap | None = None) -> str:
        name = (lambda v: m.label(v)) if m is not None else str
        a, b = self.vertices
        lines = [f"selector: {self.selector}"]
        if self.components:
            lines.append("components: " + " ".join(str(n) for n in self.components))
        lines.append(f"separating vertices: {name(a)} ({self.reason} {self.values[0]}), "
                     f"{name(b)} ({self.reason} {self.values[1]})")
        return "\n".join(lines)


def transitivity_obstruction(m: PolyhedralMap, spec) -> Witness | None:
    spec = as_spec(spec)
    g = auxiliary_graph(m, spec)
    adj = g.adjacency
    deg = {v: len(adj[v]) for v in sorted(adj)}
    first = min(deg)
    for v, d in deg.items():
        if d != deg[first]:
            return Witness(str(spec), "degree", (first, v), (deg[first], d))
    if deg[first] != 2:
        return None
    comps = cycles(g)
    lengths = Counter(len(c) for c in comps)
    if len(lengths) < 2:
        return None
    a = comps[0]
    b = next(c for c in comps if len(c) != len(a))
    return Witness(str(spec), "component length", (a[0], b[0]), (len(a), len(b)),
                   tuple(sorted(len(c) for c in comps)))
