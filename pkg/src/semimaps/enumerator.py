"""Admissible face-cycle types on surfaces of Euler characteristic zero.

Pipeline: solve the vertex equation

    sum over distinct face sizes q of (1/2 - 1/q) * m_q = 1

exactly, expand every solution into its cyclic arrangements, and discard
the arrangements that local parity restrictions rule out.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .classify import TypeString, as_type, canonical_type
from .errors import UnsupportedSurface

MAX_FACE = 42
HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class DegreeMultiset:
    """Face sizes at a vertex with multiplicities, ignoring their cyclic order.

    ``pairs`` holds ``(q, m)`` sorted by multiplicity descending, then size
    ascending.
    """

    pairs: tuple

    @classmethod
    def from_sizes(cls, sizes) -> "DegreeMultiset":
        counts = {}
        for q in sizes:
            counts[q] = counts.get(q, 0) + 1
        return cls(tuple(sorted(counts.items(), key=lambda qm: (-qm[1], qm[0]))))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def sizes(self) -> tuple:
        return tuple(sorted(q for q, m in self.pairs for _ in range(m)))

    def angle_sum(self) -> Fraction:
        return sum(((HALF - Fraction(1, q)) * m for q, m in self.pairs), Fraction(0))

    def __str__(self):
        return "(" + ",".join(f"{q}^{m}" for q, m in self.pairs) + ")"


def _solutions(degree: int, max_face: int):
    """Nondecreasing size tuples of length ``degree`` with sum 1/q = degree/2 - 1."""
    target = Fraction(degree, 2) - 1

    def rec(prefix, lo, left, rest):
        if left == 0:
            if rest == 0:
                yield tuple(prefix)
            return
        if rest <= 0:
            return
        # smallest q with 1/q <= rest, largest with left/q >= rest
        q = max(lo, int(1 / rest) if 1 / rest == int(1 / rest) else int(1 / rest) + 1)
        hi = min(max_face, int(left / rest))
        while q <= hi:
            prefix.append(q)
            yield from rec(prefix, q, left - 1, rest - Fraction(1, q))
            prefix.pop()
            q += 1

    yield from rec([], 3, degree, target)


def solve_vertex_equation(max_face: int = MAX_FACE, degrees=(3, 4, 5, 6)) -> list:
    """All degree multisets satisfying the vertex equation, sorted.

    The search is exhaustive for face sizes up to ``max_face``; the bound
    needed in practice is 42, reached by (3,7,42).
    """
    out = set()
    for d in degrees:
        for sizes in _solutions(d, max_face):
            ms = DegreeMultiset.from_sizes(sizes)
            assert ms.angle_sum() == 1
            out.add(ms)
    return sorted(out, key=lambda ms: (-ms.degree, ms.sizes))


def solutions_beyond(bound: int = MAX_FACE, limit: int = 100) -> list:
    """Solutions using some face size in ``(bound, limit]``; expected empty."""
    return [ms for ms in solve_vertex_equation(limit) if max(ms.sizes) > bound]


def expand_arrangements(ms: DegreeMultiset) -> list:
    """Distinct cyclic arrangements of the sizes, up to rotation and reflection."""
    return sorted({canonical_type(p) for p in set(permutations(ms.sizes))})


def all_arrangements(max_face: int = MAX_FACE) -> list:
    out = set()
    for ms in solve_vertex_equation(max_face):
        out.update(expand_arrangements(ms))
    return sorted(out)


@dataclass(frozen=True)
class Violation:
    rule: str
    index: int

    def __str__(self):
        return f"({self.rule}) at run {self.index}"


def violates_restriction(t) -> Violation | None:
    """First parity restriction (i), (ii) or (iii) violated by ``t``, if any.

    Indices refer to the runs of the canonical type and are read cyclically.
    (i)   a run p^2 with p odd and p occurring in no other run;
    (ii)  a run p^1 with p odd, p in no other run and different neighbours;
    (iii) a run p^1 with p odd whose two neighbouring runs are distinct runs
          whose sizes occur nowhere else.
    """
    runs = as_type(t).runs
    k = len(runs)
    sizes = [p for p, _ in runs]

    def unique(i):
        return all(sizes[j] != sizes[i] for j in range(k) if j != i)

    for i, (p, n) in enumerate(runs):
        if n == 2 and p % 2 and unique(i):
            return Violation("i", i)
    for i, (p, n) in enumerate(runs):
        if n == 1 and p % 2 and unique(i) and sizes[(i - 1) % k] != sizes[(i + 1) % k]:
            return Violation("ii", i)
    for i, (p, n) in enumerate(runs):
        before, after = (i - 1) % k, (i + 1) % k
        if n == 1 and p % 2 and before != after and unique(before) and unique(after):
            return Violation("iii", i)
    return None


# Cited axiom, not derived here: no semi-equivelar map of this type exists on
# the Klein bottle.
KLEIN_BOTTLE_EXCLUDED = (TypeString.parse("[3^4,6^1]"),)


def normalize_surface(surface: str) -> str:
    key = str(surface).strip().lower().replace("-", "_").replace(" ", "_")
    if key in ("torus", "klein_bottle"):
        return key
    raise UnsupportedSurface(surface)


def admissible_types(surface: str) -> list:
    surface = normalize_surface(surface)
    out = [t for t in all_arrangements() if violates_restriction(t) is None]
    if surface == "klein_bottle":
        out = [t for t in out if t not in KLEIN_BOTTLE_EXCLUDED]
    return out
