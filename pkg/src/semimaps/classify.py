"""Face-cycle types and semi-equivelarity."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import SizeTooSmall, TypeStringError, UnknownVertex
from .polymap import PolyhedralMap, vertex_link


def _compress(seq: Sequence[int]) -> tuple:
    """Runs of a cyclic sequence, merging a run that wraps around the end."""
    runs = [(p, len(list(g))) for p, g in groupby(seq)]
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        p, n = runs.pop()
        runs[0] = (p, runs[0][1] + n)
    return tuple(runs)


def _least_rotation(seq: tuple) -> tuple:
    n = len(seq)
    best = seq
    for i in range(1, n):
        rot = seq[i:] + seq[:i]
        if rot < best:
            best = rot
    return best


@dataclass(frozen=True, order=True)
class TypeString:
    """Compressed face-cycle symbol such as ``[3^3,4^2]``.

    Instances are always canonical: equal types compare equal.  Build them
    through :func:`canonical_type` or :meth:`parse`.
    """

    expanded: tuple

    @property
    def runs(self) -> tuple:
        return _compress(self.expanded)

    @property
    def degree(self) -> int:
        return len(self.expanded)

    @property
    def is_equivelar(self) -> bool:
        return len(set(self.expanded)) == 1

    @classmethod
    def parse(cls, text: str) -> "TypeString":
        s = text.strip().replace(" ", "")
        if not (s.startswith("[") and s.endswith("]")):
            raise TypeStringError(f"type string {text!r} must be enclosed in brackets")
        seq = []
        for part in s[1:-1].split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
            if not m:
                raise TypeStringError(f"cannot parse run {part!r} in {text!r}")
            p, n = int(m.group(1)), int(m.group(2) or 1)
            if n < 1:
                raise TypeStringError(f"run {part!r} has zero multiplicity")
            seq.extend([p] * n)
        return canonical_type(seq)

    def __str__(self):
        return "[" + ",".join(f"{p}^{n}" for p, n in self.runs) + "]"

    def __repr__(self):
        return f"TypeString({str(self)!r})"


def canonical_type(sizes: Iterable[int]) -> TypeString:
    seq = tuple(int(x) for x in sizes)
    if len(seq) < 3 or min(seq) < 3:
        raise SizeTooSmall(seq)
    best = min(_least_rotation(seq), _least_rotation(seq[::-1]))
    return TypeString(best)


def as_type(t) -> TypeString:
    return t if isinstance(t, TypeString) else TypeString.parse(t)


def face_cycle_type(m: PolyhedralMap, v: int) -> TypeString:
    if v not in m.faces_at:
        raise UnknownVertex(v)
    return canonical_type(size for _, size in vertex_link(m, v))


@dataclass(frozen=True)
class Classification:
    semi_equivelar: bool
    type: TypeString | None = None
    witness: tuple | None = None


def classify(m: PolyhedralMap) -> Classification:
    first = None
    for v in sorted(m.vertices):
        t = face_cycle_type(m, v)
        if first is None:
            first = (v, t)
        elif t != first[1]:
            return Classification(False, None, (first[0], v))
    return Classification(True, first[1] if first else None, None)
