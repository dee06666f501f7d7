"""The eighteen example maps T1..T8 (torus) and K1..K10 (Klein bottle).

Each map is stored as ``<name>.map`` next to this file, with the vertex
labels of its drawing kept in the name table.  Entries are validated on
first load.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..classify import TypeString
from ..errors import UnknownName
from ..polymap import PolyhedralMap, parse_map

NAMES = tuple(f"T{i}" for i in range(1, 9)) + tuple(f"K{i}" for i in range(1, 11))

_TYPES = {
    "T1": "[3^3,4^2]",
    "T2": "[3^2,4^1,3^1,4^1]",
    "T3": "[3^1,12^2]",
    "T4": "[4^1,6^1,12^1]",
    "T5": "[3^1,4^1,6^1,4^1]",
    "T6": "[3^1,6^1,3^1,6^1]",
    "T7": "[4^1,8^2]",
    "T8": "[3^4,6^1]",
    "K1": "[3^3,4^2]",
    "K2": "[3^2,4^1,3^1,4^1]",
    "K3": "[3^1,12^2]",
    "K4": "[4^1,6^1,12^1]",
    "K5": "[3^1,4^1,6^1,4^1]",
    "K6": "[3^1,6^1,3^1,6^1]",
    "K7": "[4^1,8^2]",
    "K8": "[3^6]",
    "K9": "[6^3]",
    "K10": "[4^4]",
}

# Auxiliary graph used to separate vertices of each map, with the cycles of
# that graph quoted for it (as vertex labels).
OBSTRUCTIONS = {
    "T2": ("quad_diagonals", ("u1 u4 u8 u11", "v1 v4 v9 v12 v3 v6 v8 v11 v2 v5 v7 v10")),
    "T3": ("long_diagonals(12)", ("a17 a22 a19 a24", "c1 a6 b9 c14 a1 b6 c9 a14 b1 c6 a9 b14")),
    "T4": ("quad_diagonals+long_diagonals(12)", ("v2 u4 x5 w10 v8 u10 x11 w4", "x1 u2 x7 u8")),
    "T5": ("quad_diagonals", ("x9 v3 x3 v6 x6 v9", "u2 v2 x1 w2")),
    "T6": ("long_diagonals(6)", ("w1 w2 w7 w8 w5 w6 w3 w4", "u1 u2 u3 u4")),
    "T7": ("quad_diagonals+shared_edges(8)", (
        "v1 w2 w3 x4 x5 u6 u7 v12",
        "v2 w1 w12 x11 x10 u9 u8 v11 v10 w9 w8 x7 x6 u5 u4 v7 v6 w5 w4 x3 x2 u1 u12 v3")),
    "T8": ("nice_edges+long_diagonals(6)", ("v7 v15 v10 v18", "v1 v23 v17 v11 v4 v20 v14 v8")),
    "K1": ("quad_diagonals", ("v7 v14 v9 v16 v11 v18", "v20 v24 v22")),
    "K2": ("induced_3_cycles", ("x1 x2 x3", "v1 v2 v3")),
    "K3": ("long_diagonals(12)", (
        "a17 a22 a19 a24",
        "a3 b4 c3 a1 b6 c9 a7 b8 c7 a13 b2 c5 a11 b12 c11 a9 b14 c1 a15 b16 c15 a5 b10 c13")),
    "K4": ("quad_diagonals+long_diagonals(12)", ("v5 w2 v11 w8", "v2 u4 x5 w10 v7 u5 x4 w5")),
    "K5": ("quad_diagonals", ("v1 u2 u7 v8 v4 u5 u1 v2 v7 u8 u4 v5", "u3 u9 u6")),
    "K6": ("long_diagonals(6)", (
        "a2 w2 v2 a5 w3 v1 a8 w8 v8 a7 w5 v3 a6 w6 v6 a1 w7 v5 a4 w4 v4 a3 w1 v7",
        "u1 u2 u3 u4")),
    "K7": ("quad_diagonals+shared_edges(8)", (
        "v1 w2 w3 x4 x5 v11 v10 w9 w8 x7 x6 v12 v2 w1 w12 x11 x10 v8 v9 w10 w11 x12 x1 v3",
        "v5 w6 w7 x8 x9 v7 v6 w5 w4 x3 x2 v4")),
    "K8": ("non_edge_complement", ("2 4 3 5 7 9", "1 6 8")),
    "K10": ("induced_3_cycles", ("v1 v2 v3", "v1 v4 v7", "v2 v5 v8", "v3 v6 v9")),
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    map: PolyhedralMap
    expected_type: TypeString
    surface: str
    expected_transitive: bool

    @property
    def obstruction(self):
        """``(selector, quoted cycles)`` or ``None``."""
        sel = OBSTRUCTIONS.get(self.name)
        if sel is None:
            return None
        return sel[0], tuple(tuple(c.split()) for c in sel[1])


def _canonical_name(name: str) -> str:
    key = str(name).strip()
    for n in NAMES:
        if key.upper() == n:
            return n
    raise UnknownName(name)


def map_text(name: str) -> str:
    name = _canonical_name(name)
    return resources.files(__name__).joinpath(f"{name}.map").read_text(encoding="utf-8")


def get(name: str) -> CatalogEntry:
    return _load(_canonical_name(name))


@lru_cache(maxsize=None)
def _load(name: str) -> CatalogEntry:
    m = parse_map(map_text(name))
    return CatalogEntry(
        name=name,
        map=m,
        expected_type=TypeString.parse(_TYPES[name]),
        surface="torus" if name.startswith("T") else "klein_bottle",
        expected_transitive=name == "T1",
    )


def entries() -> list:
    return [get(n) for n in NAMES]


# the catalog interface is get(name) / list()
list = entries  # noqa: A001
