import pytest

from semimaps import catalog, surface_info
from semimaps.errors import UnknownName

VERTEX_COUNTS = {
    "T1": 10, "T2": 24, "T3": 72, "T4": 48, "T5": 36, "T6": 24, "T7": 48, "T8": 24,
    "K1": 24, "K2": 12, "K3": 72, "K4": 48, "K5": 18, "K6": 36, "K7": 36, "K8": 9, "K9": 18, "K10": 9,
}


def test_names():
    assert len(catalog.NAMES) == 18
    assert [e.name for e in catalog.list()] == list(catalog.NAMES)


def test_lookup_case_insensitive():
    assert catalog.get("t5") is catalog.get("T5")
    with pytest.raises(UnknownName):
        catalog.get("T9")


def test_surface(entry):
    si = surface_info(entry.map)
    assert si.euler_characteristic == 0
    assert si.orientable == (entry.surface == "torus")


def test_vertex_counts(entry):
    assert entry.map.f0 == VERTEX_COUNTS[entry.name]


def test_every_vertex_labelled(entry):
    m = entry.map
    assert set(m.names.values()) == set(m.vertices)
    assert sorted(m.vertices) == list(range(m.f0))


def test_header(entry):
    first = entry.map.comments[0]
    assert first.startswith(f"{entry.name} {entry.expected_type}")


def test_obstruction_labels_exist(entry):
    if entry.obstruction is None:
        assert entry.name in ("T1", "K9")
        return
    _, quoted = entry.obstruction
    for cyc in quoted:
        for label in cyc:
            entry.map.vertex(label)
