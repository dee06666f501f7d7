import random
from fractions import Fraction

import pytest

from semimaps import TypeString, automorphism_group, classify, surface_info, vertex_orbits
from semimaps.errors import DegenerateBasis, QuotientNotPolyhedral, UnknownTiling
from semimaps.tilings import (
    LatticeBasis,
    _Reducer,
    builtin_tilings,
    cells,
    get_tiling,
    random_bases,
    torus_quotient,
    translation,
)

BASES = [((4, 0), (0, 4)), ((5, 1), (-2, 4)), ((6, 0), (3, 5)), ((4, -3), (3, 4)), ((7, 2), (1, 5))]
TILINGS = sorted(builtin_tilings())


def in_lattice(basis, dx, dy):
    """Solve (dx, dy) = s*a + t*b over the rationals and test integrality."""
    (a1, a2), (b1, b2) = basis
    det = a1 * b2 - a2 * b1
    s = Fraction(dx * b2 - dy * b1, det)
    t = Fraction(a1 * dy - a2 * dx, det)
    return s.denominator == 1 and t.denominator == 1


@pytest.mark.parametrize("basis", BASES + [((3, 1), (-1, 4)), ((-2, 5), (3, -1))])
def test_reducer_is_coset_map(basis):
    red = _Reducer(LatticeBasis(*basis))
    rng = random.Random(1)
    pts = [(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(300)]
    for p in pts[:60]:
        for q in pts:
            same = red.index(*p) == red.index(*q)
            assert same == in_lattice(basis, p[0] - q[0], p[1] - q[1])
    assert len(cells(basis)) == abs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0])


@pytest.mark.parametrize("t", TILINGS)
@pytest.mark.parametrize("basis", BASES)
def test_quotient_surface(t, basis):
    m = torus_quotient(t, basis)
    spec = get_tiling(t)
    det = abs(LatticeBasis(*basis).det)
    si = surface_info(m)
    assert si.euler_characteristic == 0 and si.orientable
    assert m.f0 == spec.orbit_classes * det
    assert m.f2 == len(spec.face_rules) * det
    assert classify(m).type == t
    assert m.comments == (f"tiling {t}", f"basis {LatticeBasis(*basis)}")


@pytest.mark.parametrize("t", TILINGS)
def test_translations_are_automorphisms(t):
    basis = ((5, 1), (-2, 4))
    m = torus_quotient(t, basis)
    group = {g.key for g in automorphism_group(m)}
    for shift in [(1, 0), (0, 1), (2, -3)]:
        perm = translation(t, basis, shift)
        assert sorted(perm.values()) == sorted(m.vertices)
        assert tuple(sorted(perm.items())) in group


@pytest.mark.parametrize("t", TILINGS)
def test_lattice_translations_are_trivial(t):
    basis = ((4, -3), (3, 4))
    for shift in basis:
        perm = translation(t, basis, shift)
        assert all(v == w for v, w in perm.items())


@pytest.mark.parametrize("t,bound", [("[3^6]", 1), ("[4^4]", 1), ("[6^3]", 1), ("[3^3,4^2]", 1),
                                     ("[3^2,4^1,3^1,4^1]", 2), ("[3^1,6^1,3^1,6^1]", 3)])
def test_orbit_bounds_random_bases(t, bound):
    rng = random.Random(11)
    spec = get_tiling(t)
    checked = 0
    for basis in random_bases(40, rng, max_entry=6, min_det=9, max_det=200 // spec.orbit_classes):
        try:
            m = torus_quotient(t, basis)
        except QuotientNotPolyhedral:
            continue
        checked += 1
        assert len(vertex_orbits(m)) <= bound
        if checked == 8:
            break
    assert checked >= 5


def test_small_quotients_rejected():
    with pytest.raises(QuotientNotPolyhedral) as info:
        torus_quotient("[3^6]", ((2, 0), (0, 2)))
    assert info.value.invariant
    with pytest.raises(QuotientNotPolyhedral):
        torus_quotient("[4^4]", ((2, 0), (0, 2)))


def test_degenerate_basis():
    with pytest.raises(DegenerateBasis):
        torus_quotient("[4^4]", ((2, 4), (1, 2)))


def test_unknown_tiling():
    with pytest.raises(UnknownTiling):
        get_tiling("[4^1,8^2]")


def test_basis_forms():
    a = torus_quotient("[4^4]", (3, 0, 0, 3))
    b = torus_quotient("[4^4]", LatticeBasis((3, 0), (0, 3)))
    assert a == b


def test_basis_orientation_irrelevant():
    a = torus_quotient("[3^3,4^2]", ((5, 1), (-2, 4)))
    b = torus_quotient("[3^3,4^2]", ((-2, 4), (5, 1)))
    assert a == b


def test_faces_per_cell():
    assert get_tiling("[3^2,4^1,3^1,4^1]").faces_per_cell() == {4: 2, 3: 4}
    assert get_tiling(TypeString.parse("[6^3]")).faces_per_cell() == {6: 1}


def test_vertex_count_range():
    # 9 vertices: [3^6] on the 3x3 torus
    m = torus_quotient("[3^6]", ((3, 0), (0, 3)))
    assert m.f0 == 9 and len(automorphism_group(m)) == 108
