from itertools import combinations_with_replacement
from math import gcd

import pytest

from semimaps import TypeString, admissible_types, all_arrangements, expand_arrangements, solve_vertex_equation
from semimaps.enumerator import DegreeMultiset, normalize_surface, solutions_beyond, violates_restriction
from semimaps.errors import UnsupportedSurface
from semimaps.verify import CLAIMED_MULTISETS, CLAIMED_TYPES, KLEIN_TYPES, RESTRICTED, TORUS_TYPES


def oracle_multisets(limit=42):
    """Choose all sizes but the largest and solve for it in integers."""
    out = set()
    for d in (3, 4, 5, 6):
        for head in combinations_with_replacement(range(3, limit + 1), d - 1):
            # 1/q = (d - 2)/2 - sum 1/h, so q = 2L / ((d - 2)L - 2 sum L/h) with L = lcm(head)
            lcm = 1
            for h in head:
                lcm = lcm * h // gcd(lcm, h)
            den = (d - 2) * lcm - 2 * sum(lcm // h for h in head)
            if den > 0 and (2 * lcm) % den == 0 and head[-1] <= 2 * lcm // den <= limit:
                out.add(DegreeMultiset.from_sizes(head + (2 * lcm // den,)))
    return out


def test_solutions_match_oracle():
    assert set(solve_vertex_equation()) == oracle_multisets(42)


def test_solutions_match_claim():
    sols = solve_vertex_equation()
    assert len(sols) == 17
    assert {str(ms) for ms in sols} == set(CLAIMED_MULTISETS)


def test_no_solution_beyond_42():
    assert solutions_beyond(42, 100) == []


def test_exact_angle_sums():
    assert all(ms.angle_sum() == 1 for ms in solve_vertex_equation())


def test_degrees():
    by_degree = {}
    for ms in solve_vertex_equation():
        by_degree[ms.degree] = by_degree.get(ms.degree, 0) + 1
    assert by_degree == {3: 10, 4: 4, 5: 2, 6: 1}


def test_arrangements():
    arr = all_arrangements()
    assert len(arr) == 21
    assert {str(t) for t in arr} == set(CLAIMED_TYPES)


def test_expand_mixed_multiset():
    ms = DegreeMultiset.from_sizes((3, 3, 4, 4, 3))
    assert [str(t) for t in expand_arrangements(ms)] == ["[3^3,4^2]", "[3^2,4^1,3^1,4^1]"]
    ms = DegreeMultiset.from_sizes((3, 4, 4, 6))
    assert {str(t) for t in expand_arrangements(ms)} == {"[3^1,4^1,6^1,4^1]", "[3^1,4^2,6^1]"}


def test_restrictions():
    flagged = {}
    for t in all_arrangements():
        v = violates_restriction(t)
        if v:
            flagged[str(t)] = v.rule
    assert flagged == RESTRICTED


@pytest.mark.parametrize("text", ["[3^1,12^2]", "[4^1,8^2]", "[3^4,6^1]", "[3^1,4^1,6^1,4^1]"])
def test_realized_types_pass(text):
    assert violates_restriction(text) is None


def test_admissible_lists():
    torus = admissible_types("torus")
    klein = admissible_types("klein-bottle")
    assert {str(t) for t in torus} == set(TORUS_TYPES)
    assert {str(t) for t in klein} == set(KLEIN_TYPES)
    assert set(torus) - set(klein) == {TypeString.parse("[3^4,6^1]")}


def test_surface_names():
    assert normalize_surface("Klein Bottle") == "klein_bottle"
    with pytest.raises(UnsupportedSurface):
        admissible_types("sphere")
