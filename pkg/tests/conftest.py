import pytest

from semimaps import build_map, catalog

TETRA = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def grid_faces(n, m=None):
    """Square grid n x m with toroidal wraparound."""
    m = m or n
    vid = lambda i, j: (i % n) + n * (j % m)
    return [(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)) for i in range(n) for j in range(m)]


@pytest.fixture
def tetra():
    return build_map(TETRA)


@pytest.fixture(params=catalog.NAMES)
def entry(request):
    return catalog.get(request.param)
