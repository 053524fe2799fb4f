import pytest

from balanced_slp.generate import inverse_balanced_contraction, octahedron, stacked_sphere, subdivide_all_facets, tetrahedron


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def tet():
    return tetrahedron()


@pytest.fixture
def tet_21(tet):
    # three blue vertices and one red one
    return tet, {1: "b", 2: "b", 3: "b", 4: "r"}


@pytest.fixture
def subdivided_tet():
    """All facets of the tetrahedron subdivided: 4 blue and 4 red vertices."""
    return subdivide_all_facets(tetrahedron())


def subdivided_family(n):
    if n == 4:
        base = tetrahedron()
    elif n == 6:
        base = octahedron()[0]
    else:
        base = stacked_sphere(n - 4, seed=n)
    return subdivide_all_facets(base)


def grown_by_splits(n, rng):
    """Balanced sphere grown from the octahedron by inverse balanced
    contractions only, so it has no missing triangles."""
    c, k = octahedron()
    while len(c.vertices) < n:
        q = c.vertices[int(rng.integers(len(c.vertices)))]
        d = c.degree(q)
        c, k, _ = inverse_balanced_contraction(c, k, q, int(rng.integers(d)), 2 * int(rng.integers(1, d // 2)))
    return c, k


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
