import pytest

from balanced_slp.coloring import colorings_equivalent, proper_3_coloring
from balanced_slp.complex import ComplexError, f_vector, is_octahedron, is_sphere, missing_triangles
from balanced_slp.generate import (
    inverse_balanced_contraction,
    make_rng,
    octahedron,
    random_balanced_sphere,
    random_sphere,
    stacked_sphere,
    tetrahedron,
)
from balanced_slp.ops import (
    balanced_contract,
    batagelj_reduce,
    connected_sum,
    contract,
    find_contractible_pair,
    is_admissible,
    split_at_missing_triangle,
)

from conftest import grown_by_splits


def two_tetrahedra():
    t = tetrahedron()
    return connected_sum(t, t.relabel({4: 5}), (1, 2, 3), (1, 2, 3), {1: 1, 2: 2, 3: 3})


def two_octahedra():
    c, _ = octahedron()
    return connected_sum(c, c.relabel({2: 7, 4: 8, 6: 9}), (1, 3, 5), (1, 3, 5), {1: 1, 3: 3, 5: 5})


def test_connected_sum_tetrahedra():
    s = two_tetrahedra()
    assert f_vector(s) == (5, 9, 6)
    assert missing_triangles(s) == [(1, 2, 3)]
    assert is_sphere(s)


def test_connected_sum_octahedra_balanced():
    s = two_octahedra()
    assert len(s.vertices) == 9
    assert proper_3_coloring(s) is not None


def test_connected_sum_errors():
    t = tetrahedron()
    other = t.relabel({4: 5})
    with pytest.raises(ComplexError):
        connected_sum(t, other, (1, 2, 3), (1, 2, 3), {1: 1, 2: 1, 3: 3})
    with pytest.raises(ComplexError):
        # shares vertex 4 outside the glued facet
        connected_sum(t, t, (1, 2, 3), (1, 2, 3), {1: 1, 2: 2, 3: 3})


def test_connected_sum_with_matching():
    t = tetrahedron()
    other = t.relabel({1: 11, 2: 12, 3: 13, 4: 14})
    s = connected_sum(t, other, (1, 2, 3), (11, 12, 13), {11: 3, 12: 1, 13: 2})
    assert is_sphere(s) and f_vector(s) == (5, 9, 6)


def test_split_roundtrip():
    s = two_octahedra()
    a, b = split_at_missing_triangle(s, (1, 3, 5))
    assert is_octahedron(a) and is_octahedron(b)
    assert connected_sum(a, b, (1, 3, 5), (1, 3, 5), {1: 1, 3: 3, 5: 5}) == s


def test_split_errors():
    c, _ = octahedron()
    with pytest.raises(ComplexError):
        split_at_missing_triangle(c, (1, 3, 5))


@pytest.mark.parametrize("seed", range(10))
def test_split_roundtrip_random(seed):
    c = random_sphere(7 + seed, seed, flips=seed % 3)
    for sigma in missing_triangles(c):
        a, b = split_at_missing_triangle(c, sigma)
        assert is_sphere(a) and is_sphere(b)
        m = {v: v for v in sigma}
        assert connected_sum(a, b, sigma, sigma, m) == c


@pytest.mark.parametrize("seed", range(6))
def test_split_preserves_balance(seed):
    c, k = random_balanced_sphere(16, seed)
    for sigma in missing_triangles(c):
        for piece in split_at_missing_triangle(c, sigma):
            assert proper_3_coloring(piece) is not None


def test_contract_stacked():
    s = two_tetrahedra()
    # edge {1,5} lies in no missing triangle
    assert is_admissible(s, 5, 1)
    out = contract(s, 5, 1)
    assert out == tetrahedron()


def test_contract_non_edge():
    c, _ = octahedron()
    with pytest.raises(ComplexError):
        contract(c, 1, 2)


def test_admissible_criteria():
    s = two_tetrahedra()
    assert not is_admissible(s, 1, 2)
    with pytest.raises(ComplexError):
        is_admissible(tetrahedron(), 1, 2)


@pytest.mark.parametrize("seed", range(12))
def test_admissible_contraction_gives_sphere(seed):
    c = random_sphere(6 + seed, seed)
    for a, b in sorted(c.edges):
        if is_admissible(c, a, b):
            assert is_sphere(contract(c, a, b))


def test_octahedron_has_no_contractible_pair():
    c, k = octahedron()
    assert find_contractible_pair(c, k) is None
    with pytest.raises(ComplexError):
        find_contractible_pair(c, None)


def test_balanced_contract_inverse():
    c, k = octahedron()
    big, bk, (p, q) = inverse_balanced_contraction(c, k, 1, 0, 2)
    assert len(big.vertices) == 8
    assert find_contractible_pair(big, bk) is not None
    out = balanced_contract(big, p, q, bk)
    assert out == c
    with pytest.raises(ComplexError):
        balanced_contract(c, 1, 2, k)


@pytest.mark.parametrize("seed", range(10))
def test_balanced_contract_properties(seed):
    c, k = grown_by_splits(14 + seed, make_rng(seed))
    assert missing_triangles(c) == []
    pair = find_contractible_pair(c, k)
    assert pair is not None
    out = balanced_contract(c, pair[0], pair[1], k)
    assert is_sphere(out)
    assert len(out.vertices) == len(c.vertices) - 2
    kappa = proper_3_coloring(out)
    assert kappa is not None
    assert colorings_equivalent(kappa, {v: k[v] for v in out.vertices})


def test_reduce_octahedron():
    c, k = octahedron()
    tr = batagelj_reduce(c, k)
    assert tr.steps == [] and len(tr.terminals) == 1


def test_reduce_two_octahedra():
    tr = batagelj_reduce(two_octahedra())
    assert [s.kind for s in tr.steps] == ["split"]
    assert len(tr.terminals) == 2


@pytest.mark.parametrize("seed", range(15))
def test_reduce_random(seed):
    c, k = random_balanced_sphere(8 + seed, seed)
    tr = batagelj_reduce(c, k)
    assert len(tr.steps) <= len(c.vertices)
    assert all(is_octahedron(t) for t in tr.terminals)
    for mid in tr.intermediates:
        assert is_sphere(mid) and proper_3_coloring(mid) is not None


def test_reduce_unbalanced():
    with pytest.raises(ComplexError):
        batagelj_reduce(stacked_sphere(2))
