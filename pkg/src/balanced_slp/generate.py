"""Generators for test corpora of 2-spheres."""

from __future__ import annotations

import numpy as np

from .coloring import BLUE, RED, BiColoring, Coloring, bicolor_from_3coloring
from .complex import Complex2, ComplexError, Face, is_sphere, sphere_defect
from .ops import balanced_contract, connected_sum

OCTAHEDRON_FACETS = [(1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6), (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6)]
TETRAHEDRON_FACETS = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """Counter-based generator (Philox); never touches global state."""
    return np.random.Generator(np.random.Philox(seed))


def octahedron() -> tuple[Complex2, Coloring]:
    c = Complex2.from_facets(OCTAHEDRON_FACETS)
    return c, {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3}


def tetrahedron() -> Complex2:
    return Complex2.from_facets(TETRAHEDRON_FACETS)


def subdivide_all_facets(base: Complex2) -> tuple[Complex2, BiColoring]:
    """Cone a new red vertex into every facet; the old vertices become blue."""
    reason = sphere_defect(base)
    if reason is not None:
        raise ComplexError(f"base is not a 2-sphere: {reason}")
    nxt = max(base.vertices) + 1
    facets = []
    pi: BiColoring = {v: BLUE for v in base.vertices}
    for a, b, c in base.sorted_facets:
        facets += [(a, b, nxt), (a, c, nxt), (b, c, nxt)]
        pi[nxt] = RED
        nxt += 1
    return Complex2.from_facets(facets), pi


def stack_facet(c: Complex2, facet: Face, new: int) -> Complex2:
    a, b, d = facet
    return Complex2((c.facets - {facet}) | {(a, b, new), (a, d, new), (b, d, new)})


def stacked_sphere(k: int, seed: int = 0) -> Complex2:
    """Tetrahedron boundary with k random facets stacked on."""
    if k < 0:
        raise ValueError("k must be non-negative")
    rng = make_rng(seed)
    c = tetrahedron()
    for _ in range(k):
        facets = c.sorted_facets
        f = facets[int(rng.integers(len(facets)))]
        c = stack_facet(c, f, max(c.vertices) + 1)
    return c


def random_sphere(n: int, seed: int = 0, flips: int | None = None) -> Complex2:
    """Stacked sphere on n vertices followed by random edge flips."""
    if n < 4:
        raise ValueError("a 2-sphere has at least 4 vertices")
    rng = make_rng(seed)
    c = stacked_sphere(n - 4, int(rng.integers(2**32)))
    for _ in range(flips if flips is not None else 3 * n):
        edges = sorted(c.edges)
        a, b = edges[int(rng.integers(len(edges)))]
        f1, f2 = c.edge_facets[(a, b)]
        (x,) = set(f1) - {a, b}
        (y,) = set(f2) - {a, b}
        if c.degree(a) <= 3 or c.degree(b) <= 3 or (min(x, y), max(x, y)) in c.edges:
            continue
        c = Complex2((c.facets - {f1, f2}) | {tuple(sorted((a, x, y))), tuple(sorted((b, x, y)))})
    return c


def _octahedron_sum(c: Complex2, kappa: Coloring, facet: Face) -> tuple[Complex2, Coloring]:
    octa, okappa = octahedron()
    nxt = max(c.vertices) + 1
    # octahedron facet (1, 3, 5) carries colors 1, 2, 3
    by_color = {kappa[v]: v for v in facet}
    base = {1: by_color[1], 3: by_color[2], 5: by_color[3]}
    fresh = {2: nxt, 4: nxt + 1, 6: nxt + 2}
    octa = octa.relabel({**base, **fresh})
    # keep the glued facet as sigma in both: relabel first, identity matching
    out = connected_sum(c, octa, facet, facet, {v: v for v in facet})
    new_kappa = dict(kappa)
    for old, v in fresh.items():
        new_kappa[v] = okappa[old]
    return out, new_kappa


def _link_cycle(c: Complex2, q: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for a, b in c.link_edges(q):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = min(adj)
    cycle = [start, min(adj[start])]
    while len(cycle) < len(adj):
        a, b = adj[cycle[-1]]
        cycle.append(a if a != cycle[-2] else b)
    return cycle


def inverse_balanced_contraction(
    c: Complex2, kappa: Coloring, q: int, i: int, k: int
) -> tuple[Complex2, Coloring, tuple[int, int]]:
    """Split vertex q into the contractible pair (p, q) with a new middle vertex.

    The link of q is read as a cycle starting at position i; the k link edges
    following it move over to the new vertex p.  k must be even and leave at
    least two edges for q.  Returns the new complex, its coloring and (p, q).
    """
    cycle = _link_cycle(c, q)
    d = len(cycle)
    if k % 2 or k < 2 or d - k < 2:
        raise ValueError(f"cannot split a degree-{d} vertex with k={k}")
    path = [cycle[(i + j) % d] for j in range(k + 1)]
    s, t = path[0], path[-1]
    p, mid = max(c.vertices) + 1, max(c.vertices) + 2
    moved = {tuple(sorted((x, y, q))) for x, y in zip(path, path[1:])}
    added = {tuple(sorted((x, y, p))) for x, y in zip(path, path[1:])}
    added |= {tuple(sorted(f)) for f in ((p, s, mid), (p, t, mid), (q, s, mid), (q, t, mid))}
    out = Complex2((c.facets - moved) | added)
    new_kappa = dict(kappa)
    new_kappa[p] = kappa[q]
    new_kappa[mid] = 6 - kappa[q] - kappa[s]
    back = balanced_contract(out, p, q, new_kappa)
    if back != c:
        raise AssertionError("inverse balanced contraction does not contract back")
    return out, new_kappa, (p, q)


def random_balanced_sphere(n_target: int, seed: int = 0) -> tuple[Complex2, Coloring]:
    """Grow an octahedron by random octahedron sums and inverse balanced contractions.

    The result has n_target or n_target - 1 vertices (sums add 3, splits add 2,
    and no balanced 2-sphere has 7 vertices).
    """
    if n_target < 6:
        raise ValueError("balanced 2-spheres have at least 6 vertices")
    rng = make_rng(seed)
    c, kappa = octahedron()
    while len(c.vertices) < n_target - 1:
        room = n_target - len(c.vertices)
        if room >= 3 and rng.random() < 0.35:
            facets = c.sorted_facets
            c, kappa = _octahedron_sum(c, kappa, facets[int(rng.integers(len(facets)))])
            continue
        verts = c.vertices
        q = verts[int(rng.integers(len(verts)))]
        d = c.degree(q)
        k = 2 * int(rng.integers(1, d // 2))
        c, kappa, _ = inverse_balanced_contraction(c, kappa, q, int(rng.integers(d)), k)
    return c, kappa


def _merge_faces(faces: list[list[int]], i: int, j: int, u: int, v: int) -> list[int] | None:
    """Merge two face cycles sharing edge uv; None if the result is not a simple cycle."""

    def path_avoiding(cycle: list[int], a: int, b: int) -> list[int]:
        # walk from a to b around the cycle without using edge ab
        n = len(cycle)
        ia = cycle.index(a)
        step = 1 if cycle[(ia + 1) % n] != b else -1
        out = [a]
        while out[-1] != b:
            ia = (ia + step) % n
            out.append(cycle[ia])
        return out

    p1 = path_avoiding(faces[i], u, v)
    p2 = path_avoiding(faces[j], v, u)
    if set(p1[1:-1]) & set(p2[1:-1]):
        return None
    return p1 + p2[1:-1]


def random_21_sphere(n_target: int, seed: int = 0, style: str = "balanced") -> tuple[Complex2, BiColoring]:
    """Random (2,1)-colored sphere with at least n_target vertices (approximately, for "cone").

    style "balanced": a random balanced sphere with a random color class made red;
    style "subdivision": every facet of a random sphere subdivided;
    style "cone": a random sphere loses random edges (faces merge), then each
    face gets a red cone vertex.  n_target counts all vertices.
    """
    rng = make_rng(seed)
    if style == "balanced":
        c, kappa = random_balanced_sphere(max(n_target, 6), int(rng.integers(2**32)))
        return c, bicolor_from_3coloring(kappa, int(rng.integers(1, 4)))
    if style == "subdivision":
        # n blue + (2n - 4) red vertices
        n = max(4, (n_target + 4 + 2) // 3)
        return subdivide_all_facets(random_sphere(n, int(rng.integers(2**32))))
    if style != "cone":
        raise ValueError(f"unknown style {style!r}")
    n_blue = int(rng.integers(4, max(5, n_target - 1)))
    base = random_sphere(n_blue, int(rng.integers(2**32)))
    faces = [list(f) for f in base.sorted_facets]
    # one red vertex per face
    want = min(max(2, n_target - n_blue), len(faces))
    for _ in range(8 * len(faces)):
        if len(faces) <= want:
            break
        edges = sorted({(min(a, b), max(a, b)) for f in faces for a, b in zip(f, f[1:] + f[:1])})
        u, v = edges[int(rng.integers(len(edges)))]
        holders = [i for i, f in enumerate(faces) if _has_edge(f, u, v)]
        if len(holders) != 2:
            continue
        merged = _merge_faces(faces, holders[0], holders[1], u, v)
        if merged is None:
            continue
        faces = [f for i, f in enumerate(faces) if i not in holders] + [merged]
    nxt = max(base.vertices) + 1
    facets = []
    pi: BiColoring = {v: BLUE for v in base.vertices}
    for f in sorted(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            facets.append((a, b, nxt))
        pi[nxt] = RED
        nxt += 1
    c = Complex2.from_facets(facets)
    if not is_sphere(c):
        raise AssertionError("cone construction produced a non-sphere")
    return c, pi


def _has_edge(cycle: list[int], u: int, v: int) -> bool:
    n = len(cycle)
    return any({cycle[k], cycle[(k + 1) % n]} == {u, v} for k in range(n))
