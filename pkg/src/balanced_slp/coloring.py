"""Proper 3-colorings and blue/red bi-colorings of 2-complexes."""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from .complex import Complex2, ComplexError, sphere_defect

Coloring = dict[int, int]
BiColoring = dict[int, str]

BLUE = "b"
RED = "r"


def is_proper(c: Complex2, kappa: Coloring) -> bool:
    if set(kappa) != set(c.vertices):
        return False
    return all(kappa[a] != kappa[b] for a, b in c.edges)


def proper_3_coloring(c: Complex2) -> Coloring | None:
    """Proper 3-coloring of a 2-sphere, or None if some vertex has odd degree.

    The lexicographically smallest facet gets colors 1, 2, 3 in ascending
    vertex order; colors then propagate across shared edges in BFS order.
    """
    reason = sphere_defect(c)
    if reason is not None:
        raise ComplexError(f"not a 2-sphere: {reason}")
    if any(c.degree(v) % 2 for v in c.vertices):
        return None

    first = c.sorted_facets[0]
    kappa: Coloring = {v: i + 1 for i, v in enumerate(first)}
    seen = {first}
    queue = deque([first])
    while queue:
        f = queue.popleft()
        for e in combinations(f, 2):
            for g in c.edge_facets[e]:
                if g in seen:
                    continue
                (x,) = set(g) - set(e)
                col = 6 - kappa[e[0]] - kappa[e[1]]
                if kappa.setdefault(x, col) != col:
                    return None
                seen.add(g)
                queue.append(g)
    return kappa if is_proper(c, kappa) else None


def colorings_equivalent(k1: Coloring, k2: Coloring) -> bool:
    """True iff k2 is k1 followed by a permutation of the colors {1,2,3}."""
    if set(k1) != set(k2):
        return False
    return any(
        all(k2[v] == tau[k1[v] - 1] for v in k1)
        for tau in permutations((1, 2, 3))
    )


def color_classes(kappa: Coloring) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {1: [], 2: [], 3: []}
    for v in sorted(kappa):
        classes[kappa[v]].append(v)
    return classes


def _check_total(c: Complex2, pi: BiColoring) -> None:
    if set(pi) != set(c.vertices):
        raise ComplexError("bi-coloring is not defined on exactly the vertex set")
    if any(col not in (BLUE, RED) for col in pi.values()):
        raise ComplexError("bi-coloring values must be 'b' or 'r'")


def is_21_coloring(c: Complex2, pi: BiColoring) -> bool:
    """Every face has at most two blue and at most one red vertex."""
    _check_total(c, pi)
    for f in c.facets:
        blue = sum(pi[v] == BLUE for v in f)
        if blue > 2 or len(f) - blue > 1:
            return False
    return True


def is_semi_proper(c: Complex2, pi: BiColoring) -> bool:
    """No edge has two red endpoints."""
    _check_total(c, pi)
    return not any(pi[a] == RED and pi[b] == RED for a, b in c.edges)


def blue_vertices(pi: BiColoring) -> list[int]:
    return sorted(v for v, col in pi.items() if col == BLUE)


def red_vertices(pi: BiColoring) -> list[int]:
    return sorted(v for v, col in pi.items() if col == RED)


def bicolor_from_3coloring(kappa: Coloring, red_class: int) -> BiColoring:
    if red_class not in (1, 2, 3):
        raise ValueError(f"red_class must be 1, 2 or 3, got {red_class}")
    return {v: RED if col == red_class else BLUE for v, col in kappa.items()}


def find_21_coloring(c: Complex2) -> BiColoring | None:
    """Backtracking search for a (2,1)-coloring, vertices ascending, blue tried first."""
    order = list(c.vertices)
    facets_of = {v: [f for f in c.sorted_facets if v in f] for v in order}
    pi: BiColoring = {}

    def ok(v: int) -> bool:
        for f in facets_of[v]:
            cols = [pi[x] for x in f if x in pi]
            if cols.count(BLUE) > 2 or cols.count(RED) > 1:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for col in (BLUE, RED):
            pi[v] = col
            if ok(v) and search(i + 1):
                return True
        del pi[v]
        return False

    return dict(pi) if search(0) else None
