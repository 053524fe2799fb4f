"""Pure 2-dimensional simplicial complexes stored by their facets."""

from __future__ import annotations

import hashlib
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Raised for malformed complexes or invalid arguments."""


def _closure(facets: Iterable[Face]) -> frozenset[Face]:
    faces: set[Face] = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    return frozenset(faces)


@dataclass(frozen=True)
class Complex2:
    """A pure 2-dimensional simplicial complex.

    Facets are sorted vertex triples; vertices, edges and the full face set
    are derived on first access and cached.
    """

    facets: frozenset[Face]

    @classmethod
    def from_facets(cls, triples: Iterable[Iterable[int]]) -> "Complex2":
        seen: set[Face] = set()
        for raw in triples:
            verts = list(raw)
            if len(verts) != 3:
                raise ComplexError(f"facet {verts} does not have exactly 3 vertices")
            if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in verts):
                raise ComplexError(f"facet {verts} has a vertex that is not a non-negative integer")
            f = tuple(sorted(verts))
            if len(set(f)) != 3:
                raise ComplexError(f"facet {verts} has a repeated vertex")
            if f in seen:
                raise ComplexError(f"duplicate facet {f}")
            seen.add(f)
        if not seen:
            raise ComplexError("empty facet list")
        return cls(frozenset(seen))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def edges(self) -> frozenset[Face]:
        return frozenset(e for f in self.facets for e in combinations(f, 2))

    @cached_property
    def faces(self) -> frozenset[Face]:
        return _closure(self.facets)

    @cached_property
    def sorted_facets(self) -> tuple[Face, ...]:
        return tuple(sorted(self.facets))

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = defaultdict(set)
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(nb[v]) for v in self.vertices}

    @cached_property
    def edge_facets(self) -> dict[Face, list[Face]]:
        ef: dict[Face, list[Face]] = defaultdict(list)
        for f in self.sorted_facets:
            for e in combinations(f, 2):
                ef[e].append(f)
        return dict(ef)

    def has_face(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.faces

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def link_edges(self, v: int) -> list[Face]:
        return sorted(tuple(x for x in f if x != v) for f in self.facets if v in f)

    @cached_property
    def digest(self) -> str:
        """Order-independent hash of the facet list."""
        text = ";".join(",".join(map(str, f)) for f in self.sorted_facets)
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def relabel(self, mapping: dict[int, int]) -> "Complex2":
        return Complex2.from_facets([mapping.get(v, v) for v in f] for f in self.facets)

    def __repr__(self) -> str:
        return f"Complex2(f={f_vector(self)}, facets={list(self.sorted_facets)})"


@dataclass(frozen=True)
class Subcomplex:
    """An arbitrary simplicial complex given by its full face set (not necessarily pure)."""

    faces: frozenset[Face]
    vertices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.vertices:
            object.__setattr__(self, "vertices", tuple(sorted(f[0] for f in self.faces if len(f) == 1)))

    @property
    def edges(self) -> frozenset[Face]:
        return frozenset(f for f in self.faces if len(f) == 2)

    @property
    def edge_count(self) -> int:
        return sum(1 for f in self.faces if len(f) == 2)

    def has_face(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.faces


def f_vector(c: Complex2) -> tuple[int, int, int]:
    return len(c.vertices), len(c.edges), len(c.facets)


def euler_characteristic(c: Complex2) -> int:
    n, e, f = f_vector(c)
    return n - e + f


def dual_components(facets: Iterable[Face], blocked_edges: Iterable[Face] = ()) -> list[list[Face]]:
    """Connected components of the facet adjacency graph.

    Two facets are adjacent when they share an edge not listed in
    `blocked_edges`.  Components are returned sorted, each internally sorted.
    """
    facets = sorted(facets)
    blocked = set(blocked_edges)
    by_edge: dict[Face, list[Face]] = defaultdict(list)
    for f in facets:
        for e in combinations(f, 2):
            if e not in blocked:
                by_edge[e].append(f)
    seen: set[Face] = set()
    comps = []
    for start in facets:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            f = queue.popleft()
            comp.append(f)
            for e in combinations(f, 2):
                for g in by_edge.get(e, ()):
                    if g not in seen:
                        seen.add(g)
                        queue.append(g)
        comps.append(sorted(comp))
    return sorted(comps)


def _is_single_cycle(edges: list[Face]) -> bool:
    if len(edges) < 3:
        return False
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(nb) != 2 for nb in adj.values()):
        return False
    # every vertex has degree 2, so connectivity alone makes it one cycle
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def sphere_defect(c: Complex2) -> str | None:
    """Return why `c` is not a 2-sphere, or None if it is one."""
    for e, fs in c.edge_facets.items():
        if len(fs) != 2:
            return f"edge {e} lies in {len(fs)} facets"
    for v in c.vertices:
        if not _is_single_cycle(c.link_edges(v)):
            return f"link of vertex {v} is not a single cycle"
    if len(dual_components(c.facets)) != 1:
        return "facet adjacency graph is disconnected"
    chi = euler_characteristic(c)
    if chi != 2:
        return f"Euler characteristic is {chi}"
    return None


def is_sphere(c: Complex2) -> bool:
    return sphere_defect(c) is None


def _require_vertex(c: Complex2, v: int) -> None:
    if v not in c.neighbors:
        raise ComplexError(f"{v} is not a vertex of the complex")


def star(c: Complex2, v: int) -> Complex2:
    """Closed star of `v`: the facets containing `v` (with their closure)."""
    _require_vertex(c, v)
    return Complex2(frozenset(f for f in c.facets if v in f))


def star_faces(c: Complex2, v: int) -> frozenset[Face]:
    return star(c, v).faces


def induced_subcomplex(c: Complex2, W: Iterable[int]) -> tuple[Subcomplex, int]:
    """Faces of `c` contained in W, together with the number of edges among them."""
    w = set(W)
    faces = frozenset(f for f in c.faces if w.issuperset(f))
    sub = Subcomplex(faces)
    return sub, sub.edge_count


def missing_triangles(c: Complex2) -> list[Face]:
    out = []
    nb = c.neighbors
    for a, b in sorted(c.edges):
        for x in sorted(nb[a] & nb[b]):
            if x > b and (a, b, x) not in c.facets:
                out.append((a, b, x))
    return sorted(out)


def is_tetrahedron_boundary(c: Complex2) -> bool:
    return len(c.vertices) == 4 and len(c.facets) == 4


def is_octahedron(c: Complex2) -> bool:
    """Boundary of the 3-crosspolytope: 6 vertices, all of degree 4, a sphere."""
    return (
        f_vector(c) == (6, 12, 8)
        and all(c.degree(v) == 4 for v in c.vertices)
        and is_sphere(c)
    )
