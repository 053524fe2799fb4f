"""Connected sums, splitting, edge contractions and the Batagelj reduction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import BLUE, RED, Coloring, proper_3_coloring
from .complex import (
    Complex2,
    ComplexError,
    Face,
    _closure,
    dual_components,
    is_octahedron,
    is_sphere,
    is_tetrahedron_boundary,
    missing_triangles,
    star_faces,
)


class ReductionError(RuntimeError):
    """A balanced sphere admitted neither a split nor a contractible pair."""


def _facet(sigma) -> Face:
    f = tuple(sorted(sigma))
    if len(f) != 3 or len(set(f)) != 3:
        raise ComplexError(f"{sigma} is not a triangle")
    return f


def connected_sum(
    g1: Complex2,
    g2: Complex2,
    sigma1,
    sigma2,
    vertex_matching: dict[int, int],
) -> Complex2:
    """Glue g2 to g1, identifying sigma2 with sigma1 via `vertex_matching`.

    `vertex_matching` maps the vertices of sigma2 onto those of sigma1; all
    other vertex ids of g2 are kept and must not occur in g1.
    """
    s1, s2 = _facet(sigma1), _facet(sigma2)
    if s1 not in g1.facets:
        raise ComplexError(f"{s1} is not a facet of the first complex")
    if s2 not in g2.facets:
        raise ComplexError(f"{s2} is not a facet of the second complex")
    if set(vertex_matching) != set(s2) or set(vertex_matching.values()) != set(s1):
        raise ComplexError("vertex matching is not a bijection between the two facets")
    glued = g2.relabel(vertex_matching) if any(k != v for k, v in vertex_matching.items()) else g2
    # identity outside sigma2 may collide with the images of sigma2
    if len(glued.vertices) != len(g2.vertices):
        raise ComplexError("relabelling merged vertices of the second complex")
    common = set(g1.faces) & set(glued.faces)
    if common != set(_closure([s1])):
        raise ComplexError("the complexes intersect in more than the glued facet")
    return Complex2((g1.facets - {s1}) | (glued.facets - {s1}))


def split_at_missing_triangle(c: Complex2, sigma) -> tuple[Complex2, Complex2]:
    """The two spheres whose connected sum along sigma is c.

    The piece containing the lexicographically smallest facet comes first.
    Both pieces keep the vertex ids of c; sigma's vertices appear in both.
    """
    s = _facet(sigma)
    if s not in missing_triangles(c):
        raise ComplexError(f"{s} is not a missing triangle")
    comps = dual_components(c.facets, blocked_edges=combinations(s, 2))
    if len(comps) != 2:
        raise ComplexError(f"cutting along {s} gives {len(comps)} pieces, expected 2")
    a, b = (Complex2(frozenset(comp) | {s}) for comp in comps)
    return a, b


def contract(c: Complex2, p: int, q: int) -> Complex2:
    """Edge contraction p -> q: p disappears, q keeps its id."""
    if (min(p, q), max(p, q)) not in c.edges:
        raise ComplexError(f"{{{p}, {q}}} is not an edge")
    out = set()
    for f in c.facets:
        if p not in f:
            out.add(f)
        elif q not in f:
            out.add(tuple(sorted(q if v == p else v for v in f)))
    return Complex2(frozenset(out))


def _admissible_by_missing(c: Complex2, p: int, q: int) -> bool:
    e = (min(p, q), max(p, q))
    return not any(e[0] in t and e[1] in t for t in missing_triangles(c))


def _admissible_by_stars(c: Complex2, p: int, q: int) -> bool:
    e = (min(p, q), max(p, q))
    fs = c.edge_facets.get(e, [])
    if len(fs) != 2:
        return False
    return star_faces(c, p) & star_faces(c, q) == _closure(fs)


def is_admissible(c: Complex2, p: int, q: int) -> bool:
    if is_tetrahedron_boundary(c):
        raise ComplexError("admissibility is undefined on the boundary of a 3-simplex")
    if (min(p, q), max(p, q)) not in c.edges:
        raise ComplexError(f"{{{p}, {q}}} is not an edge")
    a = _admissible_by_missing(c, p, q)
    b = _admissible_by_stars(c, p, q)
    if a != b:
        raise AssertionError(f"admissibility criteria disagree on ({p}, {q})")
    return a


def _two_edge_path(faces: frozenset[Face]) -> tuple[int, int, int] | None:
    """If `faces` is <{s, mid}, {mid, t}>, return (s, t, mid) with s < t."""
    edges = [f for f in faces if len(f) == 2]
    if len(edges) != 2 or any(len(f) > 2 for f in faces):
        return None
    shared = set(edges[0]) & set(edges[1])
    if len(shared) != 1:
        return None
    (mid,) = shared
    s, t = sorted((set(edges[0]) | set(edges[1])) - {mid})
    if faces != _closure(edges):
        return None
    return s, t, mid


def contractible_pair_data(c: Complex2, kappa: Coloring, p: int, q: int) -> tuple[int, int, int] | None:
    if p == q or kappa[p] != kappa[q]:
        return None
    return _two_edge_path(star_faces(c, p) & star_faces(c, q))


def find_contractible_pair(c: Complex2, kappa: Coloring | None) -> tuple[int, int, int, int, int] | None:
    """Lexicographically smallest contractible pair as (p, q, s, t, mid)."""
    if kappa is None:
        raise ComplexError("a proper 3-coloring is required")
    nb = c.neighbors
    for p in c.vertices:
        for q in c.vertices:
            if q == p or kappa[p] != kappa[q] or len(nb[p] & nb[q]) != 3:
                continue
            data = contractible_pair_data(c, kappa, p, q)
            if data is not None:
                return (p, q) + data
    return None


def balanced_contract(c: Complex2, p: int, q: int, kappa: Coloring | None = None) -> Complex2:
    """Replace the ball st(p) u st(q) by the cone from q over its boundary."""
    if kappa is None:
        kappa = proper_3_coloring(c)
        if kappa is None:
            raise ComplexError("complex is not balanced")
    if contractible_pair_data(c, kappa, p, q) is None:
        raise ComplexError(f"({p}, {q}) is not a contractible pair")
    ball = [f for f in c.facets if p in f or q in f]
    counts = Counter(e for f in ball for e in combinations(f, 2))
    boundary = [e for e, k in counts.items() if k == 1]
    keep = c.facets - set(ball)
    cone = {tuple(sorted(e + (q,))) for e in boundary}
    return Complex2(frozenset(keep | cone))


def contraction_with_flaps(c: Complex2, p: int, q: int, kappa: Coloring | None = None) -> Complex2:
    """Balanced contraction of (p, q) with the triangles s-mid-q, t-mid-q,
    s-mid-p, t-mid-p glued back on; same vertex set as c."""
    if kappa is None:
        kappa = proper_3_coloring(c)
    data = contractible_pair_data(c, kappa, p, q)
    if data is None:
        raise ComplexError(f"({p}, {q}) is not a contractible pair")
    s, t, mid = data
    extra = {tuple(sorted(x)) for x in ((s, mid, q), (t, mid, q), (s, mid, p), (t, mid, p))}
    return Complex2(balanced_contract(c, p, q, kappa).facets | frozenset(extra))


@dataclass
class ReductionStep:
    kind: str  # "split" or "balanced_contract"
    args: tuple[int, ...]
    input_hash: str
    output_hashes: tuple[str, ...]

    def to_json(self) -> dict:
        key = "sigma" if self.kind == "split" else "pair"
        return {
            "kind": self.kind,
            key: list(self.args),
            "input": self.input_hash,
            "outputs": list(self.output_hashes),
        }


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    terminals: list[Complex2] = field(default_factory=list)
    intermediates: list[Complex2] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "terminals": [t.digest for t in self.terminals],
        }


def batagelj_reduce(c: Complex2, kappa: Coloring | None = None) -> ReductionTrace:
    """Split at missing triangles and balanced-contract until only octahedra remain."""
    if not is_sphere(c):
        raise ComplexError("input is not a 2-sphere")
    if kappa is None:
        kappa = proper_3_coloring(c)
        if kappa is None:
            raise ComplexError("input sphere is not balanced")
    trace = ReductionTrace()
    pending = [c]
    while pending:
        cur = pending.pop(0)
        trace.intermediates.append(cur)
        if is_octahedron(cur):
            trace.terminals.append(cur)
            continue
        local = {v: kappa[v] for v in cur.vertices}
        missing = missing_triangles(cur)
        if missing:
            sigma = missing[0]
            a, b = split_at_missing_triangle(cur, sigma)
            trace.steps.append(ReductionStep("split", sigma, cur.digest, (a.digest, b.digest)))
            pending.extend([a, b])
            continue
        pair = find_contractible_pair(cur, local)
        if pair is None:
            raise ReductionError(
                f"balanced sphere {cur.digest} with {len(cur.vertices)} vertices has "
                "no missing triangle and no contractible pair"
            )
        p, q = pair[:2]
        out = balanced_contract(cur, p, q, local)
        trace.steps.append(ReductionStep("balanced_contract", (p, q), cur.digest, (out.digest,)))
        pending.append(out)
    return trace


def blue_lifting_edges(c: Complex2, pi: dict) -> list[tuple[int, int, int, int]]:
    """Blue edges {p, q} whose star intersection is the induced pair of
    triangles {s,p,q}, {t,p,q} with s red.  Returned as (p, q, s, t)."""
    out = []
    for p, q in sorted(c.edges):
        if pi[p] != BLUE or pi[q] != BLUE:
            continue
        fs = c.edge_facets[(p, q)]
        if star_faces(c, p) & star_faces(c, q) != _closure(fs):
            continue
        (x,) = set(fs[0]) - {p, q}
        (y,) = set(fs[1]) - {p, q}
        if (min(x, y), max(x, y)) in c.edges:
            continue
        for s, t in ((x, y), (y, x)):
            if pi[s] == RED:
                out.append((p, q, s, t))
                break
    return out
