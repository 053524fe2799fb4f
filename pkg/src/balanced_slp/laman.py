"""(2,3)-sparsity of graphs: the pebble game and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .coloring import BLUE, BiColoring
from .complex import Complex2

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()) -> "SimpleGraph":
        es = set()
        for raw in edges:
            u, v = raw
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            es.add((min(u, v), max(u, v)))
        vs = set(vertices)
        for e in es:
            vs.update(e)
        return cls(frozenset(vs), frozenset(es))

    def induced_edge_count(self, W: Iterable[int]) -> int:
        w = set(W)
        return sum(1 for a, b in self.edges if a in w and b in w)


@dataclass(frozen=True)
class LamanVerdict:
    sparse: bool
    violation: tuple[int, ...] | None = None
    violation_edges: int | None = None

    def to_json(self) -> dict:
        out: dict = {"sparse": self.sparse}
        if self.violation is not None:
            out["violation"] = list(self.violation)
            out["edges"] = self.violation_edges
            out["bound"] = 2 * len(self.violation) - 3
        return out


def _violation(g: SimpleGraph, W: Iterable[int]) -> LamanVerdict:
    W = tuple(sorted(W))
    e = g.induced_edge_count(W)
    if len(W) < 2 or e <= 2 * len(W) - 3:
        raise AssertionError(f"claimed violation {W} spans only {e} edges")
    return LamanVerdict(False, W, e)


class _PebbleGame:
    """(2,3)-pebble game: two pebbles per vertex, an edge needs four free pebbles."""

    def __init__(self, vertices):
        self.pebbles = {v: 2 for v in vertices}
        self.out: dict[int, set[int]] = {v: set() for v in vertices}

    def _find_path(self, start: int, blocked: set[int]) -> list[int] | None:
        # DFS along oriented edges to a vertex holding a free pebble
        parent = {start: None}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent or y in blocked:
                    continue
                parent[y] = x
                if self.pebbles[y] > 0:
                    path = [y]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                stack.append(y)
        return None

    def _gather(self, v: int, keep: int) -> bool:
        path = self._find_path(v, {keep})
        if path is None:
            return False
        for a, b in zip(path, path[1:]):
            self.out[a].discard(b)
            self.out[b].add(a)
        self.pebbles[path[-1]] -= 1
        self.pebbles[v] += 1
        return True

    def reach(self, sources: Iterable[int]) -> set[int]:
        seen = set(sources)
        stack = list(seen)
        while stack:
            for y in self.out[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def try_insert(self, u: int, v: int) -> bool:
        while self.pebbles[u] + self.pebbles[v] < 4:
            if self.pebbles[u] < 2 and self._gather(u, v):
                continue
            if self.pebbles[v] < 2 and self._gather(v, u):
                continue
            return False
        src = u if self.pebbles[u] > 0 else v
        self.pebbles[src] -= 1
        self.out[src].add(v if src == u else u)
        return True


def is_23_sparse(g: SimpleGraph) -> LamanVerdict:
    """Pebble game with edges inserted in ascending order.

    When an edge cannot collect four pebbles, the vertices reachable from its
    endpoints in the current orientation span 2|W| - 3 accepted edges, so
    together with the rejected edge they form a violating set.
    """
    game = _PebbleGame(sorted(g.vertices))
    for u, v in sorted(g.edges):
        if not game.try_insert(u, v):
            return _violation(g, game.reach((u, v)))
    return LamanVerdict(True)


def brute_force_23_sparse(g: SimpleGraph) -> LamanVerdict:
    verts = sorted(g.vertices)
    if len(verts) > 16:
        raise ValueError("brute force limited to 16 vertices")
    for k in range(2, len(verts) + 1):
        for W in combinations(verts, k):
            if g.induced_edge_count(W) > 2 * k - 3:
                return _violation(g, W)
    return LamanVerdict(True)


def blue_graph(c: Complex2, pi: BiColoring) -> SimpleGraph:
    blue = {v for v in c.vertices if pi[v] == BLUE}
    edges = [e for e in c.edges if e[0] in blue and e[1] in blue]
    return SimpleGraph.from_edges(edges, blue)
