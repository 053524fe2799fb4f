"""Text and JSON formats for complexes, colorings and graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import BLUE, RED, BiColoring, Coloring
from .complex import Complex2, ComplexError
from .laman import SimpleGraph


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_facets(text: str) -> Complex2:
    """One facet per line, whitespace-separated vertex ids; '#' starts a comment."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_facets_json(stripped)
    triples = []
    for lineno, tokens in _content_lines(text):
        verts = _ints(tokens, lineno)
        if len(verts) != 3:
            raise ParseError(f"expected 3 vertices, got {len(verts)}", lineno)
        if any(v < 0 for v in verts):
            raise ParseError("vertex ids must be non-negative", lineno)
        if len(set(verts)) != 3:
            raise ParseError(f"repeated vertex in {verts}", lineno)
        triples.append(verts)
    try:
        return Complex2.from_facets(triples)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def parse_facets_json(text: str) -> Complex2:
    try:
        data = json.loads(text)
        facets = data["facets"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"invalid facet JSON: {exc}") from None
    try:
        return Complex2.from_facets(facets)
    except (ComplexError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def format_facets(c: Complex2) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in c.sorted_facets)


def facets_json(c: Complex2) -> str:
    return json.dumps({"facets": [list(f) for f in c.sorted_facets]})


def parse_coloring(text: str) -> Coloring | BiColoring:
    """Lines 'vertex color' with colors all in {1,2,3} or all in {b,r}."""
    out: dict[int, str] = {}
    for lineno, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise ParseError("expected 'vertex color'", lineno)
        (v,) = _ints(tokens[:1], lineno)
        if v in out:
            raise ParseError(f"vertex {v} colored twice", lineno)
        out[v] = tokens[1].lower()
    values = set(out.values())
    if values <= {"1", "2", "3"}:
        return {v: int(col) for v, col in out.items()}
    if values <= {BLUE, RED}:
        return dict(out)
    raise ParseError(f"colors must all be in {{1,2,3}} or all in {{b,r}}, got {sorted(values)}")


def format_coloring(coloring: Coloring | BiColoring) -> str:
    return "".join(f"{v} {coloring[v]}\n" for v in sorted(coloring))


def parse_edge_list(text: str) -> SimpleGraph:
    edges = []
    for lineno, tokens in _content_lines(text):
        pair = _ints(tokens, lineno)
        if len(pair) != 2:
            raise ParseError("expected 'u v'", lineno)
        if pair[0] == pair[1]:
            raise ParseError(f"loop at vertex {pair[0]}", lineno)
        edges.append(pair)
    return SimpleGraph.from_edges(edges)


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
