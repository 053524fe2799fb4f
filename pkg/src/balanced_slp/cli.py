"""Command-line front end.  JSON goes to stdout (or --out); tables go to stderr."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .coloring import BLUE, RED, find_21_coloring, is_21_coloring, is_semi_proper, proper_3_coloring
from .complex import Complex2, ComplexError, f_vector, missing_triangles, sphere_defect
from .generate import (
    make_rng,
    octahedron,
    random_21_sphere,
    random_balanced_sphere,
    random_sphere,
    stacked_sphere,
    subdivide_all_facets,
    tetrahedron,
)
from .laman import blue_graph, brute_force_23_sparse, is_23_sparse
from .lefschetz import (
    CONSISTENT,
    DEFAULT_TRIALS,
    check_21_slp,
    check_colored_slp,
    check_theorem2,
    find_non_slp_certificate,
)
from .linalg import DEFAULT_PRIME, check_prime
from .ops import ReductionError, batagelj_reduce

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


@dataclass
class RunConfig:
    command: str
    path: str | None
    p: int = DEFAULT_PRIME
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    coloring: str = "auto"
    mode: str = "colored"
    out: str | None = None

    def __post_init__(self):
        check_prime(self.p)
        if self.trials < 1:
            raise ValueError("--trials must be at least 1")


class InputError(Exception):
    pass


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_complex(path: str) -> Complex2:
    return io.parse_facets(io.read_text(path))


def _coloring_json(col: dict) -> dict:
    return {str(v): col[v] for v in sorted(col)}


def _load_bicoloring(c: Complex2, spec: str) -> dict:
    if spec == "auto":
        pi = find_21_coloring(c)
        if pi is None:
            raise InputError("complex has no (2,1)-coloring")
        return pi
    pi = io.parse_coloring(io.read_text(spec))
    if not all(x in (BLUE, RED) for x in pi.values()):
        raise InputError("coloring file must use colors b/r in (2,1) mode")
    if set(pi) != set(c.vertices):
        raise InputError("coloring does not cover exactly the vertices of the complex")
    if not is_semi_proper(c, pi):
        raise InputError("coloring is neither a (2,1)-coloring nor semi-proper")
    return pi


def _load_3coloring(c: Complex2, spec: str) -> dict:
    reason = sphere_defect(c)
    if reason is not None:
        raise InputError(f"not a 2-sphere: {reason}")
    if spec == "auto":
        kappa = proper_3_coloring(c)
        if kappa is None:
            raise InputError("sphere is not balanced (some vertex has odd degree)")
        return kappa
    kappa = io.parse_coloring(io.read_text(spec))
    if not all(x in (1, 2, 3) for x in kappa.values()):
        raise InputError("coloring file must use colors 1/2/3 in colored mode")
    return kappa


def cmd_validate(cfg: RunConfig) -> dict:
    c = _load_complex(cfg.path)
    reason = sphere_defect(c)
    degrees = {str(v): c.degree(v) for v in c.vertices}
    out = {
        "complex_hash": c.digest,
        "sphere": reason is None,
        "f": list(f_vector(c)),
        "missing_triangles": [list(t) for t in missing_triangles(c)],
        "degrees": degrees,
    }
    if reason is not None:
        out["reason"] = reason
    else:
        out["balanced"] = all(d % 2 == 0 for d in degrees.values())
    _log(f"f-vector {tuple(out['f'])}  sphere={out['sphere']}  missing={len(out['missing_triangles'])}")
    return out


def cmd_slp(cfg: RunConfig) -> dict:
    c = _load_complex(cfg.path)
    rng = make_rng(cfg.seed)
    if cfg.p in (2, 3):
        raise InputError(
            f"refusing --p {cfg.p}: in characteristic 2 and 3 every linear form w satisfies "
            "w^3 = 0 modulo the colored system of parameters, so the SLP cannot hold"
        )
    if cfg.mode == "colored":
        kappa = _load_3coloring(c, cfg.coloring)
        report = check_colored_slp(c, kappa, cfg.trials, cfg.p, rng)
        out = report.to_json()
        out["coloring"] = _coloring_json(kappa)
    else:
        pi = _load_bicoloring(c, cfg.coloring)
        report = check_21_slp(c, pi, cfg.trials, cfg.p, rng)
        out = report.to_json()
        out["coloring"] = _coloring_json(pi)
        if not report.holds:
            cert = find_non_slp_certificate(c, pi)
            if cert is not None:
                out["certificate"] = cert.to_json()
    if report.holds:
        _log(f"SLP witness found (mode {cfg.mode}, p={cfg.p})")
    else:
        _log(f"no witness in {cfg.trials} trials (mode {cfg.mode}, p={cfg.p})")
    return out


def cmd_laman(cfg: RunConfig, graph_path: str | None = None) -> dict:
    if graph_path is not None:
        g = io.parse_edge_list(io.read_text(graph_path))
        out = {}
    else:
        c = _load_complex(cfg.path)
        if cfg.coloring == "auto":
            pi = _load_bicoloring(c, "auto")
        else:
            pi = io.parse_coloring(io.read_text(cfg.coloring))
            if set(pi) != set(c.vertices) or not all(x in (BLUE, RED) for x in pi.values()):
                raise InputError("coloring must assign b/r to every vertex")
            if not is_21_coloring(c, pi):
                raise InputError("coloring is not a (2,1)-coloring")
        g = blue_graph(c, pi)
        out = {"complex_hash": c.digest, "coloring": _coloring_json(pi)}
    verdict = is_23_sparse(g)
    out.update(verdict.to_json())
    if len(g.vertices) <= 16:
        out["brute_force_agrees"] = brute_force_23_sparse(g).sparse == verdict.sparse
    _log(f"blue graph: {len(g.vertices)} vertices, {len(g.edges)} edges, sparse={verdict.sparse}")
    return out


def cmd_reduce(cfg: RunConfig) -> dict:
    c = _load_complex(cfg.path)
    kappa = _load_3coloring(c, cfg.coloring)
    trace = batagelj_reduce(c, kappa)
    out = {"complex_hash": c.digest, **trace.to_json()}
    _log(f"{len(trace.steps)} steps, {len(trace.terminals)} octahedra")
    return out


def generated_21_corpus(n: int, max_vertices: int, seed: int):
    """n random (2,1)-colored spheres with at most max_vertices vertices, styles in rotation."""
    styles = ("balanced", "cone", "subdivision")
    rng = make_rng(seed)
    made = 0
    while made < n:
        style = styles[made % len(styles)]
        sub_seed = int(rng.integers(2**32))
        lo = 6 if style == "balanced" else 8
        target = int(rng.integers(lo, max_vertices - 1))
        c, pi = random_21_sphere(target, sub_seed, style)
        if len(c.vertices) > max_vertices:
            continue
        yield f"gen-{made}-{style}", c, pi
        made += 1


def cmd_check_thm2(cfg: RunConfig, gen: int | None = None, max_vertices: int = 14) -> dict:
    rng = make_rng(cfg.seed)
    items = []
    if gen is not None:
        instances = list(generated_21_corpus(gen, max_vertices, cfg.seed))
    else:
        c = _load_complex(cfg.path)
        instances = [(cfg.path, c, _load_bicoloring(c, cfg.coloring))]
    for name, c, pi in instances:
        res = check_theorem2(c, pi, cfg.trials, cfg.p, rng)
        row = {"name": name, "complex_hash": c.digest, "n": len(c.vertices), **res.to_json()}
        if len(c.vertices) <= 16:
            row["laman_brute_force_agrees"] = brute_force_23_sparse(blue_graph(c, pi)).sparse == res.laman.sparse
        items.append(row)
        _log(f"{name:<28} n={len(c.vertices):<3} slp={res.slp.verdict:<17} sparse={res.laman.sparse!s:<5} {res.status}")
    summary = {s: sum(r["status"] == s for r in items) for s in ("consistent", "inconsistent", "inconclusive")}
    return {"p": cfg.p, "trials": cfg.trials, "seed": cfg.seed, "summary": summary,
            "all_consistent": all(r["status"] == CONSISTENT for r in items), "results": items}


def cmd_generate(kind: str, n: int, k: int, seed: int, out: str | None) -> dict | None:
    coloring = None
    if kind == "octahedron":
        c, coloring = octahedron()
    elif kind == "tetrahedron":
        c = tetrahedron()
    elif kind == "stacked":
        c = stacked_sphere(k, seed)
    elif kind == "random":
        c = random_sphere(n, seed)
    elif kind == "subdivision":
        base = tetrahedron() if n <= 4 else octahedron()[0] if n == 6 else stacked_sphere(n - 4, seed)
        c, coloring = subdivide_all_facets(base)
    elif kind == "random_balanced":
        c, coloring = random_balanced_sphere(n, seed)
    elif kind == "random_21":
        c, coloring = random_21_sphere(n, seed, "cone")
    else:
        raise InputError(f"unknown generator {kind!r}")
    if out is None:
        sys.stdout.write(io.format_facets(c))
        if coloring is not None:
            sys.stderr.write(io.format_coloring(coloring))
        return None
    Path(out + ".txt").write_text(io.format_facets(c))
    if coloring is not None:
        Path(out + ".coloring").write_text(io.format_coloring(coloring))
    _log(f"wrote {out}.txt" + (f" and {out}.coloring" if coloring is not None else ""))
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balanced-slp",
        description="Strong Lefschetz checks for Stanley-Reisner rings of 2-spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, coloring=True):
        sp.add_argument("--p", type=int, default=DEFAULT_PRIME, help="prime modulus (default 1000003)")
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--seed", type=int, default=0)
        if coloring:
            sp.add_argument("--coloring", default="auto", help="coloring file or 'auto'")
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("validate", help="sphere check, f-vector, missing triangles, degrees")
    sp.add_argument("path")
    common(sp, coloring=False)

    sp = sub.add_parser("slp", help="search for a strong Lefschetz witness")
    sp.add_argument("path")
    sp.add_argument("--mode", choices=["colored", "21"], default="colored")
    common(sp)

    sp = sub.add_parser("laman", help="(2,3)-sparsity of the blue graph")
    sp.add_argument("path", nargs="?")
    sp.add_argument("--graph", help="edge-list file instead of a complex")
    common(sp)

    sp = sub.add_parser("reduce", help="Batagelj reduction of a balanced sphere to octahedra")
    sp.add_argument("path")
    common(sp)

    sp = sub.add_parser("check-thm2", help="compare (2,1) SLP search with the Laman condition")
    sp.add_argument("path", nargs="?")
    sp.add_argument("--gen", type=int, help="generate this many random (2,1)-spheres instead")
    sp.add_argument("--max-vertices", type=int, default=14)
    common(sp)

    sp = sub.add_parser("generate", help="write a generated complex in facet-list format")
    sp.add_argument("kind", choices=["octahedron", "tetrahedron", "stacked", "random",
                                     "subdivision", "random_balanced", "random_21"])
    sp.add_argument("--n", type=int, default=10, help="target vertex count (or base size for subdivision)")
    sp.add_argument("--k", type=int, default=1, help="number of stackings")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="output prefix; writes PREFIX.txt and PREFIX.coloring")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            cmd_generate(args.kind, args.n, args.k, args.seed, args.out)
            return EXIT_OK
        path = getattr(args, "path", None)
        if path is None and args.command not in ("laman", "check-thm2"):
            raise InputError("missing input path")
        cfg = RunConfig(args.command, path, args.p, args.trials, args.seed,
                        getattr(args, "coloring", "auto"), getattr(args, "mode", "colored"), args.out)
        if args.command == "validate":
            result = cmd_validate(cfg)
        elif args.command == "slp":
            result = cmd_slp(cfg)
        elif args.command == "laman":
            if path is None and args.graph is None:
                raise InputError("give a complex path or --graph")
            result = cmd_laman(cfg, args.graph)
        elif args.command == "reduce":
            result = cmd_reduce(cfg)
        else:
            if path is None and args.gen is None:
                raise InputError("give a complex path or --gen N")
            result = cmd_check_thm2(cfg, args.gen, args.max_vertices)
    except (ReductionError, AssertionError) as exc:
        _log(f"internal contradiction: {exc}")
        return EXIT_INTERNAL
    except (InputError, ComplexError, ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return EXIT_INPUT
    text = json.dumps(result, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
