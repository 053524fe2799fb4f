"""Strong Lefschetz decisions for Artinian reductions of 2-spheres."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .algebra import (
    KIND_21,
    ColoredSequence,
    LinearForm,
    colored_sop,
    component_dim,
    cube_nonzero,
    kk_is_lsop,
    random_colored_sequence,
    random_linear_form,
)
from .coloring import BLUE, BiColoring, Coloring, is_21_coloring, is_proper, is_semi_proper
from .complex import Complex2, ComplexError, induced_subcomplex, sphere_defect
from .laman import LamanVerdict, blue_graph, brute_force_23_sparse, is_23_sparse
from .linalg import DEFAULT_PRIME, check_prime

HOLDS = "holds"
NO_WITNESS = "no-witness-found"

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
INCONCLUSIVE = "inconclusive"

DEFAULT_TRIALS = 5


@dataclass
class TrialRecord:
    dim2: int | None  # None when the sampled sequence was not an l.s.o.p.
    cube_nonzero: bool | None = None

    def to_json(self) -> dict:
        return {"dim2": self.dim2, "cube_nonzero": self.cube_nonzero}


@dataclass
class SLPReport:
    verdict: str
    mode: str
    p: int
    trials: int
    complex_hash: str
    dims: list[TrialRecord] = field(default_factory=list)
    theta: ColoredSequence | None = None
    w: LinearForm | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out = {
            "complex_hash": self.complex_hash,
            "mode": self.mode,
            "p": self.p,
            "trials": self.trials,
            "verdict": self.verdict,
            "dims": [d.to_json() for d in self.dims],
        }
        if self.holds:
            out["witness"] = {"theta": self.theta.to_json(), "w": self.w.to_json()}
        return out


@dataclass(frozen=True)
class NonSLPCertificate:
    W: tuple[int, ...]
    edges: int

    @property
    def bound(self) -> int:
        return self.edges - 2 * len(self.W) + 3

    def to_json(self) -> dict:
        return {"W": list(self.W), "edges": self.edges, "bound": self.bound}


def _require_sphere(c: Complex2) -> None:
    reason = sphere_defect(c)
    if reason is not None:
        raise ComplexError(f"not a 2-sphere: {reason}")


def _guard_characteristic(p: int) -> int:
    p = check_prime(p)
    if p in (2, 3):
        raise ValueError(
            f"characteristic {p}: every linear form cubes to zero modulo the colored "
            "system of parameters, so the strong Lefschetz property fails trivially"
        )
    return p


def _test_witness(c: Complex2, theta: ColoredSequence, w: LinearForm, p: int) -> TrialRecord:
    dim2 = component_dim(c, list(theta) + [w], 2, p)
    cube = cube_nonzero(c, theta, w, p) if dim2 == 0 else None
    return TrialRecord(dim2, cube)


def check_colored_slp(
    c: Complex2,
    kappa: Coloring,
    trials: int = DEFAULT_TRIALS,
    p: int = DEFAULT_PRIME,
    rng: np.random.Generator | None = None,
) -> SLPReport:
    """Search for w with (F[c]/(Theta, w))_2 = 0 and w^3 != 0, Theta the colored s.o.p."""
    _require_sphere(c)
    p = _guard_characteristic(p)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not is_proper(c, kappa):
        raise ComplexError("coloring is not proper")
    rng = rng if rng is not None else np.random.default_rng(0)
    theta = colored_sop(c, kappa)
    report = SLPReport(NO_WITNESS, "colored", p, trials, c.digest)
    for _ in range(trials):
        w = random_linear_form(c.vertices, rng, p)
        rec = _test_witness(c, theta, w, p)
        report.dims.append(rec)
        if rec.dim2 == 0 and rec.cube_nonzero:
            report.verdict, report.theta, report.w = HOLDS, theta, w
            break
    return report


def check_21_slp(
    c: Complex2,
    pi: BiColoring,
    trials: int = DEFAULT_TRIALS,
    p: int = DEFAULT_PRIME,
    rng: np.random.Generator | None = None,
) -> SLPReport:
    """Sample (2,1)-colored sequences Theta and forms w looking for an SLP witness.

    For a (2,1)-coloring, Theta must pass the Kind-Kleinschmidt test and a
    witness needs (F[c]/(Theta, w))_2 = 0 and w^3 != 0.  For a coloring that
    is only semi-proper, the l.s.o.p. filter is dropped and degree-2
    vanishing alone is the verdict (mode "semi-proper").
    """
    _require_sphere(c)
    p = _guard_characteristic(p)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if is_21_coloring(c, pi):
        mode = "21"
    elif is_semi_proper(c, pi):
        mode = "semi-proper"
    else:
        raise ComplexError("bi-coloring is neither a (2,1)-coloring nor semi-proper")
    rng = rng if rng is not None else np.random.default_rng(0)
    report = SLPReport(NO_WITNESS, mode, p, trials, c.digest)
    for _ in range(trials):
        theta = random_colored_sequence(c, pi, rng, KIND_21, p)
        w = random_linear_form(c.vertices, rng, p)
        if mode == "21" and not kk_is_lsop(c, theta, p):
            report.dims.append(TrialRecord(None))
            continue
        rec = _test_witness(c, theta, w, p)
        report.dims.append(rec)
        if rec.dim2 == 0 and (rec.cube_nonzero or mode == "semi-proper"):
            report.verdict, report.theta, report.w = HOLDS, theta, w
            break
    return report


def laman_lower_bound(c: Complex2, pi: BiColoring, W) -> int:
    """e(Delta_W) - 2|W| + 3, a lower bound on dim (F[c]/(Theta, w))_2."""
    W = sorted(set(W))
    if len(W) < 2:
        raise ValueError("W needs at least two vertices")
    if any(pi[v] != BLUE for v in W):
        raise ValueError("W must consist of blue vertices")
    _, e = induced_subcomplex(c, W)
    return e - 2 * len(W) + 3


def _certificate(verdict: LamanVerdict) -> NonSLPCertificate | None:
    if verdict.sparse:
        return None
    return NonSLPCertificate(verdict.violation, verdict.violation_edges)


def find_non_slp_certificate(c: Complex2, pi: BiColoring, method: str = "pebble") -> NonSLPCertificate | None:
    g = blue_graph(c, pi)
    if method == "pebble":
        return _certificate(is_23_sparse(g))
    if method == "brute":
        return _certificate(brute_force_23_sparse(g))
    raise ValueError(f"unknown method {method!r}")


def max_laman_bound_brute(c: Complex2, pi: BiColoring) -> int:
    """Largest laman_lower_bound over all blue subsets with |W| >= 2 (exhaustive)."""
    blue = sorted(v for v in c.vertices if pi[v] == BLUE)
    if len(blue) > 16:
        raise ValueError("exhaustive scan limited to 16 blue vertices")
    g = blue_graph(c, pi)
    best = None
    for k in range(2, len(blue) + 1):
        for W in combinations(blue, k):
            b = g.induced_edge_count(W) - 2 * k + 3
            best = b if best is None else max(best, b)
    return best if best is not None else 0


@dataclass
class SLPLamanCheck:
    status: str
    slp: SLPReport
    laman: LamanVerdict
    certificate: NonSLPCertificate | None

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "slp_verdict": self.slp.verdict,
            "laman_sparse": self.laman.sparse,
            "slp": self.slp.to_json(),
            "laman": self.laman.to_json(),
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def check_theorem2(
    c: Complex2,
    pi: BiColoring,
    trials: int = DEFAULT_TRIALS,
    p: int = DEFAULT_PRIME,
    rng: np.random.Generator | None = None,
) -> SLPLamanCheck:
    """Compare the sampled (2,1) SLP verdict with the blue-graph sparsity verdict."""
    slp = check_21_slp(c, pi, trials, p, rng)
    laman = is_23_sparse(blue_graph(c, pi))
    if slp.holds == laman.sparse:
        status = CONSISTENT
    elif laman.sparse:
        status = INCONCLUSIVE
    else:
        status = INCONSISTENT
    return SLPLamanCheck(status, slp, laman, _certificate(laman))
