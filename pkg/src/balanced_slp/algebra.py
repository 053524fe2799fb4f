"""Linear forms and graded components of Stanley-Reisner quotients over F_p.

Monomials are sorted vertex tuples with repetition, e.g. ``(1, 1, 4)`` is
x1^2 x4.  Two matrix builders are provided:

* the *face* basis: since I_Delta is spanned by the monomials whose support
  is a non-face, ``(S / (I_Delta + L))_d`` is ``F[Delta]_d`` modulo the
  images of ``l * m``; only monomials supported on faces appear as columns;
* the *full* basis (:func:`graded_matrix`): all degree-d monomials of S as
  columns, with the multiples of the minimal non-face generators as rows.

Both give the same dimensions; the full one is kept as an independent check
and because the deformation rows of :func:`deformed_quadrics` live in S_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import factorial
from collections import Counter
from typing import Iterable, Protocol, Sequence

import numpy as np

from .coloring import BLUE, RED, BiColoring, Coloring, is_proper
from .complex import Complex2
from .linalg import DEFAULT_PRIME, check_prime, in_row_space, rank_mod_p, row_echelon

Monomial = tuple[int, ...]

KIND_COLORED = "colored-sop"
KIND_21 = "(2,1)-sequence"
KIND_SEMI = "semi-proper-generic"
KINDS = (KIND_COLORED, KIND_21, KIND_SEMI)


class FaceComplex(Protocol):
    vertices: tuple[int, ...]

    def has_face(self, face: Iterable[int]) -> bool: ...


@dataclass
class LinearForm:
    """sum of coeffs[v] * x_v; zero coefficients are dropped."""

    coeffs: dict[int, int] = field(default_factory=dict)

    @classmethod
    def of(cls, coeffs: dict[int, int], p: int) -> "LinearForm":
        return cls({v: c % p for v, c in sorted(coeffs.items()) if c % p})

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.coeffs)

    def __getitem__(self, v: int) -> int:
        return self.coeffs.get(v, 0)

    def to_json(self) -> dict[str, int]:
        return {str(v): c for v, c in sorted(self.coeffs.items())}


@dataclass
class ColoredSequence:
    thetas: tuple[LinearForm, LinearForm, LinearForm]
    kind: str

    def __iter__(self):
        return iter(self.thetas)

    def to_json(self) -> dict:
        return {"kind": self.kind, "thetas": [t.to_json() for t in self.thetas]}


@dataclass
class GradedMatrix:
    """Coefficient rows of a spanning set of a degree-d ideal component."""

    degree: int
    columns: list[Monomial]
    rows: np.ndarray

    def rank(self, p: int) -> int:
        return rank_mod_p(self.rows, p)

    def to_csv(self) -> str:
        head = ",".join("*".join(f"x{v}" for v in m) for m in self.columns)
        body = "\n".join(",".join(map(str, r)) for r in self.rows)
        return head + "\n" + body + "\n"


def monomials(variables: Sequence[int], d: int) -> list[Monomial]:
    """All degree-d monomials, lexicographic on sorted exponent tuples."""
    return list(combinations_with_replacement(sorted(variables), d))


def face_monomials(c: FaceComplex, d: int) -> list[Monomial]:
    if d == 0:
        return [()]
    return [m for m in monomials(c.vertices, d) if c.has_face(set(m))]


def _times(m: Monomial, v: int) -> Monomial:
    return tuple(sorted(m + (v,)))


def _forms_list(theta, W) -> list[LinearForm]:
    forms: list[LinearForm] = []
    if theta is not None:
        forms.extend(theta)
    forms.extend(W or ())
    return forms


def _quotient_rows(c: FaceComplex, forms: list[LinearForm], d: int, p: int) -> tuple[np.ndarray, list[Monomial]]:
    cols = face_monomials(c, d)
    index = {m: i for i, m in enumerate(cols)}
    lower = face_monomials(c, d - 1)
    rows = np.zeros((len(forms) * len(lower), len(cols)), dtype=np.int64)
    r = 0
    for form in forms:
        for m in lower:
            for v, a in form.coeffs.items():
                j = index.get(_times(m, v))
                if j is not None:
                    rows[r, j] = (rows[r, j] + a) % p
            r += 1
    return rows, cols


def minimal_nonfaces(c: FaceComplex, max_degree: int) -> list[Monomial]:
    out = []
    for k in range(2, max_degree + 1):
        for s in combinations(c.vertices, k):
            if not c.has_face(s) and all(c.has_face(t) for t in combinations(s, k - 1)):
                out.append(s)
    return out


def quadric_set(c: FaceComplex) -> list[Monomial]:
    """The monomials x_u x_v with {u, v} not an edge."""
    return [s for s in combinations(c.vertices, 2) if not c.has_face(s)]


def graded_matrix(
    c: FaceComplex,
    forms: Sequence[LinearForm],
    d: int,
    p: int,
    variables: Sequence[int] | None = None,
) -> GradedMatrix:
    """Degree-d component of I_Delta + (forms) in the full monomial basis of S_d."""
    variables = sorted(variables if variables is not None else c.vertices)
    cols = monomials(variables, d)
    index = {m: i for i, m in enumerate(cols)}
    rows: list[np.ndarray] = []
    seen: set[Monomial] = set()
    for g in minimal_nonfaces(c, d):
        for m in monomials(variables, d - len(g)):
            prod = tuple(sorted(g + m))
            if prod not in seen:
                seen.add(prod)
                row = np.zeros(len(cols), dtype=np.int64)
                row[index[prod]] = 1
                rows.append(row)
    for form in forms:
        for m in monomials(variables, d - 1):
            row = np.zeros(len(cols), dtype=np.int64)
            for v, a in form.coeffs.items():
                j = index[_times(m, v)]
                row[j] = (row[j] + a) % p
            rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(cols))
    return GradedMatrix(d, cols, mat)


def component_dim(c: FaceComplex, forms: Sequence[LinearForm], d: int, p: int) -> int:
    """dim (S / (I_Delta + (forms)))_d for any d >= 0, via the face basis."""
    if d == 0:
        return 1
    rows, cols = _quotient_rows(c, list(forms), d, p)
    return len(cols) - rank_mod_p(rows, p)


def ideal_component_dim(
    c: FaceComplex,
    theta: ColoredSequence | Sequence[LinearForm] | None,
    W: Sequence[LinearForm] | None,
    d: int,
    p: int = DEFAULT_PRIME,
    method: str = "faces",
) -> int:
    """dim of (S / (I_Delta + (theta, W)))_d for d in {2, 3, 4}."""
    if d not in (2, 3, 4):
        raise ValueError(f"degree must be 2, 3 or 4, got {d}")
    check_prime(p)
    forms = _forms_list(theta, W)
    if method == "faces":
        return component_dim(c, forms, d, p)
    if method == "full":
        gm = graded_matrix(c, forms, d, p)
        return len(gm.columns) - gm.rank(p)
    raise ValueError(f"unknown method {method!r}")


def hilbert_function(c: FaceComplex, theta, p: int = DEFAULT_PRIME, max_degree: int = 4) -> list[int]:
    forms = _forms_list(theta, None)
    return [component_dim(c, forms, d, p) for d in range(max_degree + 1)]


def _cube_coefficient(m: Monomial, w: LinearForm, p: int) -> int:
    mult = factorial(3)
    for k in Counter(m).values():
        mult //= factorial(k)
    val = mult
    for v in m:
        val = val * w[v] % p
    return val % p


def cube_vector(cols: list[Monomial], w: LinearForm, p: int) -> np.ndarray:
    return np.array([_cube_coefficient(m, w, p) for m in cols], dtype=np.int64)


def cube_nonzero(c: FaceComplex, theta, w: LinearForm, p: int = DEFAULT_PRIME, method: str = "faces") -> bool:
    """Whether w^3 is nonzero in (S / (I_Delta + theta))_3."""
    check_prime(p)
    forms = _forms_list(theta, None)
    if method == "faces":
        rows, cols = _quotient_rows(c, forms, 3, p)
    elif method == "full":
        gm = graded_matrix(c, forms, 3, p)
        rows, cols = gm.rows, gm.columns
    else:
        raise ValueError(f"unknown method {method!r}")
    vec = cube_vector(cols, w, p)
    if rows.shape[0] == 0:
        return bool(vec.any())
    ech, piv = row_echelon(rows, p)
    return not in_row_space(ech, piv, vec, p)


def kk_is_lsop(c: Complex2, theta, p: int = DEFAULT_PRIME) -> bool:
    """Kind-Kleinschmidt: every face's 3 x |face| coefficient block has full column rank."""
    check_prime(p)
    forms = list(theta)
    if len(forms) != 3:
        raise ValueError("expected three linear forms")
    for face in c.faces:
        block = np.array([[f[v] for v in face] for f in forms], dtype=np.int64)
        if rank_mod_p(block, p) != len(face):
            return False
    return True


def colored_sop(c: Complex2, kappa: Coloring) -> ColoredSequence:
    if not is_proper(c, kappa):
        raise ValueError("coloring is not a proper coloring of the complex")
    if set(kappa.values()) != {1, 2, 3}:
        raise ValueError("coloring must use all three colors")
    thetas = tuple(
        LinearForm({v: 1 for v in sorted(kappa) if kappa[v] == i}) for i in (1, 2, 3)
    )
    return ColoredSequence(thetas, KIND_COLORED)


def random_linear_form(support: Iterable[int], rng: np.random.Generator, p: int) -> LinearForm:
    support = sorted(support)
    vals = rng.integers(0, p, size=len(support))
    return LinearForm.of(dict(zip(support, (int(x) for x in vals))), p)


def random_colored_sequence(
    c: Complex2,
    pi: BiColoring,
    rng: np.random.Generator,
    kind: str = KIND_21,
    p: int = DEFAULT_PRIME,
) -> ColoredSequence:
    """Two random blue forms and a third form on the red (or all) vertices."""
    blue = [v for v in c.vertices if pi[v] == BLUE]
    if not blue:
        raise ValueError("bi-coloring has no blue vertices")
    if kind == KIND_21:
        third = [v for v in c.vertices if pi[v] == RED]
    elif kind == KIND_SEMI:
        third = list(c.vertices)
    else:
        raise ValueError(f"kind must be {KIND_21!r} or {KIND_SEMI!r}")
    t1 = random_linear_form(blue, rng, p)
    t2 = random_linear_form(blue, rng, p)
    t3 = random_linear_form(third, rng, p)
    return ColoredSequence((t1, t2, t3), kind)


def deformed_quadrics(
    c: Complex2,
    p_vtx: int,
    q_vtx: int,
    t: int,
    prime: int = DEFAULT_PRIME,
    forms: Sequence[LinearForm] = (),
) -> GradedMatrix:
    """Rows of Phi_t applied to every non-edge quadric of c, in the basis of S_2.

    Phi_t(m) = m * x_p / x_q + t * m when x_q divides m and m * x_p / x_q is
    neither a square nor a non-edge quadric; otherwise Phi_t(m) = m.  When
    `forms` are given, the rows x_v * l for every vertex v and form l are
    appended.
    """
    if p_vtx == q_vtx:
        raise ValueError("p and q must be distinct")
    verts = c.vertices
    if p_vtx not in verts or q_vtx not in verts:
        raise ValueError("p and q must be vertices of the complex")
    cols = monomials(verts, 2)
    index = {m: i for i, m in enumerate(cols)}
    quads = set(quadric_set(c))
    rows = []
    for m in sorted(quads):
        row = np.zeros(len(cols), dtype=np.int64)
        if q_vtx in m:
            (u,) = [x for x in m if x != q_vtx]
            shifted = tuple(sorted((p_vtx, u)))
            if u != p_vtx and shifted not in quads:
                row[index[shifted]] = 1
                row[index[m]] = t % prime
                rows.append(row)
                continue
        row[index[m]] = 1
        rows.append(row)
    for form in forms:
        for v in verts:
            row = np.zeros(len(cols), dtype=np.int64)
            for u, a in form.coeffs.items():
                j = index[_times((v,), u)]
                row[j] = (row[j] + a) % prime
            rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(cols))
    return GradedMatrix(2, cols, mat)


def same_row_space(A: np.ndarray, B: np.ndarray, p: int) -> bool:
    ra, rb = rank_mod_p(A, p), rank_mod_p(B, p)
    return ra == rb == rank_mod_p(np.vstack([A, B]), p)
