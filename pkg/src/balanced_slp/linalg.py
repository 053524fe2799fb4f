"""Exact row reduction over a prime field F_p."""

from __future__ import annotations

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 1_000_003
# entries < p and products < p**2 must fit in int64
MAX_PRIME = 2**31 - 1


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise ValueError(f"modulus {p} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"modulus {p} exceeds {MAX_PRIME}")
    return int(p)


def row_echelon(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M mod p.

    Pivots are taken column by column, choosing the first row with a
    nonzero entry in that column.  Returns the nonzero rows of the reduced
    matrix and the list of pivot columns.
    """
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    n_rows, n_cols = A.shape
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        nz = np.flatnonzero(A[r:, col])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, col]), -1, p)
        A[r] = (A[r] * inv) % p
        factors = A[:, col].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = (A[hit] - np.outer(factors[hit], A[r])) % p
        pivots.append(col)
        r += 1
    return A[:r], pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(row_echelon(M, p)[1])


def in_row_space(echelon: np.ndarray, pivots: list[int], v: np.ndarray, p: int) -> bool:
    """Whether v lies in the span of a reduced echelon basis."""
    v = np.array(v, dtype=np.int64) % p
    for row, col in zip(echelon, pivots):
        if v[col]:
            v = (v - v[col] * row) % p
    return not v.any()
