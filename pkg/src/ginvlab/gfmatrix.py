"""Exact linear algebra over prime fields GF(q).

Matrices are plain numpy int64 arrays with entries reduced mod q; every
function takes q explicitly.  Elimination is integer-exact (modular
inverses via pow(x, -1, q)), so there is no floating point anywhere.

The rank factorization A = E · diag(I_r, 0) · F drives the constructive
inner inverse G0 = F^-1 · diag(I_r, 0) · E^-1, which is reflexive by
construction, and the rank-additivity intersection tests behind the
inner-inverse-set comparison criterion for matrix rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BadTensorShape


def as_matrix(data, q: int, k: Optional[int] = None) -> np.ndarray:
    """Validate and reduce input to an int64 matrix mod q."""
    A = np.asarray(data, dtype=np.int64)
    if A.ndim != 2:
        raise BadTensorShape(f"expected a 2-d matrix, got shape {A.shape}")
    if k is not None and A.shape != (k, k):
        raise BadTensorShape(f"expected a {k}x{k} matrix, got shape {A.shape}")
    return A % q


def row_reduce(A: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """RREF with a recorded transform: returns (R, T, pivots), T·A = R mod q."""
    A = np.asarray(A, dtype=np.int64) % q
    m, n = A.shape
    R = A.copy()
    T = np.eye(m, dtype=np.int64)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        hit = np.nonzero(R[row:, col])[0]
        if len(hit) == 0:
            continue
        piv = row + int(hit[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
            T[[row, piv]] = T[[piv, row]]
        inv = pow(int(R[row, col]), -1, q)
        R[row] = (R[row] * inv) % q
        T[row] = (T[row] * inv) % q
        others = np.nonzero(R[:, col])[0]
        for r in others:
            if r == row:
                continue
            factor = int(R[r, col])
            R[r] = (R[r] - factor * R[row]) % q
            T[r] = (T[r] - factor * T[row]) % q
        pivots.append(col)
        row += 1
    return R, T, pivots


def rank(A, q: int) -> int:
    """Row rank over GF(q)."""
    _, _, pivots = row_reduce(np.asarray(A, dtype=np.int64) % q, q)
    return len(pivots)


def invert(A, q: int) -> Optional[np.ndarray]:
    """Inverse mod q, or None if singular."""
    A = np.asarray(A, dtype=np.int64) % q
    k = A.shape[0]
    R, T, pivots = row_reduce(A, q)
    if len(pivots) != k:
        return None
    return T % q


def solve(A, b, q: int) -> Optional[np.ndarray]:
    """One solution x of A x = b mod q, or None if inconsistent."""
    A = np.asarray(A, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64) % q
    m, n = A.shape
    R, T, pivots = row_reduce(A, q)
    c = (T @ b) % q
    if len(pivots) < m and c[len(pivots):].any():
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, col in enumerate(pivots):
        x[col] = c[i]
    return x


@dataclass
class RankFactorization:
    """A = E · diag(I_r, 0) · F with cached inverses, all mod q."""

    E: np.ndarray
    r: int
    F: np.ndarray
    E_inv: np.ndarray
    F_inv: np.ndarray
    q: int

    def diagonal(self) -> np.ndarray:
        k = self.E.shape[0]
        D = np.zeros((k, k), dtype=np.int64)
        D[: self.r, : self.r] = np.eye(self.r, dtype=np.int64)
        return D

    def reconstruct(self) -> np.ndarray:
        return (self.E @ self.diagonal() @ self.F) % self.q


def rank_factorization(A, q: int) -> RankFactorization:
    """Exact factorization A = E · diag(I_r, 0) · F over GF(q).

    Row-reduce A to get T1·A in RREF; because an RREF matrix has column
    space spanned by the first r standard vectors, row-reducing its
    transpose finishes the job: T2·(T1·A)^T = diag, so
    T1·A·T2^T = diag(I_r, 0).
    """
    A = np.asarray(A, dtype=np.int64) % q
    R, T1, pivots = row_reduce(A, q)
    R2, T2, _ = row_reduce(R.T % q, q)
    C = T2.T % q
    r = len(pivots)
    E = invert(T1, q)
    F = invert(C, q)
    return RankFactorization(E=E, r=r, F=F, E_inv=T1 % q, F_inv=C, q=q)


def inner_inverse_matrix(A, q: int) -> np.ndarray:
    """The canonical reflexive inner inverse G0 = F^-1 · diag(I_r,0) · E^-1."""
    fac = rank_factorization(A, q)
    return (fac.F_inv @ fac.diagonal() @ fac.E_inv) % q


def col_intersection_trivial(B, D, q: int) -> bool:
    """True iff the column spaces of B and D meet only in 0.

    Equivalent to rank([B | D]) = rank(B) + rank(D), and to
    BR ∩ DR = {0} in the matrix ring.
    """
    B = np.asarray(B, dtype=np.int64) % q
    D = np.asarray(D, dtype=np.int64) % q
    stacked = np.hstack([B, D])
    return rank(stacked, q) == rank(B, q) + rank(D, q)


def row_intersection_trivial(B, D, q: int) -> bool:
    """True iff the row spaces of B and D meet only in 0 (RB ∩ RD dual)."""
    B = np.asarray(B, dtype=np.int64) % q
    D = np.asarray(D, dtype=np.int64) % q
    return col_intersection_trivial(B.T, D.T, q)


def membership_aR(b, a, q: int) -> bool:
    """b ∈ aR, decided by a·a⁻·b = b for the constructive inner inverse."""
    a = np.asarray(a, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64) % q
    g = inner_inverse_matrix(a, q)
    return np.array_equal((a @ g @ b) % q, b)


def membership_Ra(b, a, q: int) -> bool:
    """b ∈ Ra, decided by b·a⁻·a = b."""
    a = np.asarray(a, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64) % q
    g = inner_inverse_matrix(a, q)
    return np.array_equal((b @ g @ a) % q, b)


def inner_subset_matrices(A, B, q: int) -> bool:
    """Decides {X : AXA=A} ⊆ {X : BXB=B} without enumerating either set.

    Criterion (valid for regular elements of a semiprime ring, which all
    matrices over a field are): with D = A − B, both BR ∩ DR = {0} and
    RB ∩ RD = {0}.
    """
    A = np.asarray(A, dtype=np.int64) % q
    B = np.asarray(B, dtype=np.int64) % q
    D = (A - B) % q
    return col_intersection_trivial(B, D, q) and row_intersection_trivial(B, D, q)


def inner_set_equal_matrices(A, B, q: int) -> bool:
    """Decides I(A) = I(B) via the subset criterion in both directions."""
    return inner_subset_matrices(A, B, q) and inner_subset_matrices(B, A, q)


def parse_matrix(text: str, k: int, q: int) -> np.ndarray:
    """Parse the CLI matrix form: rows split by ';', entries by ','."""
    rows = []
    for chunk in text.strip().split(";"):
        entries = chunk.split(",")
        try:
            rows.append([int(v.strip()) for v in entries])
        except ValueError as exc:
            raise BadTensorShape(f"bad matrix entry in {chunk!r}") from exc
    if len(rows) != k or any(len(r) != k for r in rows):
        shape = f"{len(rows)} rows of lengths {[len(r) for r in rows]}"
        raise BadTensorShape(f"expected a {k}x{k} matrix, got {shape}")
    return np.asarray(rows, dtype=np.int64) % q


def render_matrix(A) -> str:
    A = np.asarray(A, dtype=np.int64)
    return ";".join(",".join(str(int(v)) for v in row) for row in A)
