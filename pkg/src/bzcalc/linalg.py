"""Exact row reduction over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], n_cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    if n_cols is None:
        if not rows:
            raise ValueError("need n_cols for an empty system")
        n_cols = len(rows[0])
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def restrict_to_coordinates(basis: Sequence[Vector], allowed: set[int]) -> list[Vector]:
    """Basis of ``span(basis) ∩ span{e_i : i in allowed}``.

    ``basis`` must be linearly independent.
    """
    if not basis:
        return []
    dim = len(basis[0])
    outside = [i for i in range(dim) if i not in allowed]
    # solve sum_k c_k basis[k][i] = 0 for every coordinate i outside ``allowed``
    system = [[b[i] for b in basis] for i in outside]
    coeffs = nullspace(system, len(basis)) if system else [
        tuple(Fraction(int(k == t)) for k in range(len(basis))) for t in range(len(basis))]
    return [tuple(sum((c * b[i] for c, b in zip(cs, basis)), Fraction(0)) for i in range(dim))
            for cs in coeffs]
