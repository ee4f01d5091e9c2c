"""Small dense linear algebra over F_p on lists of ints."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def _copy(rows: Sequence[Sequence[int]], p: int) -> Matrix:
    return [[int(v) % p for v in row] for row in rows]


def rref(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    a = _copy(rows, p)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [v * inv % p for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(vi - f * vr) % p for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1]) if rows else 0


def det(rows: Sequence[Sequence[int]], p: int) -> int:
    a = _copy(rows, p)
    n = len(a)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result = result * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(vi - f * vc) % p for vi, vc in zip(a[i], a[c])]
    return result % p


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int) -> Matrix:
    """Basis of {x : rows @ x = 0} in F_p^ncols."""
    red, pivots = rref(rows, p, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc] % p
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]
