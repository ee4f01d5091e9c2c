"""F_p-subspaces of F_p^m in canonical reduced row-echelon form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg
from .field import FieldElement


def _coords(v) -> tuple[int, ...]:
    if isinstance(v, FieldElement):
        return v.coeffs
    return tuple(int(c) for c in v)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^m stored by its unique RREF basis."""

    p: int
    m: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        v = _coords(v)
        red, _ = linalg.rref([*self.basis, v], self.p, self.m)
        return len(red) == self.dim

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, m={self.m}, basis={serialize(self)!r})"


def canonicalize(vectors: Iterable, p: int, m: int) -> Subspace:
    rows = [_coords(v) for v in vectors]
    for row in rows:
        if len(row) != m:
            raise ValueError(f"vector {row} does not live in F_{p}^{m}")
    red, _ = linalg.rref(rows, p, m) if rows else ([], [])
    return Subspace(p, m, tuple(tuple(r) for r in red))


def zero_subspace(p: int, m: int) -> Subspace:
    return Subspace(p, m, ())


def full_space(p: int, m: int) -> Subspace:
    return Subspace(p, m, tuple(tuple(r) for r in linalg.identity(m)))


def gaussian_binomial(m: int, r: int, p: int) -> int:
    """Number of r-dimensional subspaces of F_p^m."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    num = den = 1
    for i in range(r):
        num *= p ** (m - i) - 1
        den *= p ** (r - i) - 1
    return num // den


def _pattern_block(p: int, m: int, pivots: Sequence[int]) -> np.ndarray:
    """All RREF matrices with the given pivot columns, shape (p^f, r, m).

    Free positions are taken row-major; the first free position is the most
    significant digit, so the block order equals itertools.product order.
    """
    r = len(pivots)
    pivset = set(pivots)
    free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivset]
    count = p ** len(free)
    block = np.zeros((count, r, m), dtype=np.int64)
    for i, pc in enumerate(pivots):
        block[:, i, pc] = 1
    idx = np.arange(count, dtype=np.int64)
    for j, (i, c) in enumerate(free):
        block[:, i, c] = (idx // p ** (len(free) - 1 - j)) % p
    return block


def pivot_patterns(m: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(m), r))


def rref_blocks(p: int, m: int, r: int, part: int = 0, parts: int = 1) -> Iterator[np.ndarray]:
    """Stacked RREF bases of every r-dimensional subspace, grouped by pivot pattern.

    ``part``/``parts`` select a disjoint share of the patterns (round robin),
    so ``parts`` workers together cover each subspace exactly once.
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    for k, pivots in enumerate(pivot_patterns(m, r)):
        if k % parts == part:
            yield _pattern_block(p, m, pivots)


def enumerate_subspaces(p: int, m: int, r: int, part: int = 0, parts: int = 1) -> Iterator[Subspace]:
    """Every r-dimensional subspace exactly once, ordered by pivot set then free entries."""
    for block in rref_blocks(p, m, r, part, parts):
        for basis in block.tolist():
            yield Subspace(p, m, tuple(tuple(row) for row in basis))


def all_subspaces(p: int, m: int) -> Iterator[Subspace]:
    for r in range(m + 1):
        yield from enumerate_subspaces(p, m, r)


def intersect(h: Subspace, g: Subspace) -> Subspace:
    if (h.p, h.m) != (g.p, g.m):
        raise ValueError("subspaces live in different ambient spaces")
    p, m = h.p, h.m
    # H ∩ G = ann(ann H + ann G) for the standard dot product
    ann = linalg.nullspace(list(h.basis), p, m) + linalg.nullspace(list(g.basis), p, m)
    return canonicalize(linalg.nullspace(ann, p, m), p, m)


def coefficient_grid(p: int, d: int) -> np.ndarray:
    """All vectors of F_p^d as rows, in itertools.product order."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)


def members(h: Subspace) -> Iterator[tuple[int, ...]]:
    """All p^dim vectors of H, once each."""
    if h.dim == 0:
        yield (0,) * h.m
        return
    basis = np.array(h.basis, dtype=np.int64)
    for row in (coefficient_grid(h.p, h.dim) @ basis % h.p).tolist():
        yield tuple(row)


def serialize(h: Subspace) -> str:
    return ";".join(",".join(str(c) for c in row) for row in h.basis)


def parse_subspace(text: str, p: int, m: int) -> Subspace:
    text = text.strip()
    if not text:
        return zero_subspace(p, m)
    rows = [[int(c) for c in row.split(",")] for row in text.split(";")]
    return canonicalize(rows, p, m)
