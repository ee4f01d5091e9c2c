"""Defining-set codes C_D = {(Tr(x d))_{d in D} : x in F_{p^m}} with D a level set of f.

Weight hierarchies are computed two independent ways: from the definition
(minimum support over r-dimensional subcodes) and via the intersection
formula d_r = n - max |D ∩ H| over (m-r)-dimensional H.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from . import linalg
from .field import FieldElement, FieldSpec, trace
from .quadform import QuadraticForm, evaluate, rank
from .subspace import coefficient_grid, rref_blocks


class UnusableCodeError(ValueError):
    """The defining set is empty."""


class DimensionError(ValueError):
    """The message map is not injective, so subcodes do not match message subspaces."""

    def __init__(self, dimension: int, m: int):
        self.dimension = dimension
        self.m = m
        super().__init__(
            f"code dimension {dimension} < m = {m}: the subspace-intersection formula "
            f"requires the code to have dimension m"
        )


@dataclass(frozen=True)
class WeightHierarchy:
    values: tuple[int, ...]

    def violations(self, n: int) -> list[str]:
        """Structural checks: strict increase, generalized Singleton, d_k = n."""
        k = len(self.values)
        out = []
        for r in range(1, k):
            if not self.values[r - 1] < self.values[r]:
                out.append(f"not strictly increasing at r={r}: {self.values[r - 1]} >= {self.values[r]}")
        for r, d in enumerate(self.values, start=1):
            if d > n - k + r:
                out.append(f"Singleton bound fails at r={r}: {d} > {n - k + r}")
        if k and self.values[-1] != n:
            out.append(f"d_k = {self.values[-1]} differs from n = {n}")
        return out


@dataclass(frozen=True)
class DefiningSetCode:
    form: QuadraticForm
    level: int
    defining_set: tuple[FieldElement, ...]

    @property
    def spec(self) -> FieldSpec:
        return self.form.spec

    @property
    def n(self) -> int:
        return len(self.defining_set)

    @property
    def m(self) -> int:
        return self.spec.m

    @cached_property
    def generator(self) -> np.ndarray:
        """m x n matrix whose row i is the codeword of the i-th basis element."""
        spec = self.spec
        rows = [encode(self, spec.element(spec.p**i)) for i in range(spec.m)]
        return np.array(rows, dtype=np.int64).reshape(spec.m, self.n)

    @cached_property
    def indicator(self) -> np.ndarray:
        """Boolean table over integer encodings marking membership in D."""
        table = np.zeros(self.spec.order, dtype=bool)
        table[[int(d) for d in self.defining_set]] = True
        return table


def build_code(f: QuadraticForm, a: int) -> DefiningSetCode:
    a %= f.p
    if rank(f) != f.m:
        raise ValueError("defining-set codes need a non-degenerate form")
    dset = tuple(x for x in f.spec.elements() if x and evaluate(f, x) == a)
    if not dset:
        raise UnusableCodeError(f"defining set D_{a} is empty")
    return DefiningSetCode(f, a, dset)


def encode(code: DefiningSetCode, x: FieldElement) -> tuple[int, ...]:
    return tuple(trace(x * d) for d in code.defining_set)


def code_dimension(code: DefiningSetCode) -> int:
    return linalg.rank(code.generator.tolist(), code.spec.p)


def weight_distribution(code: DefiningSetCode) -> dict[int, int]:
    p, m = code.spec.p, code.m
    words = coefficient_grid(p, m) @ code.generator % p
    weights, counts = np.unique(np.count_nonzero(words, axis=1), return_counts=True)
    return {int(w): int(c) for w, c in zip(weights, counts)}


# -- parallel reduction over subspace blocks --------------------------------

def _reduce_blocks(p: int, m: int, r: int, score: Callable[[np.ndarray], int],
                   reducer: Callable[..., int], jobs: int) -> int:
    def run(part: int) -> int | None:
        # a share may hold no pivot pattern at all when jobs > C(m, r)
        return reducer((score(block) for block in rref_blocks(p, m, r, part, jobs)), default=None)

    if jobs <= 1:
        return run(0)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        partials = [v for v in pool.map(run, range(jobs)) if v is not None]
    return reducer(partials)


def _check_rank(code: DefiningSetCode, r: int) -> None:
    if not 1 <= r <= code.m:
        raise ValueError(f"r must be in 1..{code.m}, got {r}")
    dim = code_dimension(code)
    if dim != code.m:
        raise DimensionError(dim, code.m)


_CHUNK = 2048


def _min_support(code: DefiningSetCode, block: np.ndarray) -> int:
    best = code.n
    for start in range(0, len(block), _CHUNK):
        # (count, r, m) message bases -> (count, r, n) codeword bases
        words = np.einsum("krm,mn->krn", block[start:start + _CHUNK], code.generator) % code.spec.p
        best = min(best, int(np.any(words, axis=1).sum(axis=1).min()))
    return best


def ghw_wei(code: DefiningSetCode, r: int, jobs: int = 1) -> int:
    """min |Supp(V)| over r-dimensional subcodes V."""
    _check_rank(code, r)
    return _reduce_blocks(code.spec.p, code.m, r, lambda b: _min_support(code, b), min, jobs)


def _max_intersection(code: DefiningSetCode, block: np.ndarray) -> int:
    p = code.spec.p
    d = block.shape[1]
    if d == 0:
        return 0
    weights = p ** np.arange(code.m, dtype=np.int64)
    # all members of each subspace, as integer encodings
    pts = np.einsum("sd,kdm->ksm", coefficient_grid(p, d), block) % p
    enc = pts @ weights
    return int(code.indicator[enc].sum(axis=1).max())


def max_intersection(code: DefiningSetCode, dim: int, jobs: int = 1) -> int:
    """max |D ∩ H| over subspaces H of the given dimension."""
    return _reduce_blocks(code.spec.p, code.m, dim, lambda b: _max_intersection(code, b), max, jobs)


def ghw_lemma1(code: DefiningSetCode, r: int, jobs: int = 1) -> int:
    """d_r = n - max |D ∩ H| over (m-r)-dimensional H."""
    _check_rank(code, r)
    return code.n - max_intersection(code, code.m - r, jobs)


def hierarchy(code: DefiningSetCode, method: str = "wei", jobs: int = 1) -> WeightHierarchy:
    fn = {"wei": ghw_wei, "lemma1": ghw_lemma1}[method]
    return WeightHierarchy(tuple(fn(code, r, jobs) for r in range(1, code.m + 1)))
