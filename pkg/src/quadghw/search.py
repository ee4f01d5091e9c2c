"""Constructions of totally isotropic and self-dual subspaces.

The greedy step: given an isotropic H_k, pick the smallest-encoding vector
of (f = 0) ∩ H_k^⊥ outside H_k and adjoin it.  Every returned subspace is
re-verified with independent calls before it is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quadform import QuadraticForm, bilinear, classify, dual_space, evaluate, master_sign, rank
from .subspace import Subspace, canonicalize, enumerate_subspaces, gaussian_binomial, members, zero_subspace

EXHAUSTIVE_MAX_M = 4


class NotFoundError(LookupError):
    """No isotropic extension exists from the current subspace."""


class VerificationError(AssertionError):
    pass


def _encoding(v: tuple[int, ...], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(v))


def is_totally_isotropic(f: QuadraticForm, h: Subspace) -> bool:
    return all(bilinear(f, u, v) == 0 for u in h.basis for v in h.basis)


def is_self_dual(f: QuadraticForm, h: Subspace) -> bool:
    return dual_space(f, h) == h


def extend_isotropic(f: QuadraticForm, h: Subspace) -> Subspace:
    """Adjoin the smallest-encoding isotropic vector of H^⊥ not already in H."""
    p = f.p
    best = None
    for v in members(dual_space(f, h)):
        if any(v) and evaluate(f, v) == 0 and v not in h:
            enc = _encoding(v, p)
            if best is None or enc < best[0]:
                best = (enc, v)
    if best is None:
        raise NotFoundError(f"no isotropic vector extends the {h.dim}-dimensional subspace")
    return canonicalize([*h.basis, best[1]], p, f.m)


def find_totally_isotropic(f: QuadraticForm, r: int) -> Subspace:
    if rank(f) != f.m:
        raise ValueError("need a non-degenerate form")
    if not 0 <= 2 * r <= f.m:
        raise ValueError(f"an isotropic subspace has dimension at most m/2, got r={r}")
    h = zero_subspace(f.p, f.m)
    for _ in range(r):
        h = extend_isotropic(f, h)
    if h.dim != r or not is_totally_isotropic(f, h):
        raise VerificationError(f"constructed subspace {h} is not totally isotropic")
    return h


@dataclass(frozen=True)
class SelfDualResult:
    exists: bool
    witness: Subspace | None
    certification: str  # "construction", "exhaustive" or "sign condition"
    checked: int = 0


def self_dual_exists(f: QuadraticForm) -> bool:
    """Sign criterion: eps_f == (-1)^{m(p-1)/4}."""
    return classify(f).epsilon == master_sign(f.p, f.m)


def self_dual_subspace(f: QuadraticForm, check_only: bool = False, exhaustive: bool | None = None) -> SelfDualResult:
    """Decide whether some H satisfies H = H^⊥, and build one when it does.

    A negative answer is confirmed by scanning every (m/2)-dimensional
    subspace when m <= 4, or whenever ``exhaustive`` is set.
    """
    m = f.m
    if m % 2:
        raise ValueError(f"self-dual subspaces need even m, got {m}")
    s = m // 2
    exists = self_dual_exists(f)
    if exists:
        if check_only:
            return SelfDualResult(True, None, "sign condition")
        h = find_totally_isotropic(f, s - 1) if s > 1 else zero_subspace(f.p, m)
        h = extend_isotropic(f, h)
        if h.dim != s or not is_self_dual(f, h):
            raise VerificationError(f"constructed subspace {h} is not self-dual")
        return SelfDualResult(True, h, "construction")

    if exhaustive is None:
        exhaustive = m <= EXHAUSTIVE_MAX_M
    if not exhaustive:
        return SelfDualResult(False, None, "sign condition")
    for h in enumerate_subspaces(f.p, m, s):
        if is_self_dual(f, h):
            raise VerificationError(f"sign condition says none, but {h} is self-dual")
    return SelfDualResult(False, None, "exhaustive", gaussian_binomial(m, s, f.p))
