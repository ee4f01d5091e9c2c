"""Quadratic forms f(X) = X^T A X on F_p^m given by a symmetric Gram matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .field import (
    FieldElement,
    FieldSpec,
    quadratic_character,
    smallest_nonresidue,
    smallest_nonsquare,
    trace,
)
from .subspace import Subspace, canonicalize, full_space, zero_subspace


class DegenerateFormError(ValueError):
    """Raised when an operation needs a non-degenerate ambient form."""


def _coords(v) -> tuple[int, ...]:
    if isinstance(v, FieldElement):
        return v.coeffs
    return tuple(int(c) for c in v)


@dataclass(frozen=True)
class QuadraticForm:
    spec: FieldSpec
    gram: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def m(self) -> int:
        return self.spec.m

    def __call__(self, x) -> int:
        return evaluate(self, x)


@dataclass(frozen=True)
class FormClassification:
    m_parity: str
    rank: int
    epsilon: int
    master_sign: int
    nondegenerate: bool
    theorem: str | None = None


def form_from_gram(spec: FieldSpec, entries: Sequence[Sequence[int]]) -> QuadraticForm:
    p, m = spec.p, spec.m
    gram = tuple(tuple(int(v) % p for v in row) for row in entries)
    if len(gram) != m or any(len(row) != m for row in gram):
        raise ValueError(f"Gram matrix must be {m}x{m}")
    for i in range(m):
        for j in range(i + 1, m):
            if gram[i][j] != gram[j][i]:
                raise ValueError(f"Gram matrix is not symmetric at ({i},{j})")
    return QuadraticForm(spec, gram)


def form_from_trace_scale(spec: FieldSpec, gamma: FieldElement) -> QuadraticForm:
    """The form x -> Tr(gamma x^2); entry (i, j) is Tr(gamma u_i u_j)."""
    if not gamma:
        raise ValueError("gamma must be nonzero")
    basis = [spec.element(spec.p**i) for i in range(spec.m)]
    gram = [[trace(gamma * bi * bj) for bj in basis] for bi in basis]
    return form_from_gram(spec, gram)


def parse_form(spec: FieldSpec, text: str) -> QuadraticForm:
    """Parse ``identity``, ``diag:c1,..,cm``, ``gram:a11,a12,...`` or ``trace:<encoding>``."""
    kind, _, arg = text.partition(":")
    m = spec.m
    try:
        if kind == "identity" and not arg:
            return form_from_gram(spec, linalg.identity(m))
        if kind == "diag":
            vals = [int(t) for t in arg.split(",")]
            if len(vals) != m:
                raise ValueError(f"diag needs {m} entries, got {len(vals)}")
            return form_from_gram(spec, [[vals[i] if i == j else 0 for j in range(m)] for i in range(m)])
        if kind == "gram":
            vals = [int(t) for t in arg.split(",")]
            if len(vals) != m * m:
                raise ValueError(f"gram needs {m * m} entries, got {len(vals)}")
            return form_from_gram(spec, [vals[i * m:(i + 1) * m] for i in range(m)])
        if kind == "trace":
            return form_from_trace_scale(spec, spec.element(int(arg)))
    except ValueError as exc:
        raise ValueError(f"bad form {text!r}: {exc}") from None
    raise ValueError(f"bad form {text!r}: expected identity, diag:..., gram:... or trace:...")


def evaluate(f: QuadraticForm, x) -> int:
    return bilinear(f, x, x)


def bilinear(f: QuadraticForm, x, y) -> int:
    """F(x, y) = x^T A y, i.e. (f(x+y) - f(x) - f(y)) / 2."""
    x, y = _coords(x), _coords(y)
    return sum(xi * aij * yj for xi, row in zip(x, f.gram) for aij, yj in zip(row, y)) % f.p


def _diagonalize_matrix(gram: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Congruence diagonalization; returns (M, diag) with M^T A M = diag(...).

    Pivot: first nonzero diagonal entry at or after position k; failing that,
    the first nonzero off-diagonal (i, j) in row-major order, after which u_i
    is replaced by u_i + u_j (new diagonal entry 2 A_ij, nonzero for odd p).
    """
    n = len(gram)
    a = [[v % p for v in row] for row in gram]
    mm = linalg.identity(n)

    def add_col(dst, src, c):
        # u_dst += c * u_src, applied as a congruence
        for row in a:
            row[dst] = (row[dst] + c * row[src]) % p
        a[dst] = [(x + c * y) % p for x, y in zip(a[dst], a[src])]
        for row in mm:
            row[dst] = (row[dst] + c * row[src]) % p

    def swap(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in mm:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            add_col(i, j, 1)
            piv = i
        swap(k, piv)
        inv = pow(a[k][k], p - 2, p)
        for j in range(k + 1, n):
            if a[j][k]:
                add_col(j, k, -a[j][k] * inv % p)
    return mm, [a[i][i] for i in range(n)]


def diagonalize(f: QuadraticForm) -> tuple[list[list[int]], list[int]]:
    return _diagonalize_matrix(f.gram, f.p)


def rank(f: QuadraticForm) -> int:
    return linalg.rank(f.gram, f.p)


def _sign_of_gram(gram: Sequence[Sequence[int]], p: int) -> tuple[int, int]:
    """(rank, eta(discriminant)) with the rank-0 discriminant taken as 1."""
    if not gram:
        return 0, 1
    _, diag = _diagonalize_matrix(gram, p)
    nonzero = [d for d in diag if d]
    prod = 1
    for d in nonzero:
        prod = prod * d % p
    return len(nonzero), quadratic_character(prod, p)


def discriminant_sign(f: QuadraticForm) -> int:
    if rank(f) == f.m:
        return quadratic_character(linalg.det(f.gram, f.p), f.p)
    return _sign_of_gram(f.gram, f.p)[1]


def gram_discriminant(f: QuadraticForm, elements: Sequence) -> int:
    vecs = [_coords(e) for e in elements]
    if not vecs:
        raise ValueError("need at least one element")
    return linalg.det([[bilinear(f, u, v) for v in vecs] for u in vecs], f.p)


def restricted_gram(f: QuadraticForm, h: Subspace) -> list[list[int]]:
    return [[bilinear(f, u, v) for v in h.basis] for u in h.basis]


def restrict(f: QuadraticForm, h: Subspace) -> tuple[int, int]:
    """(rank of f on H, eta of its discriminant); the zero subspace gives (0, 1)."""
    return _sign_of_gram(restricted_gram(f, h), f.p)


def dual_space(f: QuadraticForm, h: Subspace) -> Subspace:
    if rank(f) != f.m:
        raise DegenerateFormError("dual space needs a non-degenerate form")
    p, m = f.p, f.m
    if h.dim == 0:
        return full_space(p, m)
    eqs = linalg.matmul([list(b) for b in h.basis], f.gram, p)
    sol = linalg.nullspace(eqs, p, m)
    return canonicalize(sol, p, m) if sol else zero_subspace(p, m)


def master_sign(p: int, m: int) -> int:
    """(-1)^{m(p-1)/4} for even m, (-1)^{(m-1)(p-1)/4} for odd m."""
    e = m * (p - 1) // 4 if m % 2 == 0 else (m - 1) * (p - 1) // 4
    return -1 if e % 2 else 1


def select_theorem(p: int, m: int, epsilon: int, a: int) -> str:
    a %= p
    ms = master_sign(p, m)
    if a:
        if m % 2 == 0:
            return "T1"
        return "T2" if quadratic_character(a, p) == ms * epsilon else "T3"
    if m % 2 == 0:
        return "T4" if epsilon == ms else "T5"
    return "T6"


def classify(f: QuadraticForm, a: int | None = None) -> FormClassification:
    r = rank(f)
    if r != f.m:
        raise DegenerateFormError(f"form has rank {r} < {f.m}")
    eps = discriminant_sign(f)
    return FormClassification(
        m_parity="even" if f.m % 2 == 0 else "odd",
        rank=r,
        epsilon=eps,
        master_sign=master_sign(f.p, f.m),
        nondegenerate=True,
        theorem=None if a is None else select_theorem(f.p, f.m, eps, a),
    )


def standard_forms(spec: FieldSpec) -> dict[str, QuadraticForm]:
    """Identity, diag(1,..,1,g), Tr(x^2) and Tr(gamma x^2) with gamma a non-square."""
    g = smallest_nonresidue(spec.p)
    gamma = smallest_nonsquare(spec)
    diag = ",".join(["1"] * (spec.m - 1) + [str(g)])
    descs = ["identity", f"diag:{diag}", "trace:1", f"trace:{int(gamma)}"]
    return {d: parse_form(spec, d) for d in descs}
