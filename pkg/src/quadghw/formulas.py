"""Closed-form level-set counts and weight hierarchies.

Everything here is a pure integer function of (p, m, epsilon, a, r); no
field arithmetic is involved, so the values can be checked independently of
the enumeration code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import quadratic_character
from .quadform import FormClassification, master_sign, select_theorem


class FormulaPreconditionError(ValueError):
    pass


class BranchMismatchError(AssertionError):
    """Two overlapping piecewise branches disagree; indicates a bug."""


@dataclass(frozen=True)
class HierarchyPrediction:
    theorem: str
    values: tuple[int, ...]
    length: int


def v_func(x: int, p: int) -> int:
    return p - 1 if x % p == 0 else -1


def prop1_count(d: int, rank: int, sign: int, a: int, p: int) -> int:
    """|H ∩ {f = a}| for a d-dimensional H on which f has the given rank and sign.

    ``sign`` is eta of the discriminant of f restricted to H (1 when rank is 0).
    """
    if not 0 <= rank <= d:
        raise ValueError(f"rank {rank} outside 0..{d}")
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +-1, got {sign}")
    a %= p
    if d == 0:
        return 1 if a == 0 else 0
    if rank % 2 == 0:
        eta = quadratic_character((-1) ** (rank // 2), p)
        return p ** (d - 1) + v_func(a, p) * eta * sign * p ** (d - (rank + 2) // 2)
    eta = quadratic_character((-1) ** ((rank - 1) // 2) * a, p)
    return p ** (d - 1) + eta * sign * p ** (d - (rank + 1) // 2)


def level_set_size(p: int, m: int, epsilon: int, a: int) -> int:
    """|D_a|: nonzero x with f(x) = a for a non-degenerate f of sign epsilon."""
    return prop1_count(m, m, epsilon, a, p) - (1 if a % p == 0 else 0)


def predicted_length(cls: FormClassification, a: int, p: int, m: int) -> int:
    if not cls.nondegenerate:
        raise ValueError("predicted length needs a non-degenerate form")
    return level_set_size(p, m, cls.epsilon, a)


def _both(r: int, first: int, second: int) -> int:
    if first != second:
        raise BranchMismatchError(f"overlapping branches disagree at r={r}: {first} != {second}")
    return first


def _t1(p: int, m: int, s: int, r: int) -> int:
    # s = master sign * epsilon
    half = p ** ((m - 2) // 2)
    low = lambda: p ** (m - 1) - p ** (m - r - 1) - (s + 1) * half
    high = lambda: p ** (m - 1) - 2 * p ** (m - r - 1) - s * half
    if r == m:
        return p ** (m - 1) - s * half
    if 2 * r == m:
        return _both(r, low(), high())
    return low() if 2 * r < m else high()


def _t2(p: int, m: int, r: int) -> int:
    if r == m:
        return p ** (m - 1) + p ** ((m - 1) // 2)
    if 2 * r < m:
        return p ** (m - 1) - p ** (m - r - 1)
    return p ** (m - 1) + p ** ((m - 1) // 2) - 2 * p ** (m - r - 1)


def _t3(p: int, m: int, r: int) -> int:
    if r == m:
        return p ** (m - 1) - p ** ((m - 1) // 2)
    if 2 * r < m:
        return p ** (m - 1) - p ** (m - r - 1) - p ** ((m - 1) // 2) - p ** ((m - 3) // 2)
    return p ** (m - 1) - p ** ((m - 1) // 2) - 2 * p ** (m - r - 1)


def _t4(p: int, m: int, r: int) -> int:
    low = lambda: p ** (m - 1) - p ** (m - r - 1)
    high = lambda: p ** (m - 1) + (p - 1) * p ** ((m - 2) // 2) - p ** (m - r)
    if 2 * r == m:
        return _both(r, low(), high())
    return low() if 2 * r < m else high()


def _t5(p: int, m: int, r: int) -> int:
    if r == 1:
        return (p - 1) * (p ** (m - 2) - p ** ((m - 2) // 2))
    if 2 * r <= m:
        return p ** (m - 1) - p ** (m - r - 1) - (p - 1) * (p ** ((m - 2) // 2) + p ** ((m - 4) // 2))
    return p ** (m - 1) - p ** (m - r) - (p - 1) * p ** ((m - 2) // 2)


def _t6(p: int, m: int, r: int) -> int:
    if 2 * r < m:
        return p ** (m - 1) - p ** (m - r - 1) - (p - 1) * p ** ((m - 3) // 2)
    return p ** (m - 1) - p ** (m - r)


def ghw_value(p: int, m: int, epsilon: int, a: int, r: int) -> int:
    """d_r of the defining-set code for a non-degenerate form of sign epsilon."""
    if m < 3:
        raise FormulaPreconditionError(
            f"closed forms need m >= 3 (got m={m}); for m=2 the code may be degenerate"
        )
    if epsilon not in (-1, 1):
        raise ValueError(f"epsilon must be +-1, got {epsilon}")
    if not 1 <= r <= m:
        raise ValueError(f"r must be in 1..{m}, got {r}")
    tag = select_theorem(p, m, epsilon, a)
    if tag == "T1":
        return _t1(p, m, master_sign(p, m) * epsilon, r)
    return {"T2": _t2, "T3": _t3, "T4": _t4, "T5": _t5, "T6": _t6}[tag](p, m, r)


def ghw_closed_form(p: int, m: int, epsilon: int, a: int) -> HierarchyPrediction:
    values = tuple(ghw_value(p, m, epsilon, a, r) for r in range(1, m + 1))
    return HierarchyPrediction(select_theorem(p, m, epsilon, a), values, values[-1])
