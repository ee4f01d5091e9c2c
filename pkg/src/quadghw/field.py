"""Exact arithmetic in F_p and F_{p^m} for odd p.

Elements of F_{p^m} are coefficient vectors in the polynomial basis
1, x, ..., x^{m-1} modulo a monic irreducible polynomial.  Every element
also has an integer encoding sum(coeffs[i] * p**i); enumeration order and
all downstream coordinate orders follow that encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def quadratic_character(c: int, p: int) -> int:
    """Legendre symbol of ``c`` mod ``p`` via Euler's criterion (0 at 0)."""
    c %= p
    if c == 0:
        return 0
    return 1 if pow(c, (p - 1) // 2, p) == 1 else -1


# -- polynomials over F_p, ascending coefficient lists ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        _trim(r)
    return _trim(q), r


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    A polynomial of degree m is irreducible iff gcd(g, x^{p^i} - x) = 1 for
    every 1 <= i <= m // 2.  For m <= 3 this agrees with the absence of roots,
    which is checked as well.
    """
    g = _trim(list(poly))
    m = len(g) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if m <= 3 and any(sum(c * pow(t, i, p) for i, c in enumerate(g)) % p == 0 for t in range(p)):
        return False
    xpow = [0, 1]
    for _ in range(m // 2):
        xpow = _poly_powmod(xpow, p, g, p)
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(g, _trim(diff), p)) > 1:
            return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree ``m`` over F_p.

    Candidates are ordered by their integer encoding sum(c_i * p**i), i.e.
    the highest-degree coefficient is compared first.  Returns ascending
    coefficients, e.g. ``(1, 0, 1)`` for x^2 + 1.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    for k in range(p**m):
        low = [(k // p**i) % p for i in range(m)]
        cand = (*low, 1)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


def parse_modulus(text: str) -> tuple[int, ...]:
    """Parse ``"1,0,1"`` (ascending degree) into a coefficient tuple."""
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"bad modulus {text!r}: expected comma-separated integers") from None


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^m} together with its defining modulus."""

    p: int
    m: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.m))
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.m}, got {self.modulus}")
        if not is_irreducible(mod, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def order(self) -> int:
        return self.p**self.m

    # -- conversions -------------------------------------------------------

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Build an element from its integer encoding or a coefficient vector."""
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"encoding {value} out of range for F_{self.p}^{self.m}")
            return FieldElement(self, tuple((value // self.p**i) % self.p for i in range(self.m)))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    def one(self) -> FieldElement:
        return self.embed(1)

    def embed(self, c: int) -> FieldElement:
        """Image of the prime-field scalar ``c``."""
        return FieldElement(self, (c % self.p,) + (0,) * (self.m - 1))

    def elements(self) -> Iterator[FieldElement]:
        """All p^m elements in ascending integer encoding."""
        for digits in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, digits[::-1])

    # -- arithmetic on coefficient tuples -----------------------------------

    def _reduce(self, poly: Sequence[int]) -> tuple[int, ...]:
        r = _poly_divmod(poly, self.modulus, self.p)[1]
        return tuple(r) + (0,) * (self.m - len(r))

    def _mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return self._reduce(_poly_mul(_trim(list(a)), _trim(list(b)), self.p))

    @cached_property
    def trace_vector(self) -> tuple[int, ...]:
        """Traces of the basis elements 1, x, ..., x^{m-1}."""
        out = []
        for i in range(self.m):
            basis = [0] * self.m
            basis[i] = 1
            out.append(trace_frobenius(FieldElement(self, tuple(basis))))
        return tuple(out)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        if isinstance(other, int):
            p = self.spec.p
            return FieldElement(self.spec, tuple(a * other % p for a in self.coeffs))
        self._check(other)
        return FieldElement(self.spec, self.spec._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero in a finite field")
        # a^{q-2} = a^{-1} in F_q
        return self ** (self.spec.order - 2)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __int__(self) -> int:
        p = self.spec.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)})"


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, inv, neg}; ``b`` is ignored for unary ops."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown field operation {op!r}")


def trace_frobenius(x: FieldElement) -> int:
    """Tr(x) = x + x^p + ... + x^{p^{m-1}}, computed by definition."""
    spec = x.spec
    total = spec.zero()
    y = x
    for _ in range(spec.m):
        total = total + y
        y = y**spec.p
    if any(total.coeffs[1:]):
        raise ArithmeticError(f"trace landed outside F_p: {total}")
    return total.coeffs[0]


def trace(x: FieldElement) -> int:
    """Absolute trace F_{p^m} -> F_p, as a linear functional on coordinates."""
    tv = x.spec.trace_vector
    return sum(c * t for c, t in zip(x.coeffs, tv)) % x.spec.p


def enumerate_elements(spec: FieldSpec) -> Iterator[FieldElement]:
    return spec.elements()


def smallest_nonresidue(p: int) -> int:
    return next(c for c in range(2, p) if quadratic_character(c, p) == -1)


def is_square(x: FieldElement) -> bool:
    if not x:
        return True
    return x ** ((x.spec.order - 1) // 2) == x.spec.one()


def smallest_nonsquare(spec: FieldSpec) -> FieldElement:
    """Non-square of F_{p^m} with the smallest integer encoding."""
    return next(x for x in spec.elements() if x and not is_square(x))
