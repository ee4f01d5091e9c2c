"""Brute-force oracles shared by the tests; none of them use the package's elimination code."""

import itertools

from quadghw.field import FieldSpec
from quadghw.quadform import parse_form


def form(p, m, desc, modulus=()):
    return parse_form(FieldSpec(p, m, modulus), desc)


def vectors(p, m):
    return list(itertools.product(range(p), repeat=m))


def brute_rank(rows, p):
    """Rank as log_p of the number of distinct F_p-combinations (no elimination)."""
    if not rows:
        return 0
    m = len(rows[0])
    span = {
        tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) % p for j in range(m))
        for coeffs in itertools.product(range(p), repeat=len(rows))
    }
    r = 0
    while p**r < len(span):
        r += 1
    return r


def _span(vecs, p, m):
    out = {(0,) * m}
    for v in vecs:
        out = {tuple((a + c * b) % p for a, b in zip(u, v)) for u in out for c in range(p)}
    return frozenset(out)


def _extend(s, v, p):
    return frozenset(tuple((a + c * b) % p for a, b in zip(u, v)) for u in s for c in range(p))


def brute_subspaces(p, m, r):
    """All r-dimensional subspaces as frozensets of members, grown one vector at a time."""
    level = {frozenset({(0,) * m})}
    for _ in range(r):
        nxt = set()
        for s in level:
            for v in vectors(p, m):
                if v not in s:
                    nxt.add(_extend(s, v, p))
        level = nxt
    return level


def brute_level_count(f, members, a):
    from quadghw.quadform import evaluate

    return sum(1 for v in members if evaluate(f, v) == a % f.p)


def brute_ghw(codewords, p, r):
    """Minimum support over r-dimensional spans of codewords, straight from the definition."""
    n = len(codewords[0])
    level = {frozenset({(0,) * n})}
    for _ in range(r):
        level = {_extend(s, w, p) for s in level for w in codewords if w not in s}
    return min(sum(1 for i in range(n) if any(w[i] for w in s)) for s in level)
