"""Exact linear algebra over Q and over prime fields F_p.

Ranks over Q are computed modulo a sequence of 31-bit primes until the
product of the primes exceeds a Hadamard bound on every minor of the
(integer-scaled) matrix; at that point the largest modular rank seen equals
the rational rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _backend

_PRIMES = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime(i: int) -> int:
    while i >= len(_PRIMES):
        q = _PRIMES[-1] - 2
        while not _is_prime(q):
            q -= 2
        _PRIMES.append(q)
    return _PRIMES[i]


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    def coerce(self, x):
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p


QQ = Field(0)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in fr])
    return out


def _hadamard_log2(rows: list[list[int]]) -> float:
    total = 0.0
    for row in rows:
        sq = sum(v * v for v in row)
        if sq:
            total += 0.5 * math.log2(sq)
    return total


def rank(rows: Sequence[Sequence], field: Field = QQ, backend: str = "auto") -> int:
    """Exact rank of a matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    k = _backend.get(backend)
    if field.p:
        return k.rank_mod_p([[field.coerce(v) for v in row] for row in rows], field.p)
    ints = _integer_rows(rows)
    ints = [r for r in ints if any(r)]
    if not ints:
        return 0
    bound = _hadamard_log2(ints)
    best, covered, i = 0, 0.0, 0
    while True:
        p = _prime(i)
        best = max(best, k.rank_mod_p(ints, p))
        covered += math.log2(p)
        i += 1
        if best == min(len(ints), len(ints[0])) or covered > bound + 1:
            return best


def nullity(rows: Sequence[Sequence], ncols: int, field: Field = QQ, backend: str = "auto") -> int:
    """Dimension of the kernel of a matrix with ``ncols`` columns."""
    if ncols == 0:
        return 0
    if not rows:
        return ncols
    return ncols - rank(rows, field, backend)


def rank_fraction(rows: Sequence[Sequence]) -> int:
    """Plain Gaussian elimination over Q with Fractions (reference route)."""
    a = [[Fraction(v) for v in row] for row in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            f = a[i][c] / a[r][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the right kernel over F_p, via reduced row echelon form."""
    a = [[int(v) % p for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row_i, pc in enumerate(pivots):
            v[pc] = (-a[row_i][f]) % p
        basis.append(v)
    return basis
