import random
from fractions import Fraction

import pytest

from speclab import linalg


def sieve(n):
    flags = [True] * n
    flags[0] = flags[1] = False
    for i in range(2, int(n ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = [False] * len(flags[i * i::i])
    return {i for i, f in enumerate(flags) if f}


def test_prime_test_matches_sieve():
    primes = sieve(20000)
    assert {n for n in range(20000) if linalg._is_prime(n)} == primes


def gauss_rank(rows):
    a = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("backend", ["python", "auto"])
def test_rank_over_q_matches_fraction_elimination(backend):
    rng = random.Random(1)
    for _ in range(60):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        k = rng.randint(0, min(r, c))
        left = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(r)]
        right = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(k)]
        rows = [[sum(left[i][t] * right[t][j] for t in range(k)) for j in range(c)] for i in range(r)]
        assert linalg.rank(rows, backend=backend) == gauss_rank(rows)


def test_rank_with_fractions_and_large_entries():
    rows = [[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 3), Fraction(4, 7)]]
    assert linalg.rank(rows) == 1
    big = 2147483647
    assert linalg.rank([[big, 0], [0, big]]) == 2
    assert linalg.rank([[big, big], [1, 1]]) == 1


def test_rank_mod_p():
    fld = linalg.Field(2)
    assert linalg.rank([[1, 1], [1, 1]], fld) == 1
    assert linalg.rank([[2, 0], [0, 2]], fld) == 0
    assert linalg.rank([[1, 1], [1, -1]], linalg.Field(3)) == 2


def test_nullity_and_field_checks():
    assert linalg.nullity([[1, 2, 3]], 3) == 2
    assert linalg.nullity([], 4) == 4
    with pytest.raises(ValueError):
        linalg.Field(4)


def test_nullspace_mod_p_vectors_are_in_kernel():
    rng = random.Random(2)
    for _ in range(30):
        rows = [[rng.randrange(5) for _ in range(5)] for _ in range(3)]
        basis = linalg.nullspace_mod_p(rows, 5, 5)
        assert len(basis) == 5 - linalg.rank(rows, linalg.Field(5))
        for v in basis:
            assert all(sum(a * b for a, b in zip(r, v)) % 5 == 0 for r in rows)
