import random

import pytest

from speclab import _backend, builtins

compiled = pytest.mark.skipif(_backend.compiled is None, reason="compiled kernels not built")
BACKENDS = [_backend.pure] + ([_backend.compiled] if _backend.compiled is not None else [])


def brute_moore(gens, full):
    fam = {full}
    changed = True
    while changed:
        changed = False
        for a in list(fam):
            for g in gens:
                if a & g not in fam:
                    fam.add(a & g)
                    changed = True
    return sorted(fam)


@pytest.mark.parametrize("k", BACKENDS)
def test_moore_family(k):
    rng = random.Random(3)
    for _ in range(20):
        full = (1 << 8) - 1
        gens = [rng.randrange(full + 1) for _ in range(rng.randint(0, 5))]
        assert list(k.moore_family(gens, full)) == brute_moore(gens, full)
    with pytest.raises(OverflowError):
        k.moore_family([full & ~(1 << i) for i in range(8)], full, limit=10)


@pytest.mark.parametrize("k", BACKENDS)
def test_specialization_closed_masks(k):
    chain = [1, 3, 7]
    assert list(k.specialization_closed_masks(chain, 18)) == [0, 1, 3, 7]
    with pytest.raises(OverflowError):
        k.specialization_closed_masks([1] * 30, 18)


@pytest.mark.parametrize("k", BACKENDS)
def test_intersections_of_complements(k):
    # u picks the points kept; the image is the intersection of the primes outside u
    assert list(k.intersections_of_complements([0, 1, 3], [6, 5], 7)) == [4, 5, 7]


@compiled
def test_backends_agree():
    rng = random.Random(4)
    for _ in range(20):
        m = [[rng.randrange(-3, 4) for _ in range(6)] for _ in range(5)]
        assert _backend.compiled.rank_mod_p(m, 7) == _backend.pure.rank_mod_p(m, 7)
    model = builtins.tube_model(2, 4)
    args = (model.out_nonzero(), model.in_nonzero(), 18)
    assert list(_backend.compiled.closure_fixed_points(*args)) == list(_backend.pure.closure_fixed_points(*args))
