import random
from math import comb

import pytest

from speclab import tube
from speclab.errors import ModelError, UsageError

C = tube.ArcCollection.of
R = tube.obj


def test_tau():
    assert tube.tau(R(3, 0, 2)) == R(3, 2, 2)
    assert tube.tau(R(1, 0, 4)) == R(1, 0, 4)
    for x in tube.objects(4, 6):
        assert tube.tau(tube.tau_inverse(x)) == x
        y = x
        for _ in range(4):
            y = tube.tau(y)
        assert y == x


def test_hom_ext_examples():
    assert tube.hom_nonzero(R(3, 0, 1), R(3, 0, 2))
    assert not tube.hom_nonzero(R(3, 1, 1), R(3, 0, 2))
    assert tube.ext_nonzero(R(3, 1, 1), R(3, 0, 1))
    with pytest.raises(ModelError):
        tube.hom_dim(R(3, 0, 1), R(4, 0, 1))


def test_rules_match_oracle_n4_up_to_length_8():
    objs = tube.objects(4, 8)
    for r in objs:
        for t in objs:
            assert tube.hom_dim(r, t) == tube.oracle_hom_dim(r, t)
            assert tube.ext_dim(r, t) == tube.oracle_ext_dim(r, t)


def test_hom_and_ext_into_full_brick_follow_rays_and_corays():
    n = 4
    for i in range(n):
        z = R(n, i, n)
        for x in tube.objects(n, 3 * n):
            k = (x.top - i) % n  # x lies on the coray finishing at R_{i+k}
            assert tube.hom_nonzero(x, z) == (x.length >= k + 1)
            k = (x.socle - i - 1) % n + 1  # x lies on the ray starting at R_{i+k}
            assert tube.ext_nonzero(x, z) == (x.length >= n - k + 1)


def test_noncrossing_examples():
    assert tube.is_noncrossing(C(4, [(0, 1), (1, 2)]))
    assert not tube.is_noncrossing(C(4, [(0, 2), (1, 3)]))
    assert not tube.is_noncrossing(C(4, [(0, 1), (0, 2)]))


def test_exceptional_examples():
    assert not tube.is_exceptional(C(3, [(0, 1), (1, 2), (2, 0)]))
    assert tube.is_exceptional(C(3, [(0, 1)]))
    assert tube.is_exceptional(C(5, [(0, 2), (2, 3)]))
    with pytest.raises(UsageError):
        tube.is_exceptional(C(4, [(0, 2), (1, 3)]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_counts_and_semibrick_oracle(n):
    cols = tube.enumerate_noncrossing(n)
    assert len(cols) == comb(2 * n, n)
    assert all(tube.is_noncrossing(c) for c in cols)
    assert {frozenset(c.bricks()) for c in cols} == set(tube.oracle_orthogonal_semibricks(n))


def test_enumerate_small_ranks():
    assert [c.pairs() for c in tube.enumerate_noncrossing(1)] == [[], [(0, 0)]]
    two = {tuple(c.pairs()) for c in tube.enumerate_noncrossing(2)}
    assert {(), ((0, 1),), ((1, 0),), ((0, 1), (1, 0))} <= two


def test_wide_examples():
    assert tube.wide_from_arcs(C(3, [])) == frozenset()
    assert tube.wide_from_arcs(C(3, [(0, 1)])) == {R(3, 0, 1)}
    assert tube.wide_from_arcs(C(2, [(0, 1), (1, 0)]), 6) == set(tube.objects(2, 6))
    with pytest.raises(UsageError):
        tube.wide_from_arcs(C(4, [(0, 2), (1, 3)]))


def test_perp_examples():
    # the zero wide subcategory is the perpendicular of the sum of a full set of bricks
    assert tube.perp_set(tube.perp_object(C(3, [])), 3) == frozenset()
    assert tube.perp_set([], 3, 9) == set(tube.objects(3, 9))
    full = C(3, [(0, 1), (1, 2), (2, 0)])
    assert tube.perp_object(full) == []
    assert tube.wide_from_arcs(full) == set(tube.objects(3, 9))
    pc = tube.perp_construction(C(3, [(0, 2)]))
    assert pc.exceptional and pc.index == 2
    assert pc.z1 == (R(3, 2, 3),)
    assert set(pc.z2) <= tube.wide_from_arcs(C(3, [(0, 1), (1, 2)]))


def test_perp_set_matches_oracle():
    rng = random.Random(5)
    objs = tube.objects(4, 12)
    for _ in range(3):
        z = rng.sample(tube.objects(4, 5), 2)
        expected = {x for x in objs if all(tube.oracle_hom_dim(x, y) == 0 and tube.oracle_ext_dim(x, y) == 0 for y in z)}
        assert tube.perp_set(z, 4, 12) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_every_wide_set_is_a_perpendicular_and_distinct(n):
    cols = tube.enumerate_noncrossing(n)
    wides = [tube.wide_from_arcs(c) for c in cols]
    assert len(set(wides)) == len(cols)
    for c, w in zip(cols, wides):
        assert tube.perp_set(tube.perp_object(c), n) == w
        assert tube.decomposition_holds(c)


@pytest.mark.parametrize("n", [2, 3])
def test_wide_sets_closed_under_extensions_of_bricks(n):
    # each wide set is closed under the middle terms R_i^{a+b} of the uniserial extensions it contains
    for c in tube.enumerate_noncrossing(n):
        w = tube.wide_from_arcs(c)
        for x in w:
            for y in w:
                if y.socle == (x.socle + x.length) % n and x.length + y.length <= tube.default_lmax(n):
                    assert R(n, x.socle, x.length + y.length) in w
