import itertools

import pytest

from speclab import builtins, spectra
from speclab.catmodel import FormalObject
from speclab.errors import GuardError, ModeError, ModelError
from speclab.spectra import FiniteSpace


def brute_closed_sets(space):
    """Closed sets from the definition: all intersections of finite unions of basic closed sets."""
    unions = set()
    basis = list(space.closed_basis)
    for r in range(len(basis) + 1):
        for combo in itertools.combinations(basis, r):
            u = 0
            for b in combo:
                u |= b
            unions.add(u)
    closed = unions | {space.full}
    grew = True
    while grew:
        new = {x & y for x in closed for y in closed} - closed
        closed |= new
        grew = bool(new)
    return sorted(closed)


def test_ka2_spaces():
    m = builtins.ka2_model()
    s = spectra.shift_spectrum(m)
    assert s.size == 3 and s.is_discrete()
    h = spectra.shift_homological_spectrum(m)
    assert h.size == 3
    assert spectra.homological_support(FormalObject(), m) == 0
    assert spectra.support(FormalObject(), s) == 0
    assert spectra.support_of_thick(0, s) == 0


def test_ka2_support_of_primes_and_meet_failure():
    m = builtins.ka2_model()
    s = spectra.shift_spectrum(m)
    for i, members in enumerate(s.members):
        assert spectra.support_of_thick(members, s) == s.full & ~(1 << i)
    p, q = s.members[0], s.members[1]
    meet = spectra.support_of_thick(p & q, s)
    assert meet != spectra.support_of_thick(p, s) & spectra.support_of_thick(q, s)


def test_specz_space():
    m = builtins.specz_model(10)
    s = spectra.shift_spectrum(m)
    assert s.size == 5
    closed = s.closed_sets()
    finite = [u for u in closed if u != s.full]
    assert len(finite) == 16 and all(not u >> 4 & 1 for u in finite)
    assert closed == brute_closed_sets(s)


def test_stmod_spaces():
    m = builtins.stmod_cp_model(5)
    h = spectra.shift_homological_spectrum(m)
    assert h.size == 2 and h.is_indiscrete()
    kq = spectra.kolmogorov_quotient(h)
    assert kq.size == 1
    assert spectra.shift_spectrum(m).size == 1
    assert spectra.homeomorphic(kq, spectra.shift_spectrum(m))
    assert spectra.is_discrete_criterion(m) == {"M1": True, "M2": True}


def test_an3():
    m = builtins.an_model(3)
    assert spectra.shift_homological_spectrum(m).size == 6
    assert all(spectra.is_discrete_criterion(m).values())
    assert all(spectra.is_discrete_criterion(builtins.ka2_model()).values())
    assert spectra.enumerate_thicks(builtins.an_model(1)).size == 2


def test_radical_examples():
    m = builtins.ka2_model()
    s = spectra.shift_spectrum(m)
    assert spectra.radical(0, s) == 0
    assert spectra.radical(m.full, s) == m.full
    a = builtins.a_infinity_model()
    sa = spectra.shift_spectrum(a)
    assert spectra.radical(0, sa) == a.lattice[1].members
    assert spectra.psi(0, sa) == a.lattice[1].members
    assert spectra.psi(sa.full, sa) == a.full


def test_classify_examples():
    assert len(spectra.classify(builtins.ka2_model()).rows) == 5
    rows = spectra.classify(builtins.a_infinity_model()).rows
    assert [r for r, _ in rows] == [0b11111, 0b111111]
    sz = builtins.specz_model(10)
    cls = spectra.classify(sz)
    assert sorted(u for _, u in cls.rows) == spectra.specialization_closed(cls.space)


def test_classify_guard():
    pts = tuple(f"p{i}" for i in range(20))
    space = FiniteSpace(pts, tuple(1 << i for i in range(20)), tuple(1 << i for i in range(20)), 20)
    with pytest.raises(GuardError):
        spectra.classify(space)


def test_errors():
    s = spectra.shift_spectrum(builtins.ka2_model())
    with pytest.raises(ModelError):
        spectra.support(FormalObject(((7, 0),)), s)
    with pytest.raises(ModeError):
        spectra.shift_homological_spectrum(builtins.specz_model(10))


def test_topology_helpers():
    sier = spectra.sierpinski()
    assert sier.is_t0() and not sier.is_discrete()
    assert spectra.homeomorphic(spectra.kolmogorov_quotient(sier), sier)
    assert not spectra.homeomorphic(sier, spectra.discrete_space(["a", "b"]))
    assert spectra.homeomorphic(spectra.discrete_space(["a", "b"]), spectra.discrete_space(["c", "d"]))


def test_matsui_and_fspcnt():
    lat = spectra.Lattice.from_masks([0, 1, 3], 2, ["0", "1", "2"])
    m = spectra.matsui_spectrum(lat)
    assert m.points == ("0", "1")
    assert spectra.homeomorphic(m, spectra.sierpinski())
    assert spectra.fspcnt_space(lat).closed_sets() == [0, 4, 6, 7]
    one = spectra.Lattice.from_masks([0], 0, ["0"])
    assert spectra.matsui_spectrum(one).size == 0
    ka2 = spectra.enumerate_thicks(builtins.ka2_model())
    assert spectra.matsui_spectrum(ka2).is_discrete()
    f = spectra.fspcnt_space(ka2)
    assert f.size == 5 and len(f.closed_sets()) == 10
    assert f.closed_sets() == brute_closed_sets(f)


def test_dot_output():
    s = spectra.shift_spectrum(builtins.ka2_model())
    dot = spectra.space_to_dot(s, "sspec")
    assert dot.count("label=") == 3 and "->" not in dot
    lat = spectra.enumerate_thicks(builtins.ka2_model())
    assert spectra.lattice_to_dot(lat).count("->") == 6
