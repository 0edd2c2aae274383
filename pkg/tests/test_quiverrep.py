import itertools

import pytest

from speclab import quiverrep as qr
from speclab.errors import ModelError, UsageError
from speclab.linalg import Field

F2 = Field(2)


def matmul(a, b, p=2):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) % p for j in range(len(b[0]))] for i in range(len(a))]


def brute_hom_count(m, n):
    """Count quiver morphisms M -> N over F_2 by listing every tuple of vertex maps."""
    shapes = [(n.dims[v], m.dims[v]) for v in range(m.quiver.num_vertices)]
    spaces = [list(itertools.product((0, 1), repeat=r * c)) for r, c in shapes]
    count = 0
    for choice in itertools.product(*spaces):
        phi = [[list(bits[i * c:(i + 1) * c]) for i in range(r)] for bits, (r, c) in zip(choice, shapes)]
        ok = True
        for (s, t), a, b in zip(m.quiver.arrows, m.maps, n.maps):
            if not m.dims[s] or not n.dims[t]:
                continue
            lhs = matmul([list(r) for r in b], phi[s]) if n.dims[s] else [[0] * m.dims[s] for _ in range(n.dims[t])]
            rhs = matmul(phi[t], [list(r) for r in a]) if m.dims[t] else [[0] * m.dims[s] for _ in range(n.dims[t])]
            if lhs != rhs:
                ok = False
                break
        count += ok
    return count


def test_hom_dim_examples():
    cat = qr.catalog_An(2)
    s1, m12, s2 = cat.by_name("S1"), cat.by_name("M1-2"), cat.by_name("S2")
    assert qr.hom_dim(s1, s1) == 1
    assert qr.hom_dim(s1, m12) == 0
    assert qr.hom_dim(m12, s1) == 1
    assert qr.hom_dim(m12, qr.zero_rep(m12.quiver)) == 0
    assert qr.ext1_dim(s1, s2) == 1
    assert qr.graded_hom_pair(s1, s2) == (0, 1)
    assert qr.graded_hom_pair(s1, qr.zero_rep(s1.quiver)) == (0, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hom_dim_matches_brute_force_over_f2(n):
    cat = qr.catalog_An(n, F2)
    for m in cat:
        for k in cat:
            assert 2 ** qr.hom_dim(m, k) == brute_hom_count(m, k)


def test_direct_sums_against_brute_force():
    cat = qr.catalog_An(3, F2)
    a = qr.direct_sum(cat[0], cat[3])
    b = qr.direct_sum(cat[1], cat[5])
    assert 2 ** qr.hom_dim(a, b) == brute_hom_count(a, b)
    assert qr.hom_dim(a, b) == sum(qr.hom_dim(x, y) for x in (cat[0], cat[3]) for y in (cat[1], cat[5]))


def test_catalog_sizes():
    assert [r.name for r in qr.catalog_An(1)] == ["S1"]
    assert len(qr.catalog_An(2)) == 3
    assert len(qr.catalog_An(4)) == 10
    assert len(qr.catalog_An(0)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_intervals_are_exceptional_and_projectives_have_no_ext(n):
    cat = qr.catalog_An(n)
    projectives = [r for r in cat if r.dims[-1] == 1]
    for m in cat:
        assert qr.hom_dim(m, m) == 1
        assert qr.ext1_dim(m, m) == 0
        for p in projectives:
            assert qr.ext1_dim(p, m) == 0


def test_euler_form_identity():
    cat = qr.catalog_An(4)
    for m in cat:
        for k in cat:
            assert qr.hom_dim(m, k) - qr.ext1_dim(m, k) == qr.euler_form(m.quiver, m.dims, k.dims)


def test_kronecker_catalog():
    cat = qr.catalog_kronecker(4, 3, ["0", "1", "2", "inf"])
    assert len(cat) == 22
    by = {r.name: r for r in cat}
    assert qr.graded_hom_pair(by["P0"], by["P0"]) == (1, 0)
    qs = [r for r in cat if r.name.startswith("Q")]
    ps = [r for r in cat if r.name.startswith("P")]
    for q in qs:
        for p in ps:
            assert qr.hom_dim(q, p) == 0
    lams = ["0", "1", "2", "inf"]
    for a, b in itertools.permutations(lams, 2):
        x, y = by[f"R{a}_1"], by[f"R{b}_1"]
        assert qr.hom_dim(x, y) == 0
        assert qr.ext1_dim(x, y) == 0
    with pytest.raises(ModelError):
        qr.catalog_kronecker(1, 1, ["0", "0"])


def test_errors():
    cat = qr.catalog_An(2)
    other = qr.catalog_An(3)
    with pytest.raises(ModelError):
        qr.hom_dim(cat[0], other[0])
    cyc = qr.cyclic_uniserial(2, 0, 2)
    with pytest.raises(UsageError):
        qr.ext1_dim(cyc, cyc)
    with pytest.raises(UsageError):
        qr.interval_rep(2, 2, 1)


def test_cyclic_uniserial_hom_against_brute_force():
    for length in (1, 2, 3):
        for other in (1, 2, 3):
            m = qr.cyclic_uniserial(2, 0, length, F2)
            k = qr.cyclic_uniserial(2, 1, other, F2)
            assert 2 ** qr.hom_dim(m, k) == brute_hom_count(m, k)
