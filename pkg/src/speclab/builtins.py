"""Built-in models for the worked examples."""

from __future__ import annotations

from typing import Sequence

from . import quiverrep, tube
from .catmodel import (
    DECLARED, LOCALLY_FINITE, FormalObject, LatticeElement, Model, ObjectClass, Prime,
    Triangle, hom_table_from, mask_of,
)
from .errors import UsageError
from .guards import check_bits
from .linalg import _is_prime

DEFAULT_NMAX = 4
DEFAULT_JMAX = 3
DEFAULT_LAMBDAS = ("0", "1", "2", "inf")
DEFAULT_BOUND = 50
DEFAULT_K = 5

KA2_NAMES = {(1, 1): "S2", (1, 2): "P2", (2, 2): "P1"}


def _intervals(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def an_triangles(n: int, index: dict[tuple[int, int], int]) -> list[Triangle]:
    """Auslander-Reiten triangles of D^b(k A_n), one starting at each indecomposable.

    Module AR sequences 0 -> [i,j] -> [i-1,j] + [i,j-1] -> [i-1,j-1] -> 0 for
    i > 1, and at the injectives I_v = [1,v] the connecting triangles
    I_v -> [1,v-1] + Sigma P_{v+1} -> Sigma P_v with P_v = [v,n].
    """
    out = []
    for i, j in _intervals(n):
        if i > 1:
            mid = [(index[(i - 1, j)], 0)]
            if j - 1 >= i:
                mid.append((index[(i, j - 1)], 0))
            out.append(Triangle(FormalObject(((index[(i, j)], 0),)), FormalObject(tuple(mid)),
                                FormalObject(((index[(i - 1, j - 1)], 0),)), f"AR[{i},{j}]"))
        else:
            v = j
            mid = []
            if v > 1:
                mid.append((index[(1, v - 1)], 0))
            if v < n:
                mid.append((index[(v + 1, n)], 1))
            out.append(Triangle(FormalObject(((index[(1, v)], 0),)), FormalObject(tuple(mid)),
                                FormalObject(((index[(v, n)], 1),)), f"AR[1,{v}]"))
    return out


def an_model(n: int, names: dict[tuple[int, int], str] | None = None, name: str | None = None) -> Model:
    """D^b(k A_n) for linear A_n: classes are Sigma-orbits of interval modules."""
    if n < 0:
        raise UsageError("n must be nonnegative")
    cat = quiverrep.catalog_An(n)
    ivs = _intervals(n)
    index = {iv: k for k, iv in enumerate(ivs)}
    label = names or {}
    classes = tuple(ObjectClass(k, label.get(iv, rep.name)) for k, (iv, rep) in enumerate(zip(ivs, cat)))
    hom = hom_table_from(list(cat), quiverrep.graded_hom_pair)
    meta = dict(cat.metadata)
    meta["shift_grading"] = "shift 0: Hom of modules, shift 1: Ext^1"
    if names:
        meta["names"] = {f"[{i},{j}]": nm for (i, j), nm in sorted(names.items())}
    return Model(name or f"A{n}", LOCALLY_FINITE, classes, hom, None, None,
                 an_triangles(n, index) if n else (), meta)


def ka2_model() -> Model:
    return an_model(2, KA2_NAMES, "kA2")


def stmod_cp_model(p: int) -> Model:
    """stmod(k C_p): classes <i> for 1 <= i <= ceil((p-1)/2), Sigma <i> = <p-i>."""
    if not _is_prime(p):
        raise UsageError(f"p = {p} is not prime")
    count = (p - 1 + 1) // 2
    period = 1 if p == 2 else 2
    classes = tuple(ObjectClass(i - 1, f"M{i}", period) for i in range(1, count + 1))
    hom = {}
    for a in range(1, count + 1):
        for b in range(1, count + 1):
            d = min(a, b, p - a, p - b)
            hom[(a - 1, b - 1)] = {s: d for s in range(period)}
    meta = {
        "description": f"stable module category of k C_{p}",
        "naming": "M<i> is the Jordan block of size i; Sigma M<i> = M<p-i>",
        "hom": "stable dim Hom(M<a>, M<b>) = min(a, b, p-a, p-b); shifts stored modulo the period",
    }
    return Model(f"stmod_C{p}", LOCALLY_FINITE, classes, hom, None, None, (), meta)


def parse_lambdas(items: Sequence) -> list:
    out = []
    for item in items:
        try:
            out.append(quiverrep.parse_lambda(item))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad lambda {item!r}") from None
    return out


def kronecker_model(n_max: int = DEFAULT_NMAX, j_max: int = DEFAULT_JMAX,
                    lambdas: Sequence = DEFAULT_LAMBDAS) -> Model:
    """Truncated Kronecker catalog with the declared shift-primes as points."""
    lams = parse_lambdas(lambdas)
    cat = quiverrep.catalog_kronecker(n_max, j_max, lams)
    classes = tuple(ObjectClass(k, rep.name) for k, rep in enumerate(cat))
    hom = hom_table_from(list(cat), quiverrep.graded_hom_pair)
    ids = {rep.name: k for k, rep in enumerate(cat)}
    keys = [quiverrep._lambda_key(l) for l in lams]
    regular = {key: [ids[f"R{key}_{j}"] for j in range(1, j_max + 1)] for key in keys}
    primes = [Prime(f"add(P{i})", mask_of([ids[f"P{i}"]])) for i in range(n_max + 1)]
    primes += [Prime(f"add(Q{i})", mask_of([ids[f"Q{i}"]])) for i in range(n_max + 1)]
    for key in keys:
        primes.append(Prime(f"r!={key}", mask_of(c for k2, cs in regular.items() if k2 != key for c in cs)))
    primes.append(Prime("r", mask_of(c for cs in regular.values() for c in cs)))
    meta = dict(cat.metadata)
    meta["primes"] = ("add(Pn), add(Qn), r!=lambda, r as sets of truncated classes; "
                      "r = alpha([G]) for the generic module G is declared, not computed")
    meta["truncated"] = True
    return Model("kronecker", DECLARED, classes, hom, tuple(primes), None, (), meta)


def primes_below(bound: int) -> list[int]:
    return [q for q in range(2, bound) if _is_prime(q)]


def specz_model(bound: int = DEFAULT_BOUND) -> Model:
    """D(Z)^c truncated to the stalks Z/p (p < bound) and Z.

    Primes are perp(Z/p) (classes M with M/pM = 0) and perp(Q) (torsion
    classes).  The declared lattice lists the thick subcategories seen on the
    catalog: any set of torsion stalks, or everything.
    """
    ps = primes_below(bound)
    if not ps:
        raise UsageError("bound must exceed 2")
    k = len(ps)
    classes = tuple(ObjectClass(i, f"Z/{q}") for i, q in enumerate(ps)) + (ObjectClass(k, "Z"),)
    torsion = (1 << k) - 1
    primes = [Prime(f"perp(Z/{q})", torsion & ~(1 << i)) for i, q in enumerate(ps)]
    primes.append(Prime("perp(Q)", torsion))
    check_bits(k, "specZ declared lattice")
    subsets = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), m))
    where = {m: i for i, m in enumerate(subsets)}
    lattice = []
    for i, m in enumerate(subsets):
        covers = tuple(sorted(where[m & ~(1 << b)] for b in range(k) if (m >> b) & 1))
        lattice.append(LatticeElement(i, m, covers, _specz_label(m, ps)))
    lattice.append(LatticeElement(len(subsets), torsion | (1 << k), (where[torsion],), "all"))
    meta = {
        "description": f"perfect complexes over Z, stalks Z/p for primes p < {bound} and Z",
        "membership": "M in perp(Z/p) iff M/pM = 0; M in perp(Q) iff M is torsion",
        "lattice": "declared: thick subcategories restricted to the catalog",
    }
    return Model(f"specZ_{bound}", DECLARED, classes, {}, tuple(primes), tuple(lattice), (), meta)


def _specz_label(mask: int, ps: list[int]) -> str:
    if not mask:
        return "0"
    return "{" + ",".join(f"Z/{q}" for i, q in enumerate(ps) if (mask >> i) & 1) + "}"


def a_infinity_model(K: int = DEFAULT_K) -> Model:
    """D_sg(k[[x,y]]/x^2) truncated at the ideals (x, y^k), k <= K, plus (x, y^inf)."""
    if K < 1:
        raise UsageError("K must be positive")
    classes = tuple(ObjectClass(k - 1, f"I{k}", 1) for k in range(1, K + 1)) + (ObjectClass(K, "Iinf", 1),)
    finite = (1 << K) - 1
    full = finite | (1 << K)
    lattice = (
        LatticeElement(0, 0, (), "0"),
        LatticeElement(1, finite, (0,), "alpha(L)"),
        LatticeElement(2, full, (1,), "all"),
    )
    meta = {
        "description": "singularity category of the A_infinity curve k[[x,y]]/(x^2)",
        "naming": "I<k> is the ideal (x, y^k); Iinf is (x, y^inf) = (x)",
        "prime": "alpha(L): modules locally free on the punctured spectrum",
        "lattice": "declared chain 0 < alpha(L) < all",
    }
    return Model(f"A_infinity_{K}", DECLARED, classes, {}, (Prime("alpha(L)", finite),), lattice, (), meta)


def d_infinity_model(K: int = DEFAULT_K) -> Model:
    """D_sg(k[[x,y]]/x^2 y) truncated at k <= K; one declared prime alpha(L)."""
    if K < 1:
        raise UsageError("K must be positive")
    names = ["x", "x2", "xy", "y"]
    for fam in ("M", "N", "X", "Y"):
        names += [f"{fam}{k}" for k in range(1, K + 1)]
    classes = tuple(ObjectClass(i, nm, 2) for i, nm in enumerate(names))
    full = (1 << len(names)) - 1
    alpha = full & ~mask_of([names.index("x"), names.index("xy")])
    meta = {
        "description": "singularity category of the D_infinity curve k[[x,y]]/(x^2 y)",
        "naming": "x, x2, xy, y are the ideals (x), (x^2), (xy), (y); M_k = (y^{k+1}, xy), "
                  "Y_k = (y^k, x), X_k and N_k the rank-two modules",
        "prime": "alpha(L): everything except (x) and (xy)",
        "shift_period": "Sigma^2 = id on a hypersurface; 2 is recorded as an upper bound",
    }
    return Model(f"D_infinity_{K}", DECLARED, classes, {}, (Prime("alpha(L)", alpha),), None, (), meta)


def tube_model(n: int, L_max: int | None = None) -> Model:
    """Objects R_i^m (m <= L_max) of a rank-n tube with Hom/Ext from the tube rules.

    Shift 0 carries Hom and shift 1 carries Ext^1, as for stalk complexes over a
    hereditary category.
    """
    L_max = tube.default_lmax(n) if L_max is None else L_max
    if L_max < n:
        raise UsageError("L_max must be at least n")
    objs = tube.objects(n, L_max)
    classes = tuple(ObjectClass(k, str(x)) for k, x in enumerate(objs))
    hom = hom_table_from(objs, lambda a, b: (tube.hom_dim(a, b), tube.ext_dim(a, b)))
    meta = {
        "description": f"rank-{n} tube truncated at regular length {L_max}",
        "naming": "R<i>^<m>: regular socle i, regular length m",
        "shift_grading": "shift 0: Hom, shift 1: Ext^1",
        "truncated": True,
    }
    return Model(f"tube_{n}", LOCALLY_FINITE, classes, hom, None, None, (), meta)


def tube_class_mask(model: Model, objs) -> int:
    """Class mask of a set of tube objects inside a tube model."""
    return mask_of(model.class_id(str(x)) for x in objs)


BUILTINS = ("kA2", "An", "kronecker", "tube_n", "specZ", "A_infinity", "D_infinity", "stmod_Cp")


def builtin_model(name: str, n: int | None = None, p: int | None = None, nmax: int | None = None,
                  jmax: int | None = None, lambdas: Sequence | None = None, bound: int | None = None,
                  K: int | None = None, L_max: int | None = None) -> Model:
    key = name.lower().replace("-", "_")
    if key == "ka2":
        return ka2_model()
    if key == "an" or (key.startswith("a") and key[1:].isdigit()):
        size = n if n is not None else (int(key[1:]) if key[1:].isdigit() else 3)
        return an_model(size)
    if key == "kronecker":
        return kronecker_model(DEFAULT_NMAX if nmax is None else nmax, DEFAULT_JMAX if jmax is None else jmax,
                               DEFAULT_LAMBDAS if lambdas is None else lambdas)
    if key in ("tube", "tube_n") or (key.startswith("tube_") and key[5:].isdigit()):
        size = n if n is not None else (int(key[5:]) if key[5:].isdigit() else 3)
        return tube_model(size, L_max)
    if key == "specz":
        return specz_model(DEFAULT_BOUND if bound is None else bound)
    if key in ("a_infinity", "ainfinity", "a_inf"):
        return a_infinity_model(DEFAULT_K if K is None else K)
    if key in ("d_infinity", "dinfinity", "d_inf"):
        return d_infinity_model(DEFAULT_K if K is None else K)
    if key in ("stmod_cp", "stmod"):
        return stmod_cp_model(5 if p is None else p)
    raise UsageError(f"unknown model {name!r}; choose from {', '.join(BUILTINS)}")
