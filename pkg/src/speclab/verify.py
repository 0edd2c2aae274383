"""Verification suites that bind the built-in models to their expected answers.

Each row states the expected datum as a mathematical claim, the computed
datum, and whether they agree.  Rows marked ``declared`` restate input data
rather than recompute it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb
from typing import Sequence

from . import builtins, spectra, tube
from .catmodel import Model, mask_of, perp_left
from .spectra import FiniteSpace


@dataclass
class ReportRow:
    case: str
    expected: object
    computed: object
    passed: bool
    claim: str
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.note})" if self.note else ""
        return f"{status} {self.case}: expected {self.expected}, computed {self.computed}{extra}"


def _row(case, expected, computed, claim, note="") -> ReportRow:
    return ReportRow(case, expected, computed, expected == computed, claim, note)


def all_passed(rows: Sequence[ReportRow]) -> bool:
    return all(r.passed for r in rows)


def rows_doc(rows: Sequence[ReportRow]) -> list[dict]:
    out = []
    for r in rows:
        d = asdict(r)
        for key in ("expected", "computed"):
            if isinstance(d[key], (set, frozenset)):
                d[key] = sorted(d[key])
        out.append(d)
    return out


# -- Kronecker ---------------------------------------------------------------


def _names(model: Model, mask: int) -> list[str]:
    return model.names(mask)


def _kronecker_families(model: Model):
    fam = {"P": {}, "Q": {}, "R": {}}
    for c in model.classes:
        if c.name[0] in "PQ":
            fam[c.name[0]][int(c.name[1:])] = c.id
        else:
            lam, j = c.name[1:].rsplit("_", 1)
            fam["R"][(lam, int(j))] = c.id
    return fam


def verify_kronecker(n_max: int = builtins.DEFAULT_NMAX, j_max: int = builtins.DEFAULT_JMAX,
                     lambdas: Sequence = builtins.DEFAULT_LAMBDAS) -> list[ReportRow]:
    model = builtins.kronecker_model(n_max, j_max, lambdas)
    fam = _kronecker_families(model)
    P, Q, R = fam["P"], fam["Q"], fam["R"]
    lams = sorted({lam for lam, _ in R}, key=str)
    every = model.full
    p_all = mask_of(P.values())
    q_all = mask_of(Q.values())
    r_all = mask_of(R.values())

    def r_not(lam):
        return mask_of(c for (mu, _), c in R.items() if mu != lam)

    def perp(x, shift):
        return mask_of(m for m in range(model.size) if model.hom.get((m, x), {}).get(shift, 0) == 0)

    rows: list[ReportRow] = []
    prime_by_name = {p.name: p.members for p in model.primes}

    def check(label, x, exp0, exp1, exp_alpha, claim, prime_name):
        got0, got1 = perp(x, 0), perp(x, 1)
        rows.append(_row(f"kronecker {label} perp_0", _names(model, exp0), _names(model, got0), claim))
        rows.append(_row(f"kronecker {label} perp_1", _names(model, exp1), _names(model, got1), claim))
        alpha = perp_left(1 << x, model, truncated=True)
        rows.append(_row(f"kronecker {label} alpha", _names(model, exp_alpha), _names(model, alpha), claim))
        if prime_name is not None:
            rows.append(_row(f"kronecker {label} declared prime {prime_name}",
                             _names(model, prime_by_name[prime_name]), _names(model, alpha),
                             "declared prime membership agrees with computed vanishing"))

    for n, x in P.items():
        exp0 = mask_of(c for m, c in P.items() if m >= n + 1) | r_all | q_all
        exp1 = mask_of(c for m, c in P.items() if m <= n + 1)
        alpha = mask_of([P[n + 1]]) if n + 1 in P else 0
        prime = f"add(P{n + 1})" if n + 1 in P else None
        check(f"preprojective P{n}", x, exp0, exp1, alpha,
              "perp_0 P_n = {P_m: m >= n+1} u r u q, perp_1 P_n = {P_m: m <= n+1}, alpha([P_n]) = add(P_{n+1})",
              prime)
    for n, x in Q.items():
        if n >= 1:
            exp0 = mask_of(c for m, c in Q.items() if m <= n - 1)
            exp1 = p_all | r_all | mask_of(c for m, c in Q.items() if m >= n - 1)
            check(f"preinjective Q{n}", x, exp0, exp1, mask_of([Q[n - 1]]),
                  "perp_0 Q_n = {Q_m: m <= n-1}, perp_1 Q_n = p u r u {Q_m: m >= n-1}, alpha([Q_n]) = add(Q_{n-1})",
                  f"add(Q{n - 1})")
        else:
            check("preinjective Q0", x, mask_of([P[0]]), every, mask_of([P[0]]),
                  "perp_0 Q_0 = {P_0}, perp_1 Q_0 = everything, alpha([Q_0]) = add(P_0)", "add(P0)")
    for (lam, j), x in sorted(R.items()):
        check(f"regular R{lam}_{j}", x, r_not(lam) | q_all, r_not(lam) | p_all, r_not(lam),
              "perp_0 R = r_{!=lam} u q, perp_1 R = r_{!=lam} u p, alpha([R_lam^j]) = add(r_{!=lam})",
              f"r!={lam}")
    top_q = max(Q)
    rows.append(ReportRow(f"kronecker declared prime add(Q{top_q})", "declared", "declared", True,
                          "alpha([Q_{n+1}]) = add(Q_n)", "generator lies beyond the truncation"))
    rows.append(_row("kronecker generic module G", _names(model, r_all), _names(model, prime_by_name["r"]),
                     "alpha([G]) = add(r)", "declared"))

    space = spectra.shift_spectrum(model)
    index = {name: t for t, name in enumerate(space.points)}
    all_pts = space.full
    for n, x in P.items():
        rows.append(_row(f"kronecker ssupp(P{n})", space.subset_names(all_pts & ~(1 << index[f"add(P{n})"])),
                         space.subset_names(spectra.support(1 << x, space)),
                         "ssupp(P_i) = everything except add(P_i)"))
    for n, x in Q.items():
        rows.append(_row(f"kronecker ssupp(Q{n})", space.subset_names(all_pts & ~(1 << index[f"add(Q{n})"])),
                         space.subset_names(spectra.support(1 << x, space)),
                         "ssupp(Q_i) = everything except add(Q_i)"))
    pq_pts = mask_of(index[nm] for nm in space.points if nm.startswith("add("))
    for (lam, j), x in sorted(R.items()):
        rows.append(_row(f"kronecker ssupp(R{lam}_{j})", space.subset_names(pq_pts | (1 << index[f"r!={lam}"])),
                         space.subset_names(spectra.support(1 << x, space)),
                         "ssupp(R_lam^i) = P-points u Q-points u {r_{!=lam}}"))
    rows += kronecker_shape_rows(space, len(P) + len(Q), len(lams))
    return rows


def space_partition(space: FiniteSpace) -> dict[str, list[str]]:
    """Clopen points, closed non-open points, and points whose closure is not a singleton."""
    cl = space.closures()
    closed_sets = set(space.closed_sets())
    isolated, closed_pts, generic = [], [], []
    for i, name in enumerate(space.points):
        is_closed = cl[i] == 1 << i
        is_open = (space.full & ~(1 << i)) in closed_sets
        if is_closed and is_open:
            isolated.append(name)
        elif is_closed:
            closed_pts.append(name)
        else:
            generic.append(name)
    return {"discrete": isolated, "closed": closed_pts, "generic": generic}


def kronecker_shape_rows(space: FiniteSpace, z_count: int, lam_count: int) -> list[ReportRow]:
    part = space_partition(space)
    rows = [
        _row("kronecker Z-part size", z_count, len(part["discrete"]),
             "the preprojective and preinjective points form a discrete part"),
        _row("kronecker lambda-part size", lam_count, len(part["closed"]),
             "the points r_{!=lam} are closed and not open"),
        _row("kronecker generic point", ["r"], part["generic"], "one generic point add(r)"),
    ]
    if part["generic"]:
        g = space.points.index(part["generic"][0])
        lam_mask = mask_of(space.points.index(nm) for nm in part["closed"]) | (1 << g)
        rows.append(_row("kronecker generic closure", space.subset_names(lam_mask),
                         space.subset_names(space.closure(g)),
                         "the closure of the generic point is the P^1 part"))
    return rows


# -- table1: spectra of the reference categories ----------------------------------------------------------------


def spec_z_space(bound: int) -> FiniteSpace:
    """Spec(Z) truncated to primes below bound: closed sets are finite prime sets and everything."""
    ps = builtins.primes_below(bound)
    names = tuple(f"({q})" for q in ps) + ("(0)",)
    full = (1 << len(names)) - 1
    return FiniteSpace(names, tuple(1 << i for i in range(len(ps))) + (full,))


def verify_table1(bound: int = builtins.DEFAULT_BOUND, K: int = builtins.DEFAULT_K) -> list[ReportRow]:
    rows: list[ReportRow] = []
    ka2 = builtins.ka2_model()
    s = spectra.shift_spectrum(ka2)
    rows.append(_row("table1 sspec(kA2)", "3-point discrete", _shape(s), "sspec = * u * u *"))
    kr = spectra.shift_spectrum(builtins.kronecker_model())
    part = space_partition(kr)
    rows.append(_row("table1 sspec(P^1) shape", (10, 4, 1),
                     (len(part["discrete"]), len(part["closed"]), len(part["generic"])),
                     "sspec = Z u P^1, truncated at n_max = 4 with four lambdas"))
    ainf = builtins.a_infinity_model(K)
    s = spectra.shift_spectrum(ainf)
    rows.append(_row("table1 sspec(D_sg(A_inf))", "1 point", f"{s.size} point" + ("s" if s.size != 1 else ""),
                     "sspec = *"))
    sz = builtins.specz_model(bound)
    s = spectra.shift_spectrum(sz)
    rows.append(_row("table1 sspec(D(Z)^c)", True, spectra.homeomorphic(s, spec_z_space(bound)),
                     "sspec = Spec(Z), truncated"))
    lat = spectra.enumerate_thicks(ka2)
    m = spectra.matsui_spectrum(lat, ka2)
    rows.append(_row("table1 Spc_M(kA2)", "3-point discrete", _shape(m), "Spc_M = * u * u *"))
    lat = spectra.Lattice.from_declared(ainf)
    m = spectra.matsui_spectrum(lat, ainf)
    rows.append(_row("table1 Spc_M(D_sg(A_inf))", True, spectra.homeomorphic(m, spectra.sierpinski()),
                     "Spc_M = Sierpinski space"))
    rows.append(_row("table1 Spc_M(D_sg(A_inf)) points", ["0", "alpha(L)"], list(m.points),
                     "the Matsui points are 0 and the middle element"))
    lat = spectra.Lattice.from_declared(sz)
    m = spectra.matsui_spectrum(lat, sz)
    rows.append(_row("table1 Spc_M(D(Z)^c)", True, spectra.homeomorphic(m, spec_z_space(bound)),
                     "Spc_M = Spec(Z), truncated"))
    sa = spectra.shift_spectrum(ainf)
    rad0 = spectra.radical(0, sa)
    rows.append(_row("A_inf radical(0)", ainf.names(ainf.lattice[1].members), ainf.names(rad0),
                     "{0} is not radical: its radical is thick{(x,y^i) : i finite}"))
    cls = spectra.classify(ainf)
    rows.append(_row("A_inf radical thicks", [["alpha(L)"], ["all"]],
                     [[_lattice_name(ainf, r)] for r in cls.radicals()],
                     "the only radical thicks are alpha(L) and everything"))
    return rows


def _lattice_name(model: Model, members: int) -> str:
    for e in model.lattice or ():
        if e.members == members:
            return e.name
    return "{" + ",".join(model.names(members)) + "}"


def _shape(space: FiniteSpace) -> str:
    if space.is_discrete():
        return f"{space.size}-point discrete"
    if space.is_indiscrete():
        return f"{space.size}-point indiscrete"
    return f"{space.size}-point space"


# -- D_infinity --------------------------------------------------------------


def verify_dinfinity(K: int = builtins.DEFAULT_K) -> list[ReportRow]:
    model = builtins.d_infinity_model(K)
    space = spectra.shift_spectrum(model)
    alpha = model.primes[0].members
    rows = []
    for name in ("x", "xy"):
        rows.append(_row(f"D_inf ({name}) in alpha(L)", False, bool((alpha >> model.class_id(name)) & 1),
                         "(x), (xy) are not in alpha(L)"))
    rest = mask_of(c.id for c in model.classes if c.name not in ("x", "xy"))
    rows.append(_row("D_inf alpha(L) contents", model.names(rest), model.names(alpha),
                     "alpha(L) = thick{(x^2), (y), M_k, N_k, X_k, Y_k}", "declared"))
    rad0 = spectra.radical(0, space)
    rows.append(_row("D_inf radical(0) != 0", True, rad0 != 0, "{0} is not radical"))
    rows.append(_row("D_inf radical(0)", model.names(alpha), model.names(rad0), "sqrt(0) = alpha(L)"))
    cls = spectra.classify(model)
    rows.append(_row("D_inf radical thicks", [model.names(alpha), model.names(model.full)],
                     [model.names(r) for r in cls.radicals()],
                     "the only radical thicks are alpha(L) and everything"))
    return rows


# -- tube --------------------------------------------------------------------


def verify_tube(n: int, L_max: int | None = None) -> list[ReportRow]:
    L_max = tube.default_lmax(n) if L_max is None else L_max
    rows = []
    objs = tube.objects(n, L_max)
    bad = [(str(r), str(t)) for r in objs for t in objs
           if tube.hom_dim(r, t) != tube.oracle_hom_dim(r, t) or tube.ext_dim(r, t) != tube.oracle_ext_dim(r, t)]
    rows.append(_row(f"tube n={n} Hom/Ext rules vs representation oracle", [], bad[:5],
                     "Hom and Ext^1 dimensions of uniserial nilpotent cyclic-quiver modules"))
    cols = tube.enumerate_noncrossing(n)
    rows.append(_row(f"tube n={n} non-crossing collections", comb(2 * n, n), len(cols),
                     "wide subcategories of a rank-n tube are counted by C(2n, n)"))
    semis = set(tube.oracle_orthogonal_semibricks(n))
    rows.append(_row(f"tube n={n} collections = orthogonal brick sets", True,
                     {frozenset(c.bricks()) for c in cols} == semis,
                     "non-crossing arcs correspond to pairwise Hom-orthogonal bricks"))
    wides = {}
    perp_bad, dec_bad = [], []
    for c in cols:
        w = tube.wide_from_arcs(c, L_max)
        wides[c] = w
        if tube.perp_set(tube.perp_object(c, L_max), n, L_max) != w:
            perp_bad.append(str(c))
        if not tube.decomposition_holds(c, L_max):
            dec_bad.append(str(c))
    rows.append(_row(f"tube n={n} W(c) = perp(Z)", [], perp_bad,
                     "every wide subcategory is the (0,1)-left perpendicular of an object"))
    rows.append(_row(f"tube n={n} distinct wide subcategories", len(cols), len(set(wides.values())),
                     "distinct collections give distinct wide subcategories"))
    rows.append(_row(f"tube n={n} perpendicular decomposition of Z_1", [], dec_bad,
                     "the perpendicular of Z_1 splits into the cyclic part and finite-type pieces"))
    return rows


def verify_all() -> list[ReportRow]:
    rows = verify_kronecker() + verify_table1() + verify_dinfinity()
    for n in (2, 3, 4):
        rows += verify_tube(n)
    return rows
