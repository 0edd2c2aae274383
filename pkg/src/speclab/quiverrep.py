"""Quiver representations with exact Hom and Ext^1 dimensions.

Hom(M, N) is the kernel of the commutation system ``N_a f_s = f_t M_a`` over
all arrows ``a: s -> t``.  For acyclic quivers Ext^1 follows from the Euler
form, since path algebras are hereditary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InconsistencyError, ModelError, UsageError
from .linalg import QQ, Field

INF = "inf"


@dataclass(frozen=True)
class Quiver:
    num_vertices: int
    arrows: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self):
        for s, t in self.arrows:
            if not (0 <= s < self.num_vertices and 0 <= t < self.num_vertices):
                raise ModelError(f"arrow {(s, t)} leaves the vertex set")

    def is_acyclic(self) -> bool:
        indeg = [0] * self.num_vertices
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in range(self.num_vertices) if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return seen == self.num_vertices


def linear_quiver(n: int) -> Quiver:
    """1 -> 2 -> ... -> n, stored on vertices 0..n-1."""
    return Quiver(n, tuple((v, v + 1) for v in range(n - 1)), f"A{n}")


def kronecker_quiver() -> Quiver:
    """Two parallel arrows from vertex 0 (source) to vertex 1 (sink)."""
    return Quiver(2, ((0, 1), (0, 1)), "Kronecker")


def cyclic_quiver(n: int) -> Quiver:
    """Vertices 0..n-1 with arrows v -> v+1 mod n."""
    return Quiver(n, tuple((v, (v + 1) % n) for v in range(n)), f"C{n}")


Matrix = tuple[tuple, ...]


def _zero(rows: int, cols: int, fld: Field) -> Matrix:
    z = fld.coerce(0)
    return tuple(tuple(z for _ in range(cols)) for _ in range(rows))


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]
    field: Field = QQ
    name: str = ""

    def __post_init__(self):
        if len(self.dims) != self.quiver.num_vertices:
            raise ModelError("dimension vector length does not match the quiver")
        if any(d < 0 for d in self.dims):
            raise ModelError("negative dimension")
        if len(self.maps) != len(self.quiver.arrows):
            raise ModelError("one matrix per arrow is required")
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            if len(m) != self.dims[t] or any(len(row) != self.dims[s] for row in m):
                raise ModelError(
                    f"{self.name or 'representation'}: map {s}->{t} is not {self.dims[t]}x{self.dims[s]}"
                )

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0


def make_rep(quiver: Quiver, dims: Sequence[int], maps: Sequence[Sequence[Sequence]],
             fld: Field = QQ, name: str = "") -> Representation:
    """Build a representation, coercing entries into ``fld``."""
    coerced = tuple(tuple(tuple(fld.coerce(v) for v in row) for row in m) for m in maps)
    return Representation(quiver, tuple(dims), coerced, fld, name)


def zero_rep(quiver: Quiver, fld: Field = QQ) -> Representation:
    dims = (0,) * quiver.num_vertices
    return Representation(quiver, dims, tuple(() for _ in quiver.arrows), fld, "0")


def direct_sum(m: Representation, n: Representation, name: str = "") -> Representation:
    _check_compatible(m, n)
    maps = []
    for (s, t), a, b in zip(m.quiver.arrows, m.maps, n.maps):
        z = m.field.coerce(0)
        rows = [tuple(row) + (z,) * n.dims[s] for row in a]
        rows += [(z,) * m.dims[s] + tuple(row) for row in b]
        maps.append(tuple(rows))
    dims = tuple(x + y for x, y in zip(m.dims, n.dims))
    return Representation(m.quiver, dims, tuple(maps), m.field, name or f"{m.name}+{n.name}")


def _check_compatible(m: Representation, n: Representation) -> None:
    if m.quiver != n.quiver:
        raise ModelError("representations live over different quivers")
    if m.field != n.field:
        raise ModelError("representations live over different fields")


def commutation_system(m: Representation, n: Representation) -> tuple[list[list], int]:
    """Coefficient rows of the linear system cutting out Hom(M, N), and the unknown count."""
    _check_compatible(m, n)
    q = m.quiver
    offset = []
    total = 0
    for v in range(q.num_vertices):
        offset.append(total)
        total += n.dims[v] * m.dims[v]

    def var(v, i, j):
        return offset[v] + i * m.dims[v] + j

    zero = m.field.coerce(0)
    rows = []
    for (s, t), ma, na in zip(q.arrows, m.maps, n.maps):
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [zero] * total
                for k in range(n.dims[s]):
                    c = na[i][k]
                    if c:
                        row[var(s, k, j)] += c
                for k in range(m.dims[t]):
                    c = ma[k][j]
                    if c:
                        row[var(t, i, k)] -= c
                if any(row):
                    rows.append(row)
    return rows, total


def hom_dim(m: Representation, n: Representation, backend: str = "auto") -> int:
    """dim Hom(M, N) as the nullity of the commutation system."""
    rows, total = commutation_system(m, n)
    if total == 0:
        return 0
    return linalg.nullity(rows, total, m.field, backend)


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    val = sum(x * y for x, y in zip(d, e))
    val -= sum(d[s] * e[t] for s, t in quiver.arrows)
    return val


def ext1_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N> over an acyclic quiver."""
    if not m.quiver.is_acyclic():
        raise UsageError("ext1_dim needs an acyclic (hereditary) quiver")
    val = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if val < 0:
        raise InconsistencyError(f"negative Ext^1({m.name}, {n.name}) = {val}")
    return val


def graded_hom_pair(m: Representation, n: Representation) -> tuple[int, int]:
    """(dim Hom(M, N), dim Hom(M, Sigma N)) for stalk complexes over a hereditary algebra."""
    return hom_dim(m, n), ext1_dim(m, n)


class Catalog(list):
    """A list of representations with the conventions used to build it."""

    def __init__(self, items=(), metadata=None):
        super().__init__(items)
        self.metadata = dict(metadata or {})

    def by_name(self, name: str) -> Representation:
        for rep in self:
            if rep.name == name:
                return rep
        raise KeyError(name)


def interval_rep(n: int, start: int, end: int, fld: Field = QQ) -> Representation:
    """Interval module supported on vertices start..end (1-based) of 1 -> ... -> n."""
    if not 1 <= start <= end <= n:
        raise UsageError(f"bad interval [{start},{end}] for A{n}")
    q = linear_quiver(n)
    dims = tuple(1 if start <= v + 1 <= end else 0 for v in range(n))
    maps = []
    for s, t in q.arrows:
        if dims[s] and dims[t]:
            maps.append(((1,),))
        else:
            maps.append(tuple(tuple(0 for _ in range(dims[s])) for _ in range(dims[t])))
    name = f"S{start}" if start == end else f"M{start}-{end}"
    return make_rep(q, dims, maps, fld, name)


def catalog_An(n: int, fld: Field = QQ) -> Catalog:
    """All n(n+1)/2 interval modules of linear A_n, ordered by (start, end)."""
    if n < 0:
        raise UsageError("n must be nonnegative")
    reps = [interval_rep(n, i, j, fld) for i in range(1, n + 1) for j in range(i, n + 1)]
    meta = {
        "quiver": f"A{n} linear, arrows v -> v+1",
        "naming": "S<i> simple at vertex i; M<i>-<j> interval supported on i..j",
        "projective": "P_v = [v, n]",
        "injective": "I_v = [1, v]",
    }
    return Catalog(reps, meta)


def _identity(j: int) -> list[list[int]]:
    return [[1 if r == c else 0 for c in range(j)] for r in range(j)]


def _jordan(j: int, lam) -> list[list]:
    return [[lam if r == c else (1 if c == r + 1 else 0) for c in range(j)] for r in range(j)]


def _lambda_key(lam) -> str:
    if lam == INF:
        return "inf"
    f = Fraction(lam)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_lambda(text):
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    return Fraction(text)


def preprojective(n: int, fld: Field = QQ) -> Representation:
    """P_n with dimension vector (n, n+1) on (source, sink)."""
    q = kronecker_quiver()
    a = [[1 if r == c else 0 for c in range(n)] for r in range(n + 1)]
    b = [[1 if r == c + 1 else 0 for c in range(n)] for r in range(n + 1)]
    return make_rep(q, (n, n + 1), (a, b), fld, f"P{n}")


def preinjective(n: int, fld: Field = QQ) -> Representation:
    """Q_n with dimension vector (n+1, n) on (source, sink)."""
    q = kronecker_quiver()
    a = [[1 if c == r else 0 for c in range(n + 1)] for r in range(n)]
    b = [[1 if c == r + 1 else 0 for c in range(n + 1)] for r in range(n)]
    return make_rep(q, (n + 1, n), (a, b), fld, f"Q{n}")


def regular(lam, j: int, fld: Field = QQ) -> Representation:
    """R_lam^j: (I, J_j(lam)); lam = inf swaps the arrows to (J_j(0), I)."""
    q = kronecker_quiver()
    if lam == INF:
        a, b = _jordan(j, 0), _identity(j)
    else:
        a, b = _identity(j), _jordan(j, fld.coerce(lam))
    return make_rep(q, (j, j), (a, b), fld, f"R{_lambda_key(lam)}_{j}")


def catalog_kronecker(n_max: int, j_max: int, lambdas: Sequence, fld: Field = QQ) -> Catalog:
    """Truncated Kronecker catalog: P_0..P_nmax, Q_0..Q_nmax, R_lam^1..R_lam^jmax."""
    if n_max < 0 or j_max < 1:
        raise UsageError("n_max >= 0 and j_max >= 1 are required")
    lams = [lam if lam == INF else fld.coerce(lam) for lam in lambdas]
    keys = [lam if lam == INF else (lam % fld.p if fld.p else lam) for lam in lams]
    if len(set(keys)) != len(keys):
        raise ModelError("duplicate lambda parameter")
    reps = [preprojective(i, fld) for i in range(n_max + 1)]
    reps += [preinjective(i, fld) for i in range(n_max + 1)]
    for lam in lambdas:
        reps += [regular(lam if lam == INF else Fraction(lam), j, fld) for j in range(1, j_max + 1)]
    meta = {
        "quiver": "Kronecker, arrows a, b: 0 (source) -> 1 (sink)",
        "dimension_vectors": "P_n = (n, n+1), Q_n = (n+1, n), R_lam^j = (j, j) on (source, sink)",
        "projectives": "P0 (simple at sink), P1",
        "injectives": "Q0 (simple at source), Q1",
        "regular": "R_lam^j = (I, J_j(lam)); lam = inf gives (J_j(0), I)",
        "lambdas": [_lambda_key(lam) for lam in lambdas],
        "n_max": n_max,
        "j_max": j_max,
    }
    cat = Catalog(reps, meta)
    if n_max >= 1 and hom_dim(cat.by_name("P0"), cat.by_name("P1")) == 0:
        raise InconsistencyError("dimension-vector convention check failed: Hom(P0, P1) = 0")
    return cat


def cyclic_uniserial(n: int, socle: int, length: int, fld: Field = QQ) -> Representation:
    """Nilpotent uniserial representation of the cyclic quiver realizing tube object R_socle^length.

    Tube index i corresponds to quiver vertex -i mod n, so that the composition
    factors socle, socle+1, ..., socle+length-1 (bottom to top) sit at vertices
    -socle, -socle-1, ... and the arrows v -> v+1 move down the radical series.
    """
    if length < 1:
        raise UsageError("length must be positive")
    q = cyclic_quiver(n)
    top_vertex = (-(socle + length - 1)) % n
    where = [(top_vertex + k) % n for k in range(length)]
    dims = [0] * n
    local = []
    for v in where:
        local.append(dims[v])
        dims[v] += 1
    maps = []
    for s, t in q.arrows:
        m = [[0] * dims[s] for _ in range(dims[t])]
        for k in range(length - 1):
            if where[k] == s and where[k + 1] == t:
                m[local[k + 1]][local[k]] = 1
        maps.append(m)
    return make_rep(q, dims, maps, fld, f"R{socle % n}^{length}")
