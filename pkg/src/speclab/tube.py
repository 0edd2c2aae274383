"""Combinatorics of a tube of rank n.

An object ``R_i^m`` is the uniserial regular module with regular socle ``i``
and regular length ``m``; its composition factors, read from the socle up,
are ``i, i+1, ..., i+m-1`` (mod n).  ``tau R_i^m = R_{i-1}^m``.

An arc ``(s, e)`` stands for the brick ``R_s^m`` with ``m`` the smallest
positive residue of ``e - s`` mod n, so ``(s, s)`` is the full loop ``R_s^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ModelError, UsageError
from .linalg import Field


@dataclass(frozen=True, order=True)
class TubeObject:
    n: int
    socle: int
    length: int

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("tube rank must be positive")
        if self.length < 1:
            raise UsageError("regular length must be positive")
        if not 0 <= self.socle < self.n:
            object.__setattr__(self, "socle", self.socle % self.n)

    @property
    def top(self) -> int:
        return (self.socle + self.length - 1) % self.n

    def factors(self) -> list[int]:
        """Composition factors from the socle upward."""
        return [(self.socle + k) % self.n for k in range(self.length)]

    def __str__(self):
        return f"R{self.socle}^{self.length}"


def obj(n: int, socle: int, length: int) -> TubeObject:
    return TubeObject(n, socle % n, length)


def tau(x: TubeObject) -> TubeObject:
    return TubeObject(x.n, (x.socle - 1) % x.n, x.length)


def tau_inverse(x: TubeObject) -> TubeObject:
    return TubeObject(x.n, (x.socle + 1) % x.n, x.length)


def _same_rank(r: TubeObject, t: TubeObject) -> None:
    if r.n != t.n:
        raise ModelError(f"tube ranks differ: {r.n} and {t.n}")


def hom_dim(r: TubeObject, t: TubeObject) -> int:
    """dim Hom(r, t): one dimension per image length e with top(r) = socle(t) + e - 1."""
    _same_rank(r, t)
    n = r.n
    return sum(
        1 for e in range(1, min(r.length, t.length) + 1)
        if (r.top - (t.socle + e - 1)) % n == 0
    )


def hom_nonzero(r: TubeObject, t: TubeObject) -> bool:
    return hom_dim(r, t) > 0


def ext_dim(r: TubeObject, t: TubeObject) -> int:
    """dim Ext^1(r, t) = dim Hom(t, tau r)."""
    _same_rank(r, t)
    return hom_dim(t, tau(r))


def ext_nonzero(r: TubeObject, t: TubeObject) -> bool:
    return ext_dim(r, t) > 0


def objects(n: int, max_length: int) -> list[TubeObject]:
    """All objects of length <= max_length, ordered by (socle, length)."""
    return [TubeObject(n, i, m) for i in range(n) for m in range(1, max_length + 1)]


def bricks(n: int) -> list[TubeObject]:
    return objects(n, n)


# -- arcs ---------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Arc:
    n: int
    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start < self.n and 0 <= self.end < self.n):
            raise UsageError(f"arc endpoints must lie in 0..{self.n - 1}")

    @property
    def length(self) -> int:
        m = (self.end - self.start) % self.n
        return m if m else self.n

    def brick(self) -> TubeObject:
        return TubeObject(self.n, self.start, self.length)

    def __str__(self):
        return f"({self.start},{self.end})"


def arc_of(x: TubeObject) -> Arc:
    if x.length > x.n:
        raise UsageError(f"{x} is not a brick")
    return Arc(x.n, x.socle, (x.socle + x.length) % x.n)


@dataclass(frozen=True)
class ArcCollection:
    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        for a in self.arcs:
            if a.n != self.n:
                raise UsageError("arc of another rank in the collection")
        object.__setattr__(self, "arcs", tuple(sorted(set(self.arcs))))

    @classmethod
    def of(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "ArcCollection":
        return cls(n, tuple(Arc(n, s % n, e % n) for s, e in pairs))

    def pairs(self) -> list[tuple[int, int]]:
        return [(a.start, a.end) for a in self.arcs]

    def bricks(self) -> list[TubeObject]:
        return [a.brick() for a in self.arcs]

    def __len__(self):
        return len(self.arcs)

    def __str__(self):
        return "{" + ", ".join(str(a) for a in self.arcs) + "}"


def _overlap_partially(a1: int, a2: int, b1: int, b2: int) -> bool:
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def arcs_cross(a: Arc, b: Arc) -> bool:
    """Arcs around the puncture cross when a pair of lifts partially overlaps.

    Coinciding starts or coinciding ends also count as crossing; an end may
    meet a start, and one arc may nest strictly inside another.
    """
    if a == b:
        return False
    if a.start == b.start or a.end == b.end:
        return True
    n = a.n
    a1, a2 = a.start, a.start + a.length
    for k in (-1, 0, 1):
        b1 = b.start + k * n
        b2 = b1 + b.length
        if _overlap_partially(a1, a2, b1, b2):
            return True
    return False


def is_noncrossing(c: ArcCollection) -> bool:
    return not any(arcs_cross(a, b) for a, b in combinations(c.arcs, 2))


def _successor(c: ArcCollection) -> dict[int, Arc]:
    return {a.start: a for a in c.arcs}


def cycle_arcs(c: ArcCollection) -> list[Arc]:
    """Arcs on a cyclic chain (each end is the next start), or [] if none.

    Starts are distinct, so the chain graph is functional and a non-crossing
    collection has at most one cycle.
    """
    succ = _successor(c)
    for a in c.arcs:
        seen = []
        cur = a
        while cur is not None and cur not in seen:
            seen.append(cur)
            cur = succ.get(cur.end)
        if cur is not None:
            cyc = seen[seen.index(cur):]
            return sorted(cyc)
    return []


def is_exceptional(c: ArcCollection) -> bool:
    if not is_noncrossing(c):
        raise UsageError(f"collection {c} is crossing")
    return not cycle_arcs(c)


def all_arcs(n: int) -> list[Arc]:
    return [Arc(n, s, e) for s in range(n) for e in range(n)]


def enumerate_noncrossing(n: int) -> list[ArcCollection]:
    """All non-crossing collections, ordered by size then lexicographically."""
    if n < 1:
        raise UsageError("n must be positive")
    arcs = all_arcs(n)
    compat = {a: {b for b in arcs if b != a and not arcs_cross(a, b)} for a in arcs}
    found: list[tuple[Arc, ...]] = []

    def grow(chosen: list[Arc], allowed: list[Arc]):
        found.append(tuple(chosen))
        for idx, a in enumerate(allowed):
            grow(chosen + [a], [b for b in allowed[idx + 1:] if b in compat[a]])

    grow([], arcs)
    found.sort(key=lambda t: (len(t), t))
    return [ArcCollection(n, t) for t in found]


# -- wide subcategories -------------------------------------------------------


def _filtered(x: TubeObject, pieces: set[tuple[int, int]]) -> bool:
    """Can the factors of x be cut into consecutive blocks that are bricks (start, length) of pieces?"""
    n = x.n
    ok = [False] * (x.length + 1)
    ok[0] = True
    for pos in range(x.length):
        if not ok[pos]:
            continue
        s = (x.socle + pos) % n
        for start, length in pieces:
            if start == s and pos + length <= x.length:
                ok[pos + length] = True
    return ok[x.length]


def default_lmax(n: int) -> int:
    return 3 * n


def wide_from_arcs(c: ArcCollection, L_max: int | None = None) -> frozenset[TubeObject]:
    """Objects of length <= L_max filtered by the bricks of c."""
    if not is_noncrossing(c):
        raise UsageError(f"collection {c} is crossing")
    L_max = default_lmax(c.n) if L_max is None else L_max
    pieces = {(b.socle, b.length) for b in c.bricks()}
    return frozenset(x for x in objects(c.n, L_max) if _filtered(x, pieces))


def perp_set(z: Sequence[TubeObject], n: int, L_max: int | None = None) -> frozenset[TubeObject]:
    """Objects x of length <= L_max with Hom(x, z_i) = 0 = Ext^1(x, z_i) for all i."""
    L_max = default_lmax(n) if L_max is None else L_max
    return frozenset(
        x for x in objects(n, L_max)
        if not any(hom_nonzero(x, y) or ext_nonzero(x, y) for y in z)
    )


def segment_objects(n: int, first: int, size: int) -> list[TubeObject]:
    """Objects whose factors all lie in first, first+1, ..., first+size-1."""
    return [TubeObject(n, (first + k) % n, m) for k in range(size) for m in range(1, size - k + 1)]


@dataclass(frozen=True)
class PerpConstruction:
    """The pieces of the perpendicular-object construction for one collection."""

    exceptional: bool
    z1: tuple[TubeObject, ...]
    z2: tuple[TubeObject, ...]
    index: int | None
    cycle: tuple[Arc, ...]
    finite_part: tuple[TubeObject, ...]

    @property
    def z(self) -> list[TubeObject]:
        return list(self.z1) + list(self.z2)


def _extending_index(c: ArcCollection) -> int:
    n = c.n
    covered = {f for b in c.bricks() for f in b.factors()}
    for i in range(n):
        cand = ArcCollection(n, c.arcs + (Arc(n, i, (i + 1) % n),))
        if i not in covered and is_noncrossing(cand):
            return i
    raise ModelError(f"no extending index for exceptional collection {c}")


def perp_construction(c: ArcCollection, L_max: int | None = None) -> PerpConstruction:
    if not is_noncrossing(c):
        raise UsageError(f"collection {c} is crossing")
    n = c.n
    L_max = default_lmax(n) if L_max is None else L_max
    cyc = cycle_arcs(c)
    if cyc:
        z1 = tuple(TubeObject(n, a.start, a.length - 1) for a in cyc if a.length > 1)
        finite = []
        for a in cyc:
            finite += segment_objects(n, a.start + 1, a.length - 2)
        index = None
    else:
        index = _extending_index(c)
        z1 = (TubeObject(n, index, n),)
        finite = segment_objects(n, index + 1, n - 1)
    wide = wide_from_arcs(c, L_max)
    z2 = tuple(
        y for y in finite
        if not any(hom_nonzero(w, y) or ext_nonzero(w, y) for w in wide)
    )
    return PerpConstruction(not cyc, z1, z2, index, tuple(cyc), tuple(sorted(finite)))


def perp_object(c: ArcCollection, L_max: int | None = None) -> list[TubeObject]:
    """An object Z with W(c) = {X : Hom(X, Z) = 0 = Ext^1(X, Z)}, as a list of summands."""
    return perp_construction(c, L_max).z


def decomposition_holds(c: ArcCollection, L_max: int | None = None) -> bool:
    """Check the decomposition of the perpendicular of Z_1 used by the construction.

    Cyclic case: the perpendicular of Z_1 is W(cycle) plus the finite-type
    pieces strictly inside the cycle arcs.  Exceptional case: it is the
    finite-type category of objects avoiding the factor at the extending index.
    """
    n = c.n
    L_max = default_lmax(n) if L_max is None else L_max
    pc = perp_construction(c, L_max)
    left = perp_set(list(pc.z1), n, L_max)
    right = set(pc.finite_part)
    if not pc.exceptional:
        right |= wide_from_arcs(ArcCollection(n, pc.cycle), L_max)
    return left == frozenset(right)


# -- representation oracle ----------------------------------------------------


@lru_cache(maxsize=None)
def _uniserial(n: int, socle: int, length: int, p: int):
    from .quiverrep import cyclic_uniserial

    return cyclic_uniserial(n, socle, length, Field(p))


def oracle_hom_dim(r: TubeObject, t: TubeObject, p: int = 0) -> int:
    """dim Hom via nilpotent representations of the cyclic quiver and a linear solve."""
    from .quiverrep import hom_dim as rep_hom

    _same_rank(r, t)
    return rep_hom(_uniserial(r.n, r.socle, r.length, p), _uniserial(t.n, t.socle, t.length, p))


def oracle_ext_dim(r: TubeObject, t: TubeObject, p: int = 0) -> int:
    """dim Ext^1 = dim Hom - Euler form; nilpotent representations form a hereditary category."""
    from .quiverrep import euler_form

    _same_rank(r, t)
    m = _uniserial(r.n, r.socle, r.length, p)
    k = _uniserial(t.n, t.socle, t.length, p)
    return oracle_hom_dim(r, t, p) - euler_form(m.quiver, m.dims, k.dims)


def oracle_orthogonal_semibricks(n: int) -> list[frozenset[TubeObject]]:
    """Sets of bricks that are pairwise Hom-orthogonal, found with the oracle."""
    bs = bricks(n)
    orth = {
        (a, b): oracle_hom_dim(a, b) == 0 and oracle_hom_dim(b, a) == 0
        for a in bs for b in bs if a != b
    }
    out = []

    def grow(chosen, rest):
        out.append(frozenset(chosen))
        for idx, b in enumerate(rest):
            grow(chosen + [b], [x for x in rest[idx + 1:] if orth[(b, x)]])

    grow([], bs)
    return out
