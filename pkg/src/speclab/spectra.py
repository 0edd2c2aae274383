"""Spectra, supports, radicals and lattices of thick subcategories.

Point sets and class sets are int bitmasks throughout.  A ``FiniteSpace`` is
given by a basis of closed sets; in a finite space the closed sets are exactly
the unions of point closures, i.e. the specialization-closed subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _backend
from .catmodel import (
    DECLARED, LOCALLY_FINITE, FormalObject, Model, ids_of, mask_of, perp_left, perp_right,
    popcount, thick_closure,
)
from .errors import GuardError, InconsistencyError, ModeError, ModelError
from .guards import DEFAULT_CLOSED_SET_GUARD, check_bits, guard_bits


@dataclass(frozen=True)
class FiniteSpace:
    """Finite topological space with a basis of closed sets.

    ``members[i]`` is the class mask of the thick subcategory at point ``i``
    when the points are thick subcategories (spectra built from primes).
    """

    points: tuple[str, ...]
    closed_basis: tuple[int, ...]
    members: tuple[int, ...] | None = None
    universe: int = 0
    kind: str = "space"

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def closure(self, i: int) -> int:
        acc = self.full
        for b in self.closed_basis:
            if (b >> i) & 1:
                acc &= b
        return acc

    def closures(self) -> list[int]:
        return [self.closure(i) for i in range(self.size)]

    def closure_of(self, u: int) -> int:
        acc = 0
        for i in ids_of(u):
            acc |= self.closure(i)
        return acc

    def is_closed(self, u: int) -> bool:
        return self.closure_of(u) == u

    def specializes(self, x: int, y: int) -> bool:
        """True when x lies in the closure of y."""
        return bool((self.closure(y) >> x) & 1)

    def closed_sets(self, limit: int = DEFAULT_CLOSED_SET_GUARD) -> list[int]:
        """All closed sets, ascending; guarded by ``limit`` sets."""
        full = self.full
        gens = [full & ~c for c in self.closures()]
        opens = _moore(gens, full, limit)
        return sorted(full & ~o for o in opens)

    def is_t0(self) -> bool:
        cl = self.closures()
        return len(set(cl)) == len(cl)

    def is_discrete(self) -> bool:
        return all(c == 1 << i for i, c in enumerate(self.closures()))

    def is_indiscrete(self) -> bool:
        return all(c == self.full for c in self.closures())

    def subset_names(self, u: int) -> list[str]:
        return [self.points[i] for i in ids_of(u)]


def _moore(generators: Sequence[int], full: int, limit: int) -> list[int]:
    """All intersections of generator masks; the guard counts results."""
    gens = sorted(set(generators))
    k = _backend.kernels if full < (1 << 63) else _backend.pure
    try:
        return list(k.moore_family(gens, full, limit))
    except OverflowError:
        raise GuardError(f"more than {limit} sets (set SPECLAB_GUARD to raise)") from None


def specialization_closed(space: FiniteSpace, backend: str = "auto") -> list[int]:
    """Exhaustive scan of all 2**k subsets; guarded at 2**18 candidates."""
    check_bits(space.size, f"specialization-closed subsets of a {space.size}-point space")
    limit = guard_bits()
    return list(_backend.get(backend).specialization_closed_masks(space.closures(), limit))


def homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    """Finite spaces are homeomorphic iff their specialization preorders are isomorphic."""
    if a.size != b.size:
        return False
    ca, cb = a.closures(), b.closures()

    def sig(cl, i):
        up = sum(1 for c in cl if (c >> i) & 1)
        return (popcount(cl[i]), up)

    sa = [sig(ca, i) for i in range(a.size)]
    sb = [sig(cb, j) for j in range(b.size)]
    if sorted(sa) != sorted(sb):
        return False
    order = sorted(range(a.size), key=lambda i: -popcount(ca[i]))
    image: dict[int, int] = {}
    used = set()

    def consistent(i, j):
        for x, y in image.items():
            if ((ca[i] >> x) & 1) != ((cb[j] >> y) & 1):
                return False
            if ((ca[x] >> i) & 1) != ((cb[y] >> j) & 1):
                return False
        return True

    def extend(pos):
        if pos == len(order):
            return True
        i = order[pos]
        for j in range(b.size):
            if j in used or sb[j] != sa[i] or not consistent(i, j):
                continue
            image[i] = j
            used.add(j)
            if extend(pos + 1):
                return True
            del image[i]
            used.discard(j)
        return False

    return extend(0)


def kolmogorov_quotient(space: FiniteSpace) -> FiniteSpace:
    """Identify points with equal closures; keeps the first point's payload."""
    cl = space.closures()
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(cl):
        groups.setdefault(c, []).append(i)
    reps = sorted(groups.values(), key=lambda g: g[0])
    index = {}
    for new, g in enumerate(reps):
        for i in g:
            index[i] = new

    def push(mask):
        return mask_of(index[i] for i in ids_of(mask))

    names = tuple("~".join(space.points[i] for i in g) for g in reps)
    members = None
    if space.members is not None:
        members = tuple(space.members[g[0]] for g in reps)
    basis = tuple(push(b) for b in space.closed_basis)
    return FiniteSpace(names, basis, members, space.universe, space.kind)


def discrete_space(names: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(tuple(names), tuple(1 << i for i in range(len(names))))


def sierpinski() -> FiniteSpace:
    """Points 0 (closed) and 1 (open, generic)."""
    return FiniteSpace(("0", "1"), (0b01, 0b11))


# -- thick subcategories ----------------------------------------------------


@dataclass(frozen=True)
class ThickSet:
    members: int
    model_name: str = ""

    def __contains__(self, cid: int) -> bool:
        return bool((self.members >> cid) & 1)

    def ids(self) -> list[int]:
        return ids_of(self.members)


def prime_masks(model: Model) -> list[tuple[str, int]]:
    """Shift-primes: declared, or the distinct perp_left of single classes."""
    if model.mode == DECLARED:
        return [(p.name, p.members) for p in model.primes]
    seen: dict[int, str] = {}
    for c in model.classes:
        m = perp_left(1 << c.id, model)
        if m not in seen:
            seen[m] = f"perp({c.name})"
    return [(name, m) for m, name in seen.items()]


def ssupp_mask(obj_mask: int, primes: Sequence[int]) -> int:
    """Points P (prime masks) missing some class of obj_mask."""
    return mask_of(t for t, p in enumerate(primes) if obj_mask & ~p)


def shift_spectrum(model: Model) -> FiniteSpace:
    named = prime_masks(model)
    primes = [m for _, m in named]
    basis = tuple(ssupp_mask(1 << c.id, primes) for c in model.classes)
    return FiniteSpace(tuple(n for n, _ in named), basis, tuple(primes), model.size, "sspec")


def shift_homological_spectrum(model: Model) -> FiniteSpace:
    if model.mode != LOCALLY_FINITE:
        raise ModeError("the shift-homological spectrum needs a locally_finite model")
    basis = tuple(model.out_nonzero())
    names = tuple(c.name for c in model.classes)
    return FiniteSpace(names, basis, None, model.size, "shspec")


def homological_support(obj: FormalObject, model: Model) -> int:
    """Classes X with Hom(C, Sigma^i X) != 0 for some summand C and some i."""
    out = model.out_nonzero()
    acc = 0
    for cid in obj.class_ids():
        _check_class(cid, model.size)
        acc |= out[cid]
    return acc


def _check_class(cid: int, universe: int) -> None:
    if not 0 <= cid < universe:
        raise ModelError(f"class id {cid} is not in the model")


def _require_members(space: FiniteSpace) -> tuple[int, ...]:
    if space.members is None:
        raise ModeError("this space does not consist of thick subcategories")
    return space.members


def support(obj: FormalObject | int, space: FiniteSpace) -> int:
    """Points whose thick subcategory misses some summand of obj (a FormalObject or class mask)."""
    members = _require_members(space)
    mask = obj.mask() if isinstance(obj, FormalObject) else obj
    for cid in ids_of(mask):
        _check_class(cid, space.universe)
    return ssupp_mask(mask, members)


def support_of_thick(members: int, space: FiniteSpace) -> int:
    """Union of the supports of all member classes."""
    return support(members, space)


def radical(members: int, space: FiniteSpace) -> int:
    """Intersection of the prime points containing members (whole catalog if none)."""
    acc = (1 << space.universe) - 1
    for p in _require_members(space):
        if members & ~p == 0:
            acc &= p
    return acc


def psi(u: int, space: FiniteSpace) -> int:
    """Classes whose support lies in u, i.e. the intersection of the primes outside u."""
    acc = (1 << space.universe) - 1
    for t, p in enumerate(_require_members(space)):
        if not (u >> t) & 1:
            acc &= p
    return acc


@dataclass
class Classification:
    rows: list[tuple[int, int]]  # (radical thick mask, support point mask)
    space: FiniteSpace
    candidates: int

    def radicals(self) -> list[int]:
        return [r for r, _ in self.rows]

    def params(self) -> list[int]:
        return [u for _, u in self.rows]


def classify(model: Model | FiniteSpace, backend: str = "auto") -> Classification:
    """Radical thicks against their supports, with both composites checked to be identities."""
    space = model if isinstance(model, FiniteSpace) else shift_spectrum(model)
    members = _require_members(space)
    closed = specialization_closed(space, backend)
    kern = _backend.get(backend)
    full = (1 << space.universe) - 1
    if full < (1 << 64) and len(members) <= 64:
        images = kern.intersections_of_complements(closed, list(members), full)
    else:
        images = _backend.pure.intersections_of_complements(closed, list(members), full)
    rads = sorted(set(images), key=lambda m: (popcount(m), m))
    rows = []
    for r in rads:
        u = support_of_thick(r, space)
        if psi(u, space) != r:
            raise InconsistencyError("Psi(supp(L)) != L for a radical L")
        if radical(r, space) != r:
            raise InconsistencyError("Psi(U) is not radical")
        rows.append((r, u))
    if len({u for _, u in rows}) != len(rows):
        raise InconsistencyError("supp is not injective on radical thicks")
    return Classification(rows, space, len(closed))


# -- lattices ----------------------------------------------------------------


@dataclass
class Lattice:
    """Finite lattice of thick subcategories ordered by inclusion."""

    elements: list[int]
    names: list[str]
    lower: list[tuple[int, ...]]  # lower covers
    universe: int = 0
    upper: list[tuple[int, ...]] = field(init=False)

    def __post_init__(self):
        ups: list[list[int]] = [[] for _ in self.elements]
        for i, lows in enumerate(self.lower):
            for j in lows:
                ups[j].append(i)
        self.upper = [tuple(sorted(u)) for u in ups]
        self._index = {m: i for i, m in enumerate(self.elements)}

    @classmethod
    def from_masks(cls, masks: Iterable[int], universe: int, names: Sequence[str] | None = None) -> "Lattice":
        elems = sorted(set(masks), key=lambda m: (popcount(m), m))
        lower = []
        for i, e in enumerate(elems):
            below = [j for j in range(i) if elems[j] & ~e == 0 and elems[j] != e]
            covers = tuple(j for j in below
                           if not any(k != j and elems[j] & ~elems[k] == 0 and elems[j] != elems[k]
                                      for k in below))
            lower.append(covers)
        if names is None:
            names = [f"L{i}" for i in range(len(elems))]
        return cls(elems, list(names), lower, universe)

    @classmethod
    def from_declared(cls, model: Model) -> "Lattice":
        if model.lattice is None:
            raise ModeError(f"model {model.name} declares no thick lattice")
        elems = [e.members for e in model.lattice]
        names = [e.name or f"L{e.id}" for e in model.lattice]
        return cls(elems, names, [tuple(e.covers) for e in model.lattice], model.size)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, members: int) -> int:
        return self._index[members]

    def leq(self, i: int, j: int) -> bool:
        return self.elements[i] & ~self.elements[j] == 0

    def bottom(self) -> int:
        return min(range(self.size), key=lambda i: popcount(self.elements[i]))

    def top(self) -> int:
        return max(range(self.size), key=lambda i: popcount(self.elements[i]))

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(j, i) for i, lows in enumerate(self.lower) for j in lows]


def enumerate_thicks(model: Model, method: str = "moore", backend: str = "auto") -> Lattice:
    """All thick subcategories: double-perp fixed points, or the declared lattice.

    ``method="moore"`` intersects the sets perp_right({x}); ``"exhaustive"``
    scans all 2**k subsets (guarded) and serves as a cross-check.
    """
    if model.mode == DECLARED:
        return Lattice.from_declared(model)
    full = model.full
    if method == "exhaustive":
        check_bits(model.size, f"thick enumeration over {model.size} classes")
        masks = _backend.get(backend).closure_fixed_points(model.out_nonzero(), model.in_nonzero(), guard_bits())
    else:
        gens = [perp_right(1 << c.id, model) for c in model.classes]
        masks = _moore(gens, full, DEFAULT_CLOSED_SET_GUARD)
    lat = Lattice.from_masks(masks, model.size)
    lat.names = [thick_label(m, model) for m in lat.elements]
    return lat


def thick_label(members: int, model: Model) -> str:
    if members == 0:
        return "0"
    if members == model.full:
        return "all"
    return "{" + ",".join(model.names(members)) + "}"


def lattice_of(model: Model) -> Lattice:
    if model.mode == LOCALLY_FINITE or model.lattice is not None:
        return enumerate_thicks(model)
    raise ModeError(f"model {model.name} declares no thick lattice")


def matsui_primes(lat: Lattice) -> list[int]:
    """Elements whose strictly larger elements have a unique minimal element (one upper cover)."""
    return [i for i in range(lat.size) if len(lat.upper[i]) == 1]


def matsui_spectrum(lat: Lattice, model: Model | None = None) -> FiniteSpace:
    """Matsui primes with closed basis {P : A not in P} over catalog classes."""
    pts = matsui_primes(lat)
    universe = lat.universe if model is None else model.size
    members = tuple(lat.elements[i] for i in pts)
    basis = tuple(ssupp_mask(1 << c, members) for c in range(universe))
    return FiniteSpace(tuple(lat.names[i] for i in pts), basis, members, universe, "matsui")


def fspcnt_space(lat: Lattice) -> FiniteSpace:
    """All lattice elements; closed sets are unions of principal up-sets."""
    ups = tuple(mask_of(j for j in range(lat.size) if lat.leq(i, j)) for i in range(lat.size))
    return FiniteSpace(tuple(lat.names), ups, tuple(lat.elements), lat.universe, "fspcnt")


def is_discrete_criterion(model: Model) -> dict[str, bool]:
    """Per class A: is every indecomposable of thick(A) thick-equivalent to A?"""
    if model.mode != LOCALLY_FINITE:
        raise ModeError("the discreteness criterion needs a locally_finite model")
    thick = [thick_closure(1 << c.id, model) for c in model.classes]
    return {
        c.name: all(thick[b] == thick[c.id] for b in ids_of(thick[c.id]))
        for c in model.classes
    }


# -- output ------------------------------------------------------------------


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def specialization_edges(space: FiniteSpace) -> list[tuple[int, int]]:
    """Covers of the specialization order: (y, x) when x is an immediate specialization of y."""
    cl = space.closures()
    below = {y: [x for x in range(space.size) if x != y and (cl[y] >> x) & 1 and cl[x] != cl[y]]
             for y in range(space.size)}
    edges = []
    for y, xs in below.items():
        for x in xs:
            if not any(z != x and (cl[z] >> x) & 1 and cl[z] != cl[x] for z in xs):
                edges.append((y, x))
    for y in range(space.size):
        for x in range(y + 1, space.size):
            if cl[x] == cl[y]:
                edges += [(y, x), (x, y)]
    return sorted(edges)


def space_to_dot(space: FiniteSpace, title: str = "space") -> str:
    lines = [f"digraph {_dot_id(title)} {{", "  rankdir=BT;"]
    for i, name in enumerate(space.points):
        lines.append(f"  p{i} [label={_dot_id(name)}];")
    for y, x in specialization_edges(space):
        lines.append(f"  p{x} -> p{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dot(lat: Lattice, title: str = "lattice") -> str:
    lines = [f"digraph {_dot_id(title)} {{", "  rankdir=BT;"]
    for i, name in enumerate(lat.names):
        lines.append(f"  n{i} [label={_dot_id(name)}];")
    for lo, hi in lat.hasse_edges():
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_doc(space: FiniteSpace, model: Model | None = None) -> dict:
    doc = {
        "kind": space.kind,
        "points": [],
        "closed_basis": [space.subset_names(b) for b in dict.fromkeys(space.closed_basis)],
        "closures": {space.points[i]: space.subset_names(c) for i, c in enumerate(space.closures())},
        "t0": space.is_t0(),
        "discrete": space.is_discrete(),
        "indiscrete": space.is_indiscrete(),
    }
    for i, name in enumerate(space.points):
        entry = {"name": name}
        if space.members is not None and model is not None:
            entry["members"] = model.names(space.members[i])
        doc["points"].append(entry)
    return doc


def lattice_doc(lat: Lattice, model: Model | None = None) -> dict:
    out = []
    for i, m in enumerate(lat.elements):
        entry = {"id": i, "name": lat.names[i], "covers": list(lat.lower[i])}
        entry["members"] = model.names(m) if model is not None else ids_of(m)
        out.append(entry)
    return {"kind": "lattice", "size": lat.size, "elements": out}
