"""Finite category models: Sigma-orbit classes with graded Hom data or declared primes.

A model is in one of two modes:

* ``locally_finite``: the graded Hom table is complete and the double
  perpendicular ``perp_right(perp_left(S))`` is the thick closure;
* ``declared``: primes (and optionally the thick lattice) are input data.  A
  Hom table may still be attached (e.g. a truncated Kronecker catalog), but
  perpendiculars computed from it carry a truncation caveat.

Subsets of classes are handled as Python int bitmasks (bit ``i`` is class id ``i``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .errors import ModeError, ModelError, ParseError, UsageError

SCHEMA_VERSION = 1
LOCALLY_FINITE = "locally_finite"
DECLARED = "declared"
MODES = (LOCALLY_FINITE, DECLARED)


@dataclass(frozen=True)
class ObjectClass:
    id: int
    name: str
    shift_period: int | str = "free"


@dataclass(frozen=True)
class Prime:
    name: str
    members: int  # bitmask


@dataclass(frozen=True)
class LatticeElement:
    id: int
    members: int
    covers: tuple[int, ...]  # ids of the elements directly below
    name: str = ""


@dataclass(frozen=True)
class FormalObject:
    """A finite direct sum of shifted indecomposables, as sorted (class id, shift) pairs."""

    summands: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, *ids: int) -> "FormalObject":
        return cls(tuple((i, 0) for i in ids))

    def __add__(self, other: "FormalObject") -> "FormalObject":
        return FormalObject(self.summands + other.summands)

    def shifted(self, k: int) -> "FormalObject":
        return FormalObject(tuple((c, s + k) for c, s in self.summands))

    def class_ids(self) -> list[int]:
        return sorted({c for c, _ in self.summands})

    def mask(self) -> int:
        m = 0
        for c, _ in self.summands:
            m |= 1 << c
        return m

    def is_zero(self) -> bool:
        return not self.summands


@dataclass(frozen=True)
class Triangle:
    """A distinguished triangle X -> Y -> Z -> Sigma X recorded as model data."""

    x: FormalObject
    y: FormalObject
    z: FormalObject
    label: str = ""


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def ids_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass
class Model:
    name: str
    mode: str
    classes: tuple[ObjectClass, ...]
    hom: dict[tuple[int, int], dict[int, int]] = field(default_factory=dict)
    primes: tuple[Prime, ...] | None = None
    lattice: tuple[LatticeElement, ...] | None = None
    triangles: tuple[Triangle, ...] = ()
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.classes = tuple(self.classes)
        self.triangles = tuple(self.triangles)
        if self.primes is not None:
            self.primes = tuple(self.primes)
        if self.lattice is not None:
            self.lattice = tuple(self.lattice)
        self._validate()
        self._by_name = {c.name: c.id for c in self.classes}
        k = len(self.classes)
        self._out = [0] * k
        self._in = [0] * k
        for (x, y), dims in self.hom.items():
            if any(dims.values()):
                self._out[x] |= 1 << y
                self._in[y] |= 1 << x

    # -- invariants ---------------------------------------------------------

    def _validate(self):
        if self.mode not in MODES:
            raise ModelError(f"unknown mode {self.mode!r}")
        k = len(self.classes)
        for pos, c in enumerate(self.classes):
            if c.id != pos:
                raise ModelError(f"class ids must be dense 0..{k - 1}; got {c.id} at position {pos}")
            if not (c.shift_period == "free" or (isinstance(c.shift_period, int) and c.shift_period >= 1)):
                raise ModelError(f"class {c.name}: shift_period must be a positive integer or 'free'")
        names = [c.name for c in self.classes]
        if len(set(names)) != len(names):
            raise ModelError("class names must be unique")
        for (x, y), dims in self.hom.items():
            if not (0 <= x < k and 0 <= y < k):
                raise ModelError(f"hom entry ({x}, {y}) refers to an unknown class")
            for s, d in dims.items():
                if not isinstance(d, int) or d < 0:
                    raise ModelError(f"hom entry ({x}, {y}) shift {s}: dimension {d!r} is not a nonnegative integer")
                per = self.classes[y].shift_period
                if per != "free" and not 0 <= s < per:
                    raise ModelError(f"hom entry ({x}, {y}): shift {s} not reduced modulo period {per}")
        if self.mode == LOCALLY_FINITE or self.hom:
            for c in self.classes:
                if self.hom.get((c.id, c.id), {}).get(0, 0) < 1:
                    raise ModelError(f"class {c.name}: Hom(X, X) at shift 0 must be at least 1")
        if self.mode == DECLARED and self.primes is None:
            raise ModelError("declared models need a prime list")
        full = (1 << k) - 1
        for p in self.primes or ():
            if p.members & ~full:
                raise ModelError(f"prime {p.name} has members outside the catalog")
        if self.lattice is not None:
            ids = [e.id for e in self.lattice]
            if ids != list(range(len(ids))):
                raise ModelError("lattice ids must be dense and ordered")
            for e in self.lattice:
                if e.members & ~full:
                    raise ModelError(f"lattice element {e.id} has members outside the catalog")
                for c in e.covers:
                    if not 0 <= c < len(ids):
                        raise ModelError(f"lattice element {e.id} covers unknown element {c}")
                    low = self.lattice[c].members
                    if low & ~e.members or low == e.members:
                        raise ModelError(f"lattice element {e.id} does not strictly contain element {c}")
        for t in self.triangles:
            for part in (t.x, t.y, t.z):
                for c, _ in part.summands:
                    if not 0 <= c < k:
                        raise ModelError(f"triangle {t.label or t} refers to an unknown class")

    # -- lookups ------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.classes)

    @property
    def full(self) -> int:
        return (1 << len(self.classes)) - 1

    def class_id(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise ModelError(f"unknown class {name!r} in model {self.name}") from None

    def names(self, mask: int) -> list[str]:
        return [self.classes[i].name for i in ids_of(mask)]

    def mask_from_names(self, names: Iterable[str]) -> int:
        return mask_of(self.class_id(n) for n in names)

    def hom_dims(self, x: int, y: int) -> dict[int, int]:
        return dict(self.hom.get((x, y), {}))

    def total_hom(self, x: int, y: int) -> int:
        """Sum over all shifts of dim Hom(x, Sigma^i y); raises for infinite support."""
        dims = self.hom.get((x, y), {})
        total = sum(dims.values())
        if total and self.classes[y].shift_period != "free":
            raise ModelError(
                f"Hom({self.classes[x].name}, Sigma^i {self.classes[y].name}) is nonzero for "
                "infinitely many i (periodic orbit)"
            )
        return total

    def out_nonzero(self) -> list[int]:
        """out[x]: mask of y with some nonzero Hom(x, Sigma^i y)."""
        return list(self._out)

    def in_nonzero(self) -> list[int]:
        """in[y]: mask of x with some nonzero Hom(x, Sigma^i y)."""
        return list(self._in)

    def canonical(self) -> "Model":
        """Copy with zero Hom entries dropped and everything in canonical order."""
        hom = {}
        for key in sorted(self.hom):
            dims = {s: d for s, d in sorted(self.hom[key].items()) if d}
            if dims:
                hom[key] = dims
        return Model(self.name, self.mode, self.classes, hom, self.primes, self.lattice,
                     self.triangles, dict(self.metadata))

    def __eq__(self, other):
        if not isinstance(other, Model):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.name, a.mode, a.classes, a.hom, a.primes, a.lattice, a.triangles, a.metadata) == (
            b.name, b.mode, b.classes, b.hom, b.primes, b.lattice, b.triangles, b.metadata)


# -- perpendiculars and closure --------------------------------------------


def _require_table(model: Model, truncated: bool) -> None:
    if model.mode == LOCALLY_FINITE:
        return
    if not model.hom:
        raise ModeError(f"model {model.name} has no Hom table")
    if not truncated:
        raise ModeError(
            f"model {model.name} is declared; pass truncated=True to compute perpendiculars "
            "on its truncated Hom table"
        )


def perp_left(s: int, model: Model, truncated: bool = False) -> int:
    """{X : Hom(X, Sigma^i Y) = 0 for all Y in s and all i}."""
    _require_table(model, truncated)
    out = model._out
    return mask_of(x for x in range(model.size) if not out[x] & s)


def perp_right(s: int, model: Model, truncated: bool = False) -> int:
    """{Y : Hom(X, Sigma^i Y) = 0 for all X in s and all i}."""
    _require_table(model, truncated)
    inn = model._in
    return mask_of(y for y in range(model.size) if not inn[y] & s)


def thick_closure(s: int, model: Model) -> int:
    if model.mode != LOCALLY_FINITE:
        raise ModeError("thick_closure needs a locally_finite model")
    return perp_right(perp_left(s, model), model)


def is_thick(s: int, model: Model) -> bool:
    if model.mode == LOCALLY_FINITE:
        return thick_closure(s, model) == s
    if model.lattice is not None:
        return any(e.members == s for e in model.lattice)
    raise ModeError(f"model {model.name} declares no thick lattice")


def declared_thick_hull(s: int, model: Model) -> int:
    """Smallest declared lattice element containing s."""
    if model.lattice is None:
        raise ModeError(f"model {model.name} declares no thick lattice")
    best = None
    for e in model.lattice:
        if s & ~e.members == 0 and (best is None or popcount(e.members) < popcount(best)):
            best = e.members
    if best is None:
        raise ModelError("no lattice element contains the given classes")
    return best


# -- serialization ----------------------------------------------------------


def schema() -> dict:
    text = resources.files("speclab").joinpath("schema/model.schema.json").read_text()
    return json.loads(text)


def _formal_doc(f: FormalObject) -> list[list[int]]:
    return [[c, s] for c, s in f.summands]


def save_model(model: Model) -> dict:
    """Canonical JSON-compatible document."""
    m = model.canonical()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": m.name,
        "mode": m.mode,
        "classes": [{"id": c.id, "name": c.name, "shift_period": c.shift_period} for c in m.classes],
        "hom": [
            {"src": x, "dst": y, "shifts": {str(s): d for s, d in dims.items()}}
            for (x, y), dims in m.hom.items()
        ],
    }
    if m.primes is not None:
        doc["primes"] = [{"name": p.name, "members": ids_of(p.members)} for p in m.primes]
    if m.lattice is not None:
        doc["lattice"] = [
            {"id": e.id, "name": e.name, "members": ids_of(e.members), "covers": list(e.covers)}
            for e in m.lattice
        ]
    if m.triangles:
        doc["triangles"] = [
            {"label": t.label, "x": _formal_doc(t.x), "y": _formal_doc(t.y), "z": _formal_doc(t.z)}
            for t in m.triangles
        ]
    if m.metadata:
        doc["metadata"] = m.metadata
    return doc


def _validate_schema(doc) -> None:
    import jsonschema

    validator = jsonschema.Draft202012Validator(schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ParseError(err.message, err.absolute_path)


def load_model(doc) -> Model:
    """Build a model from a document (dict, JSON text, or bytes)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from None
    _validate_schema(doc)
    classes = tuple(ObjectClass(c["id"], c["name"], c["shift_period"]) for c in doc["classes"])
    hom: dict[tuple[int, int], dict[int, int]] = {}
    for pos, entry in enumerate(doc["hom"]):
        key = (entry["src"], entry["dst"])
        if key in hom:
            raise ParseError("duplicate hom entry", ("hom", pos))
        hom[key] = {int(s): d for s, d in entry["shifts"].items()}
    primes = None
    if "primes" in doc:
        primes = tuple(Prime(p["name"], mask_of(p["members"])) for p in doc["primes"])
    lattice = None
    if "lattice" in doc:
        lattice = tuple(
            LatticeElement(e["id"], mask_of(e["members"]), tuple(e["covers"]), e.get("name", ""))
            for e in doc["lattice"]
        )
    triangles = tuple(
        Triangle(
            FormalObject(tuple(map(tuple, t["x"]))),
            FormalObject(tuple(map(tuple, t["y"]))),
            FormalObject(tuple(map(tuple, t["z"]))),
            t.get("label", ""),
        )
        for t in doc.get("triangles", [])
    )
    return Model(doc["name"], doc["mode"], classes, hom, primes, lattice, triangles,
                 dict(doc.get("metadata", {})))


def dumps(model: Model) -> str:
    return json.dumps(save_model(model), indent=2, sort_keys=False) + "\n"


def read_model_file(path: str) -> Model:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return load_model(text)


# -- builders -----------------------------------------------------------------


def hom_table_from(objs: Sequence, pair) -> dict[tuple[int, int], dict[int, int]]:
    """Graded table with shifts 0 and 1 from ``pair(a, b) -> (hom, ext)``."""
    table = {}
    for i, a in enumerate(objs):
        for j, b in enumerate(objs):
            h, e = pair(a, b)
            dims = {}
            if h:
                dims[0] = h
            if e:
                dims[1] = e
            if dims:
                table[(i, j)] = dims
    return table


def formal(model: Model, spec: str) -> FormalObject:
    """Parse ``"A+B[1]+C[-2]"`` (class names, optional shifts); ``"0"`` or ``""`` is zero."""
    spec = spec.strip()
    if spec in ("", "0"):
        return FormalObject()
    out = []
    for part in spec.split("+"):
        part = part.strip()
        shift = 0
        if part.endswith("]") and "[" in part:
            part, _, rest = part.partition("[")
            try:
                shift = int(rest[:-1])
            except ValueError:
                raise UsageError(f"bad shift in {spec!r}") from None
        out.append((model.class_id(part), shift))
    return FormalObject(tuple(out))


def generators(model: Model, spec: str) -> int:
    """Mask of classes from a comma or plus separated name list; ``"0"`` is empty."""
    spec = spec.strip()
    if spec in ("", "0"):
        return 0
    names = [p.strip() for chunk in spec.split(",") for p in chunk.split("+") if p.strip()]
    return model.mask_from_names(names)


__all__ = [
    "ObjectClass", "Prime", "LatticeElement", "FormalObject", "Triangle", "Model",
    "LOCALLY_FINITE", "DECLARED", "perp_left", "perp_right", "thick_closure", "is_thick",
    "declared_thick_hull", "save_model", "load_model", "dumps", "read_model_file",
    "hom_table_from", "formal", "generators", "mask_of", "ids_of", "popcount",
]
