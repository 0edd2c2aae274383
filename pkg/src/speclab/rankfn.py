"""Integral rank functions on locally finite models."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Sequence

from .catmodel import LOCALLY_FINITE, FormalObject, Model, Triangle, perp_left, thick_closure
from .errors import AxiomViolation, GuardError, ModeError, UsageError
from .guards import guard_bits


@dataclass(frozen=True)
class RankFunction:
    """Values on classes; extended additively to formal objects (shifts are ignored)."""

    values: tuple[int, ...]
    label: str = ""
    source: tuple | None = field(default=None, compare=False)

    def __call__(self, obj: FormalObject | int) -> int:
        if isinstance(obj, int):
            return self.values[obj]
        return sum(self.values[c] for c, _ in obj.summands)

    def __add__(self, other: "RankFunction") -> "RankFunction":
        return RankFunction(tuple(a + b for a, b in zip(self.values, other.values)),
                            f"{self.label}+{other.label}")

    def scaled(self, k: int) -> "RankFunction":
        return RankFunction(tuple(k * v for v in self.values), f"{k}*{self.label}")

    def as_dict(self, model: Model) -> dict[str, int]:
        return {c.name: v for c, v in zip(model.classes, self.values)}


def zero(model: Model) -> RankFunction:
    return RankFunction((0,) * model.size, "0")


def _require_lf(model: Model) -> None:
    if model.mode != LOCALLY_FINITE:
        raise ModeError("rank functions need a locally_finite model")


def theta_upper(a: FormalObject, model: Model) -> RankFunction:
    """X -> sum_i dim Hom(X, Sigma^i A)."""
    _require_lf(model)
    vals = tuple(
        sum(model.total_hom(x, c) for c, _ in a.summands) for x in range(model.size)
    )
    return RankFunction(vals, f"theta^({_label(a, model)})", ("upper", a))


def theta_lower(a: FormalObject, model: Model) -> RankFunction:
    """X -> sum_i dim Hom(A, Sigma^i X)."""
    _require_lf(model)
    vals = tuple(
        sum(model.total_hom(c, x) for c, _ in a.summands) for x in range(model.size)
    )
    return RankFunction(vals, f"theta_({_label(a, model)})", ("lower", a))


def _label(a: FormalObject, model: Model) -> str:
    if a.is_zero():
        return "0"
    return "+".join(model.classes[c].name + (f"[{s}]" if s else "") for c, s in a.summands)


def kernel(rho: RankFunction, model: Model) -> int:
    """Mask of classes with rho = 0, checked to be thick (and perp_left(A) for theta^A)."""
    mask = 0
    for i, v in enumerate(rho.values):
        if v == 0:
            mask |= 1 << i
    if model.mode == LOCALLY_FINITE and thick_closure(mask, model) != mask:
        raise AxiomViolation(f"kernel of {rho.label} is not thick")
    if rho.source and rho.source[0] == "upper":
        expected = perp_left(rho.source[1].mask(), model)
        if expected != mask:
            raise AxiomViolation(f"kernel of {rho.label} differs from the left perpendicular")
    return mask


@dataclass
class AxiomReport:
    checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_axioms(rho: RankFunction, triangles: Sequence[Triangle], model: Model) -> AxiomReport:
    """Check the rank-function axioms on the supplied triangles.

    Additivity holds by construction (values live on classes and are summed
    over summands).  Shift invariance is checked on every triangle term, and
    subadditivity on all three rotations of each triangle.
    """
    known = set(model.triangles)
    violations = []
    if len(rho.values) != model.size:
        raise UsageError("rank function does not match the model")
    for i, v in enumerate(rho.values):
        if not isinstance(v, int) or v < 0:
            violations.append(f"value on {model.classes[i].name} is {v!r}")
    if rho(FormalObject()) != 0:
        violations.append("value on 0 is not 0")
    for t in triangles:
        if t not in known:
            raise UsageError(f"triangle {t.label or t} is not among the model's verified triangles")
        x, y, z = rho(t.x), rho(t.y), rho(t.z)
        # rotations: X->Y->Z, Y->Z->SX, Z->SX->SY
        for name, mid, a, b in (("Y", y, x, z), ("Z", z, y, x), ("X", x, z, y)):
            if mid > a + b:
                violations.append(f"{t.label}: rho({name}) = {mid} > {a} + {b}")
        for part in (t.x, t.y, t.z):
            if rho(part) != rho(part.shifted(1)):
                violations.append(f"{t.label}: shift changes the value")
    return AxiomReport(len(triangles), violations)


def gcd_reduced(rho: RankFunction) -> RankFunction:
    g = reduce(gcd, rho.values, 0)
    if g <= 1:
        return rho
    return RankFunction(tuple(v // g for v in rho.values), rho.label, rho.source)


def irreducible_candidates(model: Model) -> list[RankFunction]:
    """One candidate per class: theta^X divided by the gcd of its values."""
    _require_lf(model)
    return [gcd_reduced(theta_upper(FormalObject.of(c.id), model)) for c in model.classes]


@dataclass
class Decomposition:
    multiplicities: dict[int, int] | None  # candidate index -> multiplicity

    @property
    def ok(self) -> bool:
        return self.multiplicities is not None


def _solve_unique(cands: list[RankFunction], target: Sequence[int]) -> tuple[bool, list[Fraction] | None]:
    """Solve sum n_j cand_j = target over Q. Returns (unique, solution)."""
    m = len(cands)
    rows = [[Fraction(c.values[i]) for c in cands] + [Fraction(target[i])] for i in range(len(target))]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in rows):
        return True, None
    if len(pivots) < m:
        return False, None
    sol = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return True, sol


def decompose(rho: RankFunction, model: Model, candidates: list[RankFunction] | None = None) -> Decomposition:
    """Nonnegative integer multiplicities n with rho = sum n_X candidate_X, or failure."""
    cands = candidates if candidates is not None else irreducible_candidates(model)
    unique, sol = _solve_unique(cands, rho.values)
    if unique:
        if sol is None or any(v.denominator != 1 or v < 0 for v in sol):
            return Decomposition(None)
        return Decomposition({j: int(v) for j, v in enumerate(sol) if v})
    # dependent candidates: bounded search in canonical order
    bound = max(rho.values, default=0)
    if (bound + 1) ** len(cands) > (1 << guard_bits()):
        raise GuardError(f"decomposition search over {(bound + 1) ** len(cands)} combinations exceeds the guard")
    for combo in product(range(bound + 1), repeat=len(cands)):
        vals = [sum(n * c.values[i] for n, c in zip(combo, cands)) for i in range(model.size)]
        if vals == list(rho.values):
            return Decomposition({j: n for j, n in enumerate(combo) if n})
    return Decomposition(None)


def recombine(dec: Decomposition, cands: list[RankFunction], model: Model) -> RankFunction:
    acc = zero(model)
    for j, n in (dec.multiplicities or {}).items():
        acc = acc + cands[j].scaled(n)
    return RankFunction(acc.values, "sum")
