"""Brute-force ground truth for small instances.

Feasibility here is decided only by listing every basis and applying the
problem definitions; no greedy run is involved. The search over weightings
is limited to the structured families each problem is known to have an
optimum in (uniform shifts around S0, around a basis B0 inside S0, or the
per-component normal form), with every breakpoint of the pairwise basis
comparisons as a candidate value.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import networkx as nx

from .errors import CapacityError, PreconditionError
from .greedy import Variant, Weighting, as_weighting
from .matroid import Matroid

__all__ = [
    "BasisList",
    "enumerate_bases",
    "circuits",
    "components_by_circuits",
    "feasible_by_enumeration",
    "brute_im",
    "brute_exists",
    "brute_all",
    "brute_only",
    "brute_relaxed",
    "brute_not_exists",
    "brute_not_all",
    "brute_not_only",
    "brute_optimum",
]

DEFAULT_MAX_ENUM = 12


@dataclass(frozen=True)
class BasisList:
    bases: tuple[frozenset[int], ...]
    rank: int

    def split(self, s0: Iterable[int]) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
        s0 = frozenset(s0)
        inside = [b for b in self.bases if b <= s0]
        outside = [b for b in self.bases if not b <= s0]
        return inside, outside


def _guard(m: Matroid, max_enum: int) -> None:
    if m.n > max_enum:
        raise CapacityError(f"ground set of size {m.n} exceeds the enumeration bound {max_enum}")


def enumerate_bases(m: Matroid, max_enum: int = DEFAULT_MAX_ENUM) -> BasisList:
    """Every basis, found by testing all subsets of the largest independent size."""
    _guard(m, max_enum)
    ground = range(m.n)
    level = [frozenset()]
    r = 0
    for k in range(1, m.n + 1):
        nxt = [frozenset(c) for c in itertools.combinations(ground, k) if m._independent(frozenset(c))]
        if not nxt:
            break
        level, r = nxt, k
    return BasisList(tuple(sorted(level, key=sorted)), r)


def circuits(m: Matroid, within: Iterable[int] | None = None, max_enum: int = DEFAULT_MAX_ENUM) -> list[frozenset[int]]:
    """All minimal dependent subsets of ``within`` (default: whole ground set)."""
    _guard(m, max_enum)
    pool = sorted(range(m.n) if within is None else frozenset(within))
    found = []
    for k in range(1, len(pool) + 1):
        for c in itertools.combinations(pool, k):
            c = frozenset(c)
            if any(prev <= c for prev in found):
                continue
            if not m._independent(c):
                found.append(c)
    return found


def components_by_circuits(m: Matroid, within: Iterable[int] | None = None, max_enum: int = DEFAULT_MAX_ENUM) -> list[frozenset[int]]:
    """Components straight from the definition: elements sharing a circuit."""
    pool = sorted(range(m.n) if within is None else frozenset(within))
    g = nx.Graph()
    g.add_nodes_from(pool)
    for c in circuits(m, pool, max_enum):
        c = sorted(c)
        g.add_edges_from(zip(c, c[1:]))
    return sorted((frozenset(c) for c in nx.connected_components(g)), key=min)


def feasible_by_enumeration(bl: BasisList, s0: Iterable[int], w, variant: Variant) -> bool:
    """Apply the problem definition to the full list of bases.

    For ``Variant.IM`` the set ``s0`` is the fixed basis.
    """
    s0 = frozenset(s0)
    w = as_weighting(w)
    weights = {b: w.weight(b) for b in bl.bases}
    top = max(weights.values())
    inside = [b for b in bl.bases if b <= s0]
    outside = [b for b in bl.bases if not b <= s0]
    not_all = any(weights[b] < top for b in inside)
    relaxed = any(weights[b] == top for b in outside)
    v = Variant(variant)
    if v is Variant.IM:
        return w.weight(s0) == top
    if v is Variant.IM_EXISTS:
        return any(weights[b] == top for b in inside)
    if v is Variant.IM_ALL:
        return not not_all
    if v is Variant.IM_ONLY:
        return bool(inside) and not not_all and not relaxed
    if v is Variant.IM_NOT_EXISTS:
        return all(weights[b] < top for b in inside)
    if v is Variant.RELAXED_NOT_EXISTS:
        return relaxed
    if v is Variant.IM_NOT_ALL:
        return not_all
    if v is Variant.IM_NOT_ONLY:
        return not_all or relaxed
    raise ValueError(variant)


def _first_feasible(bl, s0, variant, candidates, make: Callable[[Fraction], Weighting]) -> Fraction | None:
    for d in sorted(set(candidates)):
        if feasible_by_enumeration(bl, s0, make(d), variant):
            return d
    return None


def _shift_over(w: Weighting, raised: frozenset[int]) -> Callable[[Fraction], Weighting]:
    return lambda d: w.structured(raised, d)


def _int_candidates(thresholds: Iterable[Fraction]) -> set[Fraction]:
    out = {Fraction(0)}
    for t in thresholds:
        if t >= 0:
            out.add(Fraction(math.floor(t) + 1))
            out.add(Fraction(math.ceil(t)))
    return out


def _im_value(bl, b_star, w) -> Fraction:
    base = w.weight(b_star)
    best = Fraction(0)
    for b in bl.bases:
        if b != b_star:
            best = max(best, (w.weight(b) - base) / len(b ^ b_star))
    return best


def _bases(m, max_enum):
    return enumerate_bases(m, max_enum)


def brute_im(m: Matroid, b_star: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    b_star = m.subset(b_star)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    if b_star not in bl.bases:
        raise PreconditionError("the fixed set is not a basis")
    return _im_value(bl, b_star, w)


def brute_exists(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    inside, _ = bl.split(s0)
    if not inside:
        raise PreconditionError("im-exists: S0 contains no basis")
    return min(_im_value(bl, b0, w) for b0 in inside)


def _normal_form_family(m, s0, w, max_enum):
    """Component normal form on S0 (lightest + d), w - d outside."""
    comps = components_by_circuits(m, s0, max_enum)
    floor_of = {}
    for c in comps:
        low = min(w[s] for s in c)
        for s in c:
            floor_of[s] = low
    rho = max(((max(w[s] for s in c) - min(w[s] for s in c)) / 2 for c in comps), default=Fraction(0))

    def make(d):
        return Weighting(tuple(floor_of[s] + d if s in s0 else w[s] - d for s in range(m.n)))

    return rho, make


def _all_thresholds(bl, s0, make):
    # weight of B under make(d) is affine in d: evaluate at d = 0 and d = 1
    inside, outside = bl.split(s0)
    w0, w1 = make(Fraction(0)), make(Fraction(1))
    out = []
    for b in outside:
        for b0 in inside:
            slope = (w1.weight(b0) - w0.weight(b0)) - (w1.weight(b) - w0.weight(b))
            gap = w0.weight(b) - w0.weight(b0)
            if slope > 0:
                out.append(gap / slope)
    return out


def brute_all(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    inside, _ = bl.split(s0)
    if not inside:
        return Fraction(0)
    rho, make = _normal_form_family(m, s0, w, max_enum)
    cands = [rho] + [t for t in _all_thresholds(bl, s0, make) if t >= rho]
    found = _first_feasible(bl, s0, Variant.IM_ALL, cands, make)
    if found is None:
        raise AssertionError("no candidate in the normal-form family is feasible")
    return found


def brute_only(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    inside, _ = bl.split(s0)
    if not inside:
        raise PreconditionError("im-only: S0 contains no basis")
    rho, make = _normal_form_family(m, s0, w, max_enum)
    low = Fraction(math.ceil(rho))
    cands = [d for d in _int_candidates(_all_thresholds(bl, s0, make)) if d >= low] + [low]
    found = _first_feasible(bl, s0, Variant.IM_ONLY, cands, make)
    if found is None:
        raise AssertionError("no candidate in the normal-form family is feasible")
    return found


def _s0_thresholds(bl, s0, w):
    """Breakpoints where an outside basis catches up with an inside one
    under ``w - d`` on S0, ``w + d`` elsewhere."""
    inside, outside = bl.split(s0)
    out = []
    for b in outside:
        k = len(b - s0)
        for b0 in inside:
            out.append((w.weight(b0) - w.weight(b)) / (2 * k))
    return out


def _lowered_family(m, s0, w):
    return _shift_over(w, frozenset(range(m.n)) - s0)


def _require_outside(bl, s0, name):
    _, outside = bl.split(s0)
    if not outside:
        raise PreconditionError(f"{name}: all bases lie inside S0")


def brute_relaxed(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    _require_outside(bl, s0, "relaxed-not-exists")
    cands = [Fraction(0)] + [t for t in _s0_thresholds(bl, s0, w) if t >= 0]
    return _first_feasible(bl, s0, Variant.RELAXED_NOT_EXISTS, cands, _lowered_family(m, s0, w))


def brute_not_exists(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    _require_outside(bl, s0, "im-not-exists")
    cands = _int_candidates(_s0_thresholds(bl, s0, w))
    return _first_feasible(bl, s0, Variant.IM_NOT_EXISTS, cands, _lowered_family(m, s0, w))


def _not_all_family_min(m, bl, s0, w, variant) -> Fraction | None:
    inside, _ = bl.split(s0)
    best = None
    for b0 in inside:
        ts = [(w.weight(b0) - w.weight(b)) / len(b ^ b0) for b in bl.bases if b != b0]
        make = _shift_over(w, frozenset(range(m.n)) - b0)
        d = _first_feasible(bl, s0, variant, _int_candidates(ts), make)
        if d is not None and (best is None or d < best):
            best = d
    return best


def brute_not_all(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    inside, _ = bl.split(s0)
    if not inside:
        raise PreconditionError("im-not-all: S0 contains no basis")
    if len(bl.bases) < 2:
        raise PreconditionError("im-not-all: the matroid has a single basis")
    return _not_all_family_min(m, bl, s0, w, Variant.IM_NOT_ALL)


def brute_not_only(m: Matroid, s0: Iterable[int], w, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    s0 = m.subset(s0)
    w = as_weighting(w)
    bl = _bases(m, max_enum)
    inside, outside = bl.split(s0)
    results = []
    if inside and len(bl.bases) >= 2:
        results.append(_not_all_family_min(m, bl, s0, w, Variant.IM_NOT_ONLY))
    if outside:
        cands = _int_candidates(_s0_thresholds(bl, s0, w))
        results.append(_first_feasible(bl, s0, Variant.IM_NOT_ONLY, cands, _lowered_family(m, s0, w)))
    results = [r for r in results if r is not None]
    if not results:
        raise PreconditionError("im-not-only: the matroid has a single basis and it lies inside S0")
    return min(results)


_BRUTE = {
    Variant.IM: brute_im,
    Variant.IM_EXISTS: brute_exists,
    Variant.IM_ALL: brute_all,
    Variant.IM_ONLY: brute_only,
    Variant.IM_NOT_EXISTS: brute_not_exists,
    Variant.RELAXED_NOT_EXISTS: brute_relaxed,
    Variant.IM_NOT_ALL: brute_not_all,
    Variant.IM_NOT_ONLY: brute_not_only,
}


def brute_optimum(m: Matroid, s0: Iterable[int], w, variant: Variant, integral: bool = False, max_enum: int = DEFAULT_MAX_ENUM) -> Fraction:
    """Optimum value of ``variant`` by enumeration; ``integral`` rounds up the
    fractional problems (their integral optimum is the ceiling)."""
    v = Variant(variant)
    value = _BRUTE[v](m, s0, w, max_enum)
    if integral and not v.integral_only:
        value = Fraction(math.ceil(value))
    return value
