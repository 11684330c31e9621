"""Negated problems: keep S0 from holding any / all / only maximum-weight bases.

All of these are posed over integer weights (the relaxed problem excepted),
since otherwise an optimum need not be attained.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .exists import candidate_deltas, least_feasible
from .greedy import (
    PLAIN,
    TieBreak,
    Weighting,
    _not_all_ok,
    _not_exists_ok,
    _relaxed_ok,
    as_weighting,
    ceil_fraction,
    contains_basis,
    greedy_basis,
    has_two_bases,
    misses_some_basis,
)
from .matroid import Matroid

__all__ = [
    "NotExistsCertificate",
    "NotAllCertificate",
    "solve_relaxed_not_exists",
    "solve_relaxed_not_exists_integral",
    "solve_not_exists",
    "solve_not_all",
    "solve_not_only",
]


@dataclass(frozen=True)
class NotExistsCertificate:
    relaxed_delta: Fraction
    chosen_delta: Fraction
    witness_basis_outside: frozenset[int]


@dataclass(frozen=True)
class NotAllCertificate:
    branch: str  # "already_feasible" | "decrement_basis" | "exchange_bound"
    basis_b0: frozenset[int] | None
    delta: Fraction
    pair: tuple[int, int] | None = None


def _lowered(w: Weighting, s0: frozenset[int], delta, integral=False) -> Weighting:
    """``w - delta`` on S0 and ``w + delta`` outside it."""
    n = len(w)
    return w.structured([s for s in range(n) if s not in s0], delta, integral)


def _require_outside_basis(m, s0, name):
    if not misses_some_basis(m, s0):
        raise PreconditionError(f"{name}: all bases lie inside S0")


def solve_relaxed_not_exists(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    """Least shift (down on S0, up outside) after which some maximum-weight
    basis leaves S0. Binary search over ``(w(e) - w(f)) / 2``, e in S0, f not."""
    s0 = m.subset(s0)
    w = as_weighting(w)
    _require_outside_basis(m, s0, "relaxed-not-exists")
    outside = [s for s in range(m.n) if s not in s0]
    cands = candidate_deltas(w, sorted(s0), outside)
    delta = least_feasible(cands, lambda d: _relaxed_ok(m, s0, _lowered(w, s0, d)))
    return _lowered(w, s0, delta), delta


def solve_relaxed_not_exists_integral(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    _, frac = solve_relaxed_not_exists(m, s0, w)
    delta = ceil_fraction(frac)
    return _lowered(w, s0, delta, True), delta


def solve_not_exists(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction, NotExistsCertificate]:
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    _require_outside_basis(m, s0, "im-not-exists")
    _, relaxed = solve_relaxed_not_exists(m, s0, w)
    if _not_exists_ok(m, s0, w):
        delta = Fraction(0)
        w_star = w
    else:
        # covers the tie case too: relaxed == 0 there and one step suffices
        delta = ceil_fraction(relaxed)
        w_star = _lowered(w, s0, delta, True)
        if not _not_exists_ok(m, s0, w_star):
            delta += 1
            w_star = _lowered(w, s0, delta, True)
    witness = greedy_basis(m, w_star, TieBreak.prefer_inside(s0))
    return w_star, delta, NotExistsCertificate(relaxed, delta, witness)


def solve_not_all(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction, NotAllCertificate]:
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    if not contains_basis(m, s0):
        raise PreconditionError("im-not-all: S0 contains no basis")
    if not has_two_bases(m):
        raise PreconditionError("im-not-all: the matroid has a single basis")
    if _not_all_ok(m, s0, w):
        return w, Fraction(0), NotAllCertificate("already_feasible", None, Fraction(0))
    b0 = greedy_basis(m, w, PLAIN, "max", s0)
    rest = [s for s in range(m.n) if s not in b0]
    lowered = Weighting(tuple(v - 1 if s in b0 else v for s, v in enumerate(w)), True)
    if _not_all_ok(m, s0, lowered):
        return lowered, Fraction(1), NotAllCertificate("decrement_basis", b0, Fraction(1))
    best = None
    for f in rest:
        for e in sorted(m.fundamental_circuit(b0, f) - {f}):
            d = ceil_fraction((w[e] - w[f] + 1) / Fraction(2))
            if best is None or d < best[0]:
                best = (d, e, f)
    delta, e, f = best
    return (
        w.structured(b0, -delta, True),
        delta,
        NotAllCertificate("exchange_bound", b0, delta, (e, f)),
    )


def solve_not_only(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    """Best of the IM-Not-All answer and the integral relaxed answer; ties go
    to IM-Not-All."""
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    options = []
    if contains_basis(m, s0) and has_two_bases(m):
        w1, d1, _ = solve_not_all(m, s0, w)
        options.append((d1, w1))
    if misses_some_basis(m, s0):
        w2, d2 = solve_relaxed_not_exists_integral(m, s0, w)
        options.append((d2, w2))
    if not options:
        raise PreconditionError("im-not-only: the matroid has a single basis and it lies inside S0")
    delta, w_star = min(options, key=lambda o: o[0])
    return w_star, delta
