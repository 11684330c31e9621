"""Weightings, greedy max/min-weight bases and per-problem feasibility checks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IntegralityError, MalformedInputError, PreconditionError
from .matroid import Matroid

__all__ = [
    "Weighting",
    "as_weighting",
    "TieBreak",
    "PLAIN",
    "Variant",
    "greedy_basis",
    "check_feasible",
    "check_preconditions",
    "contains_basis",
    "misses_some_basis",
    "has_two_bases",
]


@dataclass(frozen=True)
class Weighting:
    """Exact rational weight per element id."""

    values: tuple[Fraction, ...]
    integral: bool = False

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.integral and any(v.denominator != 1 for v in vals):
            raise IntegralityError("integral weighting has a non-integer value")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, s: int) -> Fraction:
        return self.values[s]

    def __iter__(self):
        return iter(self.values)

    def weight(self, x: Iterable[int]) -> Fraction:
        return sum((self.values[s] for s in x), Fraction(0))

    @property
    def is_integer(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def structured(self, raised: Iterable[int], delta, integral: bool = False) -> "Weighting":
        """``w + delta`` on ``raised`` and ``w - delta`` everywhere else.

        The result is flagged integral only when asked for."""
        raised = frozenset(raised)
        delta = Fraction(delta)
        vals = tuple(v + delta if s in raised else v - delta for s, v in enumerate(self.values))
        return Weighting(vals, integral)

    def distance(self, other: "Weighting | Sequence") -> Fraction:
        """l-infinity distance ``max_s |w(s) - other(s)|``."""
        other = as_weighting(other)
        if len(other) != len(self):
            raise MalformedInputError("weightings have different lengths")
        return max((abs(a - b) for a, b in zip(self.values, other.values)), default=Fraction(0))

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def as_weighting(w, integral: bool = False) -> Weighting:
    if isinstance(w, Weighting):
        if integral and not w.integral:
            return Weighting(w.values, True)
        return w
    return Weighting(tuple(w), integral)


def _require_length(m: Matroid, w: Weighting) -> None:
    if len(w) != m.n:
        raise MalformedInputError(f"weighting has {len(w)} entries, ground set has {m.n}")


@dataclass(frozen=True)
class TieBreak:
    """Order among equal weights: a preferred class, an optional secondary
    class, then ascending element id."""

    prefer: frozenset[int] | None = None
    inside: bool = True
    secondary: frozenset[int] | None = None

    @classmethod
    def prefer_inside(cls, x: Iterable[int], secondary: Iterable[int] | None = None) -> "TieBreak":
        return cls(frozenset(x), True, None if secondary is None else frozenset(secondary))

    @classmethod
    def prefer_outside(cls, x: Iterable[int], secondary: Iterable[int] | None = None) -> "TieBreak":
        return cls(frozenset(x), False, None if secondary is None else frozenset(secondary))

    def key(self, s: int) -> tuple[int, int, int]:
        first = 0 if self.prefer is None or (s in self.prefer) == self.inside else 1
        second = 0 if self.secondary is None or s in self.secondary else 1
        return first, second, s


PLAIN = TieBreak()


class Variant(str, enum.Enum):
    IM = "im"
    IM_EXISTS = "im-exists"
    IM_ALL = "im-all"
    IM_ONLY = "im-only"
    IM_NOT_EXISTS = "im-not-exists"
    RELAXED_NOT_EXISTS = "relaxed-not-exists"
    IM_NOT_ALL = "im-not-all"
    IM_NOT_ONLY = "im-not-only"

    @property
    def integral_only(self) -> bool:
        return self in _INTEGRAL_ONLY

    @classmethod
    def parse(cls, text: str) -> "Variant":
        key = text.strip().lower().replace("_", "-")
        for v in cls:
            if v.value == key or v.name.lower().replace("_", "-") == key:
                return v
        raise MalformedInputError(f"unknown problem tag {text!r}")


_INTEGRAL_ONLY = frozenset(
    {Variant.IM_ONLY, Variant.IM_NOT_EXISTS, Variant.IM_NOT_ALL, Variant.IM_NOT_ONLY}
)


def greedy_basis(
    m: Matroid,
    w,
    tb: TieBreak = PLAIN,
    sense: str = "max",
    within: Iterable[int] | None = None,
) -> frozenset[int]:
    """Greedy basis of ``m`` (restricted to ``within`` if given).

    Elements are scanned by decreasing weight for ``sense="max"`` and by
    increasing weight for ``"min"``; ties follow ``tb`` in both senses.
    """
    w = as_weighting(w)
    _require_length(m, w)
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', not {sense!r}")
    sign = -1 if sense == "max" else 1
    pool = range(m.n) if within is None else m.subset(within)
    order = sorted(pool, key=lambda s: (sign * w[s], tb.key(s)))
    return m._augment(order)


# -- structural preconditions ----------------------------------------------


def contains_basis(m: Matroid, s0: Iterable[int]) -> bool:
    return m.find_basis(s0) is not None


def misses_some_basis(m: Matroid, s0: Iterable[int]) -> bool:
    """True if some basis of ``m`` is not contained in ``s0``."""
    s0 = m.subset(s0)
    b = greedy_basis(m, [0] * m.n, TieBreak.prefer_outside(s0))
    return not b <= s0


def has_two_bases(m: Matroid) -> bool:
    b = m.find_basis()
    return any(not m.is_loop(f) for f in range(m.n) if f not in b)


def check_preconditions(m: Matroid, s0: Iterable[int], variant: Variant) -> None:
    """Raise PreconditionError naming the violated condition of the problem."""
    s0 = m.subset(s0)
    v = Variant(variant)
    if v is Variant.IM:
        if not m.is_basis(s0):
            raise PreconditionError("im: the fixed set is not a basis")
    elif v in (Variant.IM_EXISTS, Variant.IM_ONLY):
        if not contains_basis(m, s0):
            raise PreconditionError(f"{v.value}: S0 contains no basis")
    elif v in (Variant.IM_NOT_EXISTS, Variant.RELAXED_NOT_EXISTS):
        if not misses_some_basis(m, s0):
            raise PreconditionError(f"{v.value}: all bases lie inside S0")
    elif v is Variant.IM_NOT_ALL:
        if not contains_basis(m, s0):
            raise PreconditionError("im-not-all: S0 contains no basis")
        if not has_two_bases(m):
            raise PreconditionError("im-not-all: the matroid has a single basis")
    elif v is Variant.IM_NOT_ONLY:
        not_all_ok = contains_basis(m, s0) and has_two_bases(m)
        if not (not_all_ok or misses_some_basis(m, s0)):
            raise PreconditionError(
                "im-not-only: the matroid has a single basis and it lies inside S0"
            )


def check_integral(w: Weighting, variant: Variant) -> None:
    if Variant(variant).integral_only and not w.is_integer:
        raise IntegralityError(f"{Variant(variant).value} requires integer weights")


# -- feasibility, following the greedy recipes ---------------------------------


def _max_weight(m, w, within=None, tb=PLAIN):
    return w.weight(greedy_basis(m, w, tb, "max", within))


def _exists_ok(m, s0, w):
    return _max_weight(m, w, s0) == _max_weight(m, w)


def _all_ok(m, s0, w):
    if not contains_basis(m, s0):
        return True
    lo = w.weight(greedy_basis(m, w, PLAIN, "min", s0))
    hi = _max_weight(m, w, s0)
    return lo == hi and hi >= _max_weight(m, w)


def _only_ok(m, s0, w):
    return _all_ok(m, s0, w) and greedy_basis(m, w, TieBreak.prefer_outside(s0)) <= s0


def _not_exists_ok(m, s0, w):
    return not greedy_basis(m, w, TieBreak.prefer_inside(s0)) <= s0


def _relaxed_ok(m, s0, w):
    return not greedy_basis(m, w, TieBreak.prefer_outside(s0)) <= s0


def _not_all_ok(m, s0, w):
    if not contains_basis(m, s0):
        return False
    return w.weight(greedy_basis(m, w, PLAIN, "min", s0)) < _max_weight(m, w)


def _im_ok(m, b, w):
    return w.weight(b) == _max_weight(m, w)


_CHECKS = {
    Variant.IM: _im_ok,
    Variant.IM_EXISTS: _exists_ok,
    Variant.IM_ALL: _all_ok,
    Variant.IM_ONLY: _only_ok,
    Variant.IM_NOT_EXISTS: _not_exists_ok,
    Variant.RELAXED_NOT_EXISTS: _relaxed_ok,
    Variant.IM_NOT_ALL: _not_all_ok,
    Variant.IM_NOT_ONLY: lambda m, s0, w: _not_all_ok(m, s0, w) or _relaxed_ok(m, s0, w),
}


def check_feasible(m: Matroid, s0: Iterable[int], w, variant: Variant) -> bool:
    """Decide whether ``w`` meets the requirement of ``variant`` for ``s0``.

    For ``Variant.IM`` the set ``s0`` is the fixed basis.
    """
    s0 = m.subset(s0)
    w = as_weighting(w)
    _require_length(m, w)
    variant = Variant(variant)
    check_preconditions(m, s0, variant)
    return _CHECKS[variant](m, s0, w)


def ceil_fraction(x: Fraction) -> Fraction:
    return Fraction(math.ceil(x))
