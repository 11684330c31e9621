"""Make S0 contain at least one maximum-weight basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .greedy import PLAIN, Weighting, _exists_ok, as_weighting, ceil_fraction, greedy_basis
from .im import solve_im
from .matroid import Matroid

__all__ = [
    "ExistsCertificate",
    "solve_exists_binary",
    "solve_exists_reduction",
    "solve_exists",
    "solve_exists_integral",
    "check_exists_feasible_closure",
]


@dataclass(frozen=True)
class ExistsCertificate:
    """``basis_in_s0`` is a maximum-weight basis inside S0 for the output.

    When the optimum is positive, ``triple = (B0, e, f)`` has f outside S0,
    e in S0 on the circuit C(B0, f) and ``w(f) - w(e) = 2 * delta_star``.
    """

    delta_star: Fraction
    basis_in_s0: frozenset[int]
    triple: tuple[frozenset[int], int, int] | None = None


def _prepare(m: Matroid, s0, w) -> tuple[frozenset[int], Weighting]:
    s0 = m.subset(s0)
    w = as_weighting(w)
    if m.find_basis(s0) is None:
        raise PreconditionError("im-exists: S0 contains no basis")
    return s0, w


def _find_triple(m, s0, w, b0, delta):
    if delta == 0:
        return None
    for f in range(m.n):
        if f in s0:
            continue
        for e in sorted(m.fundamental_circuit(b0, f) & s0):
            if w[f] - w[e] == 2 * delta:
                return (b0, e, f)
    return None


def candidate_deltas(w: Weighting, tops: Iterable[int], bottoms: Iterable[int]) -> list[Fraction]:
    """Sorted distinct positive values ``(w(a) - w(b)) / 2`` for a in ``tops``,
    b in ``bottoms``, with 0 prepended."""
    vals = {Fraction(0)}
    bottoms = list(bottoms)
    for a in tops:
        for b in bottoms:
            d = (w[a] - w[b]) / 2
            if d > 0:
                vals.add(d)
    return sorted(vals)


def least_feasible(candidates: list[Fraction], feasible) -> Fraction:
    """Binary search for the first candidate passing a monotone predicate.

    The last candidate is assumed feasible and is not probed.
    """
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return candidates[lo]


def solve_exists_binary(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, ExistsCertificate]:
    """Binary search over the half-gaps between elements outside and inside S0."""
    s0, w = _prepare(m, s0, w)
    outside = [s for s in range(m.n) if s not in s0]
    if not outside:
        return w, ExistsCertificate(Fraction(0), greedy_basis(m, w, within=s0))
    # threshold values are (w(f) - w(e)) / 2 with f outside S0 and e inside
    cands = candidate_deltas(w, outside, sorted(s0))
    delta = least_feasible(cands, lambda d: _exists_ok(m, s0, w.structured(s0, d)))
    w_star = w.structured(s0, delta)
    b0 = greedy_basis(m, w_star, PLAIN, "max", s0)
    return w_star, ExistsCertificate(delta, b0, _find_triple(m, s0, w, b0, delta))


def solve_exists_reduction(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, ExistsCertificate]:
    """Inverse matroid for the heaviest basis inside S0."""
    s0, w = _prepare(m, s0, w)
    b0 = greedy_basis(m, w, PLAIN, "max", s0)
    w_star, cert = solve_im(m, b0, w)
    triple = None
    if cert.pair is not None:
        f, e = cert.pair
        triple = (b0, e, f)
    return w_star, ExistsCertificate(cert.delta_star, b0, triple)


def solve_exists(m: Matroid, s0: Iterable[int], w, method: str = "reduction"):
    if method == "reduction":
        return solve_exists_reduction(m, s0, w)
    if method == "binary":
        return solve_exists_binary(m, s0, w)
    raise ValueError(f"method must be 'reduction' or 'binary', not {method!r}")


def solve_exists_integral(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    s0, w = _prepare(m, s0, as_weighting(w, integral=True))
    _, cert = solve_exists_reduction(m, s0, w)
    delta = ceil_fraction(cert.delta_star)
    return w.structured(s0, delta, integral=True), delta


def check_exists_feasible_closure(m: Matroid, s0: Iterable[int], w) -> bool:
    """Every e outside S0 is spanned by the elements of S0 at least as heavy as e."""
    s0, w = _prepare(m, s0, w)
    for e in range(m.n):
        if e in s0:
            continue
        heavier = [f for f in s0 if w[e] <= w[f]]
        if e not in m.closure(heavier):
            return False
    return True
