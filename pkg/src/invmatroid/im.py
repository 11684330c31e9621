"""Inverse matroid under the l-infinity norm: make a fixed basis maximum."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .greedy import Weighting, as_weighting, ceil_fraction, greedy_basis
from .matroid import Matroid

__all__ = ["ImCertificate", "solve_im", "solve_im_integral", "im_optimum", "minmax_value"]


@dataclass(frozen=True)
class ImCertificate:
    """``delta_star = (w(f) - w(e)) / 2`` and ``witness_basis = B* + f - e``
    whenever the optimum is positive."""

    delta_star: Fraction
    pair: tuple[int, int] | None = None
    witness_basis: frozenset[int] | None = None


def _require_basis(m: Matroid, b: frozenset[int]) -> None:
    if not m.is_basis(b):
        raise PreconditionError("the fixed set is not a basis of the matroid")


def im_optimum(m: Matroid, b_star: Iterable[int], b_max: Iterable[int], w) -> ImCertificate:
    """Optimum value given the fixed basis and one maximum-weight basis.

    Uses at most ``|B_max - B*| * ceil(log2 r)`` independence queries: one
    binary search over the prefixes of B* (sorted by decreasing weight) per
    element of ``B_max - B*``.
    """
    w = as_weighting(w)
    b_star, b_max = frozenset(b_star), frozenset(b_max)
    if w.weight(b_max) <= w.weight(b_star):
        return ImCertificate(Fraction(0))
    order = sorted(b_star, key=lambda s: (-w[s], s))
    best: tuple[Fraction, int, int] | None = None
    for f in sorted(b_max - b_star):
        # smallest i such that f is spanned by order[:i]; i = r always works
        lo, hi = 1, len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            if m._independent(frozenset(order[:mid]) | {f}):
                lo = mid + 1
            else:
                hi = mid
        e = order[lo - 1]
        gap = w[f] - w[e]
        if gap > 0 and (best is None or gap > best[0]):
            best = (gap, f, e)
    if best is None:
        return ImCertificate(Fraction(0))
    gap, f, e = best
    return ImCertificate(gap / 2, (f, e), (b_star - {e}) | {f})


def solve_im(m: Matroid, b_star: Iterable[int], w) -> tuple[Weighting, ImCertificate]:
    """Closest weighting (l-infinity) under which ``b_star`` is a maximum-weight basis.

    The answer has the form ``w + d`` on ``b_star`` and ``w - d`` elsewhere,
    with ``d`` the optimum value.
    """
    b_star = m.subset(b_star)
    w = as_weighting(w)
    _require_basis(m, b_star)
    b_max = greedy_basis(m, w)
    cert = im_optimum(m, b_star, b_max, w)
    return w.structured(b_star, cert.delta_star), cert


def solve_im_integral(m: Matroid, b_star: Iterable[int], w) -> tuple[Weighting, Fraction]:
    w = as_weighting(w, integral=True)
    b_star = m.subset(b_star)
    _, cert = solve_im(m, b_star, w)
    delta = ceil_fraction(cert.delta_star)
    return w.structured(b_star, delta, integral=True), delta


def minmax_value(m: Matroid, b_star: Iterable[int], w, mode: str = "all", max_enum: int = 12) -> Fraction:
    """Max of 0 and ``(w(B) - w(B*)) / |B ^ B*|`` over competing bases B.

    ``mode="all"`` enumerates every basis; ``mode="diff2"`` looks only at the
    single exchanges ``B* - e + f`` read off the fundamental circuits.
    """
    b_star = m.subset(b_star)
    w = as_weighting(w)
    _require_basis(m, b_star)
    best = Fraction(0)
    if mode == "all":
        from .oracle import enumerate_bases

        base_w = w.weight(b_star)
        for b in enumerate_bases(m, max_enum).bases:
            if b != b_star:
                best = max(best, (w.weight(b) - base_w) / len(b ^ b_star))
    elif mode == "diff2":
        for f in range(m.n):
            if f in b_star:
                continue
            for e in m.fundamental_circuit(b_star, f) - {f}:
                best = max(best, (w[f] - w[e]) / 2)
    else:
        raise ValueError(f"mode must be 'all' or 'diff2', not {mode!r}")
    return best
