"""Make every basis inside S0 maximum (IM-All), or exactly those (IM-Only)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .exists import solve_exists_reduction
from .greedy import Weighting, _only_ok, as_weighting, ceil_fraction
from .matroid import Matroid, connected_components

__all__ = ["HomogenizationPlan", "AllCertificate", "homogenize", "solve_all", "solve_all_integral", "solve_only"]


@dataclass(frozen=True)
class HomogenizationPlan:
    """Per-component data of the homogenization step on the restriction to S0.

    Each component is flattened to its midpoint, then lifted by ``shifts[i]``
    so that every component moves by exactly ``rho`` from its lightest
    element; elements outside S0 are lowered by ``rho``.
    """

    components: tuple[frozenset[int], ...]
    delta_max: tuple[Fraction, ...]
    delta_min: tuple[Fraction, ...]
    midpoints: tuple[Fraction, ...]
    shifts: tuple[Fraction, ...]
    rho: Fraction
    homogenized: Weighting


@dataclass(frozen=True)
class AllCertificate:
    plan: HomogenizationPlan | None
    delta_phase2: Fraction
    delta_star: Fraction


def homogenize(m: Matroid, s0: Iterable[int], w) -> HomogenizationPlan:
    s0 = m.subset(s0)
    w = as_weighting(w)
    comps = tuple(connected_components(m, s0))
    hi = tuple(max(w[s] for s in c) for c in comps)
    lo = tuple(min(w[s] for s in c) for c in comps)
    mids = tuple((a + b) / 2 for a, b in zip(hi, lo))
    rho = max((a - mid for a, mid in zip(hi, mids)), default=Fraction(0))
    shifts = tuple(rho - (a - mid) for a, mid in zip(hi, mids))
    vals = [w[s] - rho for s in range(m.n)]
    for c, mid, sh in zip(comps, mids, shifts):
        for s in c:
            vals[s] = mid + sh
    return HomogenizationPlan(comps, hi, lo, mids, shifts, rho, Weighting(tuple(vals)))


def solve_all(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, AllCertificate]:
    """Two phases: homogenize each component of the restriction to S0, then
    raise S0 against the rest by the IM-Exists optimum of the flattened weights."""
    s0 = m.subset(s0)
    w = as_weighting(w)
    if m.find_basis(s0) is None:
        return w, AllCertificate(None, Fraction(0), Fraction(0))
    plan = homogenize(m, s0, w)
    _, cert = solve_exists_reduction(m, s0, plan.homogenized)
    delta = cert.delta_star
    w_star = plan.homogenized.structured(s0, delta)
    return w_star, AllCertificate(plan, delta, plan.rho + delta)


def _normal_form(m, w, components, delta, integral):
    """Each component at (its lightest weight + delta), the rest at w - delta."""
    vals = [w[s] - delta for s in range(m.n)]
    for c in components:
        top = min(w[s] for s in c) + delta
        for s in c:
            vals[s] = top
    return Weighting(tuple(vals), integral)


def solve_all_integral(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    """Integral IM-All.

    The fractional optimum d* comes from :func:`solve_all`; the integral
    optimum is ceil(d*), realised by putting every component of the
    restriction at its lightest weight plus that value and lowering
    everything outside S0 by the same amount.
    """
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    _, cert = solve_all(m, s0, w)
    if cert.plan is None:
        return w, Fraction(0)
    delta = ceil_fraction(cert.delta_star)
    return _normal_form(m, w, cert.plan.components, delta, True), delta


def solve_only(m: Matroid, s0: Iterable[int], w) -> tuple[Weighting, Fraction]:
    """Integral IM-Only: the integral IM-All answer, or that answer shifted by
    one (+1 on S0, -1 elsewhere) when some basis outside S0 still ties."""
    s0 = m.subset(s0)
    w = as_weighting(w, integral=True)
    if m.find_basis(s0) is None:
        raise PreconditionError("im-only: S0 contains no basis")
    w_all, delta = solve_all_integral(m, s0, w)
    if _only_ok(m, s0, w_all):
        return w_all, delta
    return w_all.structured(s0, 1, True), delta + 1
