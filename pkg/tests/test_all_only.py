import math
import time
from fractions import Fraction as F

import pytest

from invmatroid import (
    DirectSum,
    PreconditionError,
    Restriction,
    Uniform,
    Variant,
    Weighting,
    check_feasible,
    connected_components,
    enumerate_bases,
    homogenize,
    solve_all,
    solve_all_integral,
    solve_exists_reduction,
    solve_only,
)
from invmatroid.oracle import brute_optimum

from conftest import FIG1_WH, FIG1_WSTAR
from pool import pool


def test_fig1_pipeline(fig1):
    t0 = time.perf_counter()
    w_star, cert = solve_all(fig1.m, fig1.s0, fig1.w)
    elapsed = time.perf_counter() - t0
    plan = cert.plan
    assert plan.components == (fig1.ids("ac", "ae", "ce"), fig1.ids("cd"), fig1.ids("db", "df", "bf"))
    assert plan.midpoints == (F(1, 2), F(6), F(7, 2))
    assert plan.rho == F(5, 2)
    assert plan.shifts == (F(2), F(5, 2), F(0))
    assert fig1.by_name(plan.homogenized) == FIG1_WH
    assert cert.delta_phase2 == 1
    assert cert.delta_star == F(7, 2)
    assert fig1.by_name(w_star) == FIG1_WSTAR
    assert elapsed < 1.0


def test_no_basis_in_s0():
    w = Weighting((1, 2, 3))
    w_star, cert = solve_all(Uniform(3, 2), {0}, w)
    assert w_star == w and cert.delta_star == 0 and cert.plan is None
    w_int, d = solve_all_integral(Uniform(3, 2), {0}, w)
    assert w_int.values == w.values and d == 0


def test_pair_example():
    w_star, cert = solve_all(Uniform(2, 1), {0, 1}, (4, 0))
    assert cert.plan.components == (frozenset({0, 1}),)
    assert cert.plan.midpoints == (2,) and cert.plan.rho == 2
    assert cert.delta_phase2 == 0 and cert.delta_star == 2
    assert w_star.values == (2, 2)


@pytest.mark.parametrize("w, expect", [((4, 0), 2), ((3, 0), 2)])
def test_integral_pair(w, expect):
    w_star, d = solve_all_integral(Uniform(2, 1), {0, 1}, w)
    assert d == expect and w_star.values == (2, 2)


def test_only_examples():
    u = Uniform(2, 1)
    w_star, d = solve_only(u, {0}, (0, 0))
    assert d == 1 and w_star.values == (1, -1)
    w_star, d = solve_only(u, {0}, (1, 0))
    assert d == 0 and w_star.values == (1, 0)
    w_star, d = solve_only(Uniform(3, 2), {0, 1}, (1, 1, 1))
    assert d == 1 and w_star.values == (2, 2, 0)
    with pytest.raises(PreconditionError):
        solve_only(u, set(), (0, 0))


def test_plan_invariants():
    for c in pool(Variant.IM_ALL):
        m, s0, w = c.matroid, c.s0, c.w
        if m.find_basis(s0) is None:
            continue
        plan = homogenize(m, s0, w)
        if not plan.components:
            assert plan.rho == 0
            continue
        for hi, lo, mid in zip(plan.delta_max, plan.delta_min, plan.midpoints):
            assert mid == (hi + lo) / 2
        assert all(s >= 0 for s in plan.shifts) and min(plan.shifts) == 0
        pairs = [abs(w[a] - w[b]) / 2 for comp in plan.components for a in comp for b in comp]
        assert plan.rho == max(pairs)
        w_star, cert = solve_all(m, s0, w)
        assert cert.delta_star == plan.rho + cert.delta_phase2 >= plan.rho
        inside = [b for b in enumerate_bases(Restriction(m, s0)).bases]
        r = Restriction(m, s0)
        for weights in (plan.homogenized, w_star):
            assert len({weights.weight(r.elements[i] for i in b) for b in inside}) == 1
        for comp in plan.components:
            assert len({w_star[s] for s in comp}) == 1
        for s in m.ground - s0:
            assert w_star[s] - w[s] == -cert.delta_star
        assert check_feasible(m, s0, w_star, Variant.IM_ALL)


def test_integral_normal_form():
    for c in pool(Variant.IM_ALL):
        m, s0, w = c.matroid, c.s0, c.w
        w_int, d = solve_all_integral(m, s0, w)
        assert w_int.is_integer and w.distance(w_int) == d
        assert check_feasible(m, s0, w_int, Variant.IM_ALL)
        if m.find_basis(s0) is None:
            continue
        for comp in connected_components(m, s0):
            assert max(w_int[s] - w[s] for s in comp) == d
        assert all(w_int[s] - w[s] == -d for s in m.ground - s0)


def test_only_is_all_or_shift():
    for c in pool(Variant.IM_ONLY):
        m, s0 = c.matroid, c.s0
        w_all, d_all = solve_all_integral(m, s0, c.w)
        w_only, d = solve_only(m, s0, c.w)
        assert d in (d_all, d_all + 1)
        if d == d_all:
            assert w_only.values == w_all.values
        else:
            assert w_only.values == w_all.structured(s0, 1).values
        assert check_feasible(m, s0, w_only, Variant.IM_ONLY)


def literal_rounding(m, s0, w):
    """Integral IM-All with the midpoints and Phase-2 value each rounded up;
    returns the deviation that weighting actually has."""
    comps = connected_components(m, s0)
    hi = [max(w[s] for s in c) for c in comps]
    mids = [math.ceil((max(w[s] for s in c) + min(w[s] for s in c)) / 2) for c in comps]
    rho = max(a - b for a, b in zip(hi, mids))
    vals = [w[s] - rho for s in range(m.n)]
    for c, a, mid in zip(comps, hi, mids):
        for s in c:
            vals[s] = mid + rho - (a - mid)
    wh = Weighting(tuple(vals))
    _, cert = solve_exists_reduction(m, s0, wh)
    out = wh.structured(s0, math.ceil(cert.delta_star))
    assert check_feasible(m, s0, out, Variant.IM_ALL)
    return w.distance(out)


def test_rounding_each_phase_separately_overshoots():
    # {a1, a2} one component with weights 3 and 0; b in S0 competes with x
    m = DirectSum([Uniform(2, 1), Uniform(2, 1)])
    s0, w = {0, 1, 2}, Weighting((3, 0, 0, 4))
    assert literal_rounding(m, s0, w) == 3
    _, d = solve_all_integral(m, s0, w)
    assert d == 2
    assert brute_optimum(m, s0, w, Variant.IM_ALL, integral=True) == 2
