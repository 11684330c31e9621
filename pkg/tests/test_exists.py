import random
from fractions import Fraction as F

import pytest

from invmatroid import (
    PreconditionError,
    Uniform,
    Variant,
    Weighting,
    check_exists_feasible_closure,
    check_feasible,
    enumerate_bases,
    solve_exists,
    solve_exists_binary,
    solve_exists_integral,
    solve_exists_reduction,
)
from invmatroid.exists import candidate_deltas, least_feasible

from conftest import FIG1_WH, FIG1_WSTAR
from pool import pool

METHODS = [solve_exists_binary, solve_exists_reduction]


@pytest.mark.parametrize("solve", METHODS, ids=lambda f: f.__name__)
def test_fig1_phase2(fig1, solve):
    wh = Weighting(fig1.weights(FIG1_WH))
    w_star, cert = solve(fig1.m, fig1.s0, wh)
    assert cert.delta_star == 1
    if solve is solve_exists_binary:
        assert fig1.by_name(w_star) == FIG1_WSTAR


@pytest.mark.parametrize("solve", METHODS, ids=lambda f: f.__name__)
def test_small_examples(solve):
    w_star, cert = solve(Uniform(2, 1), {1}, (2, 1))
    assert cert.delta_star == F(1, 2)
    assert w_star.values == (F(3, 2), F(3, 2))
    # S0 already holds a maximum basis
    w = Weighting((3, 1, 0))
    w_star, cert = solve(Uniform(3, 2), {0, 1}, w)
    assert cert.delta_star == 0 and w_star == w
    _, cert = solve(Uniform(3, 2), {0, 1, 2}, (5, -1, 4))
    assert cert.delta_star == 0


def test_no_basis_in_s0():
    for solve in METHODS:
        with pytest.raises(PreconditionError, match="S0 contains no basis"):
            solve(Uniform(3, 2), {0}, (1, 1, 1))
    with pytest.raises(ValueError):
        solve_exists(Uniform(3, 2), {0, 1}, (1, 1, 1), method="simplex")


def test_integral_examples():
    w_star, d = solve_exists_integral(Uniform(2, 1), {1}, (2, 1))
    assert d == 1 and w_star.values == (1, 2)
    w_star, d = solve_exists_integral(Uniform(2, 1), {1}, (3, 1))
    assert d == 1 and w_star.values == (2, 2)
    w = Weighting((0, 5))
    w_star, d = solve_exists_integral(Uniform(2, 1), {1}, w)
    assert d == 0 and w_star.values == w.values


def test_closure_examples(fig1):
    assert check_exists_feasible_closure(fig1.m, fig1.s0, fig1.weights(FIG1_WSTAR))
    assert not check_exists_feasible_closure(Uniform(2, 1), {1}, (2, 1))
    assert check_exists_feasible_closure(Uniform(3, 2), {0, 1, 2}, (4, 0, 9))


def test_candidates_and_search():
    w = Weighting((5, 1, 1, -3))
    assert candidate_deltas(w, [0], [1, 2, 3]) == [0, 2, 4]
    assert candidate_deltas(w, [3], [0]) == [0]
    cands = [F(k, 2) for k in range(11)]
    for t in range(11):
        assert least_feasible(cands, lambda d: d >= F(t, 2)) == F(t, 2)


def test_certificates_pool():
    for c in pool(Variant.IM_EXISTS):
        m, s0, w = c.matroid, c.s0, c.w
        for solve in METHODS:
            w_star, cert = solve(m, s0, w)
            assert check_feasible(m, s0, w_star, Variant.IM_EXISTS)
            assert w.distance(w_star) == cert.delta_star
            b = cert.basis_in_s0
            assert b <= s0 and m.is_basis(b)
            assert w_star.weight(b) == max(w_star.weight(x) for x in enumerate_bases(m).bases)
            if cert.delta_star > 0:
                b0, e, f = cert.triple
                assert m.is_basis(b0) and b0 <= s0
                assert f not in s0 and e in s0 and e in m.fundamental_circuit(b0, f)
                assert w[f] - w[e] == 2 * cert.delta_star


def test_structured_optimum_is_tight():
    for c in pool(Variant.IM_EXISTS):
        _, cert = solve_exists_binary(c.matroid, c.s0, c.w)
        if cert.delta_star > 0:
            shy = c.w.structured(c.s0, cert.delta_star - F(1, 5))
            assert not check_feasible(c.matroid, c.s0, shy, Variant.IM_EXISTS)


def test_predicate_monotone():
    rng = random.Random(3)
    for c in pool(Variant.IM_EXISTS)[:120]:
        d1, d2 = sorted(F(rng.randint(0, 20), 2) for _ in range(2))
        if check_feasible(c.matroid, c.s0, c.w.structured(c.s0, d1), Variant.IM_EXISTS):
            assert check_feasible(c.matroid, c.s0, c.w.structured(c.s0, d2), Variant.IM_EXISTS)
