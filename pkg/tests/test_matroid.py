import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invmatroid import (
    Contraction,
    CountingMatroid,
    DirectSum,
    Dual,
    Graphic,
    LinearRational,
    MalformedInputError,
    Partition,
    PreconditionError,
    Restriction,
    Uniform,
    connected_components,
    exchange_bijection,
)
from invmatroid.oracle import components_by_circuits, enumerate_bases

from pool import random_matroid
from props import (
    ZOO,
    check_axioms,
    check_circuits,
    check_closure,
    check_components,
    check_dual_involution,
    check_exchange,
    check_submodular,
)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_axioms_exhaustive(m):
    check_axioms(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_axioms_random(seed):
    m = random_matroid(random.Random(seed))
    if m.n <= 7:
        check_axioms(m)


@pytest.mark.parametrize("m", [m for m in ZOO if m.n <= 6], ids=repr)
def test_rank_monotone_submodular(m):
    check_submodular(m)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_closure(m):
    check_closure(m)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_fundamental_circuits_are_circuits(m):
    check_circuits(m)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_exchange_bijection(m):
    check_exchange(m)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_dual_involution(m):
    check_dual_involution(m)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_dual_bases_are_complements(m):
    ground = m.ground
    assert {ground - b for b in enumerate_bases(m).bases} == set(enumerate_bases(Dual(m)).bases)


@pytest.mark.parametrize("m", ZOO, ids=repr)
def test_components_match_circuit_definition(m):
    check_components(m)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_components_random(seed):
    rng = random.Random(seed)
    m = random_matroid(rng)
    within = frozenset(s for s in range(m.n) if rng.random() < 0.7)
    assert connected_components(m, within) == components_by_circuits(m, within)


def spanning_tree_count(g):
    """Matrix-tree theorem: any cofactor of the Laplacian."""
    v = g.vertex_count
    lap = np.zeros((v, v))
    for a, b in g.edges:
        if a != b:
            lap[a, a] += 1
            lap[b, b] += 1
            lap[a, b] -= 1
            lap[b, a] -= 1
    return round(np.linalg.det(lap[1:, 1:])) if v > 1 else 1


@pytest.mark.parametrize("seed", range(40))
def test_graphic_basis_count_matrix_tree(seed):
    rng = random.Random(seed)
    v = rng.randint(2, 7)
    edges = [(rng.randrange(v), rng.randrange(v)) for _ in range(rng.randint(v - 1, 10))]
    g = Graphic(v, edges)
    # only connected graphs: bases are spanning trees there
    if g.full_rank != v - 1:
        return
    assert len(enumerate_bases(g).bases) == spanning_tree_count(g)


def test_fig1_basis_count_matrix_tree(fig1):
    assert len(enumerate_bases(fig1.m).bases) == spanning_tree_count(fig1.m)


# -- worked examples ---------------------------------------------------------


def test_uniform_examples():
    u = Uniform(3, 2)
    assert u.is_independent([])
    assert not u.is_independent([0, 1, 2])
    assert u.rank([0, 1, 2]) == 2
    assert u.rank([]) == 0
    assert u.closure([0]) == {0}
    assert u.closure(range(3)) == {0, 1, 2}
    assert u.fundamental_circuit({0, 1}, 2) == {0, 1, 2}
    assert exchange_bijection(u, {0, 1}, {1, 2}) == {0: 2}
    assert exchange_bijection(u, {0, 1}, {0, 1}) == {}
    assert connected_components(u) == [frozenset({0, 1, 2})]
    assert u.find_basis([0]) is None
    assert u.find_basis() is not None


def test_fig1_examples(fig1):
    m, ids = fig1.m, fig1.ids
    assert m.is_independent(ids("ab", "ac", "ae"))
    assert m.rank(range(9)) == 5
    assert m.closure(ids("ac", "ce")) == ids("ac", "ce", "ae")
    assert m.fundamental_circuit(fig1.b0, fig1.index["ab"]) == ids("ab", "ac", "cd", "db")
    comps = connected_components(Restriction(m, fig1.s0))
    r = Restriction(m, fig1.s0)
    named = sorted(sorted(fig1.names[r.elements[i]] for i in c) for c in comps)
    assert named == sorted([sorted(["ac", "ae", "ce"]), ["cd"], sorted(["db", "df", "bf"])])
    assert connected_components(m, fig1.s0) == [ids("ac", "ae", "ce"), ids("cd"), ids("db", "df", "bf")]
    b = m.find_basis(fig1.s0)
    assert b <= fig1.s0 and m.is_basis(b)


def test_fig1_exchange(fig1):
    b1 = fig1.ids("ab", "cd", "db", "ef", "df")
    b2 = fig1.ids("ac", "ce", "cd", "db", "df")
    phi = exchange_bijection(fig1.m, b1, b2)
    assert set(phi) == fig1.ids("ab", "ef")
    for e, g in phi.items():
        assert fig1.m.is_basis((b1 - {e}) | {g})


def test_partition_circuit():
    m = DirectSum([Partition([[0, 1]], [1]), Uniform(1, 1)])
    assert m.fundamental_circuit({0, 2}, 1) == {0, 1}


def test_direct_sum_components():
    m = DirectSum([Uniform(1, 1), Uniform(1, 1)])
    assert connected_components(m) == [frozenset({0}), frozenset({1})]


def test_loops_are_singletons():
    g = Graphic(2, [(0, 0), (0, 1), (0, 1)])
    assert g.is_loop(0)
    assert connected_components(g) == [frozenset({0}), frozenset({1, 2})]


def test_restriction_and_contraction_ids():
    u = Uniform(5, 3)
    r = Restriction(u, [4, 1, 2])
    assert r.elements == (1, 2, 4) and r.full_rank == 3
    c = Contraction(u, [0])
    assert c.elements == (1, 2, 3, 4) and c.full_rank == 2


def test_bad_inputs():
    u = Uniform(3, 2)
    with pytest.raises(MalformedInputError):
        u.is_independent([3])
    with pytest.raises(MalformedInputError):
        Uniform(2, 3)
    with pytest.raises(MalformedInputError):
        Partition([[0, 1], [1]], [1, 1])
    with pytest.raises(MalformedInputError):
        Graphic(2, [(0, 2)])
    with pytest.raises(MalformedInputError):
        LinearRational([[1, 2], [3]])
    with pytest.raises(PreconditionError):
        u.fundamental_circuit({0, 1}, 0)
    with pytest.raises(PreconditionError):
        exchange_bijection(u, {0}, {1, 2})


def test_counting_matroid():
    c = CountingMatroid(Uniform(4, 2))
    assert c.is_independent([0, 1]) and not c.is_independent([0, 1, 2])
    assert c.calls == 2
    assert c.reset() == 2 and c.calls == 0
