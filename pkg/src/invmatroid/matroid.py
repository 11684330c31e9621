"""Matroids given by independence oracles over the ground set ``range(n)``.

Every structural query (rank, closure, circuits, components) is derived from
the single ``_independent`` oracle so that the algorithms stay generic and the
number of oracle calls can be counted by wrapping a matroid in
:class:`CountingMatroid`.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
from networkx.utils import UnionFind

from .errors import MalformedInputError, PreconditionError

__all__ = [
    "Matroid",
    "Uniform",
    "Partition",
    "Graphic",
    "LinearRational",
    "DirectSum",
    "Dual",
    "Restriction",
    "Contraction",
    "CountingMatroid",
    "exchange_bijection",
    "connected_components",
]


class Matroid:
    """Base class; subclasses set ``n`` and implement ``_independent``.

    ``_independent`` receives a frozenset of valid element ids and must not
    mutate the matroid. Public methods validate their arguments first.
    """

    n: int

    def _independent(self, x: frozenset[int]) -> bool:
        raise NotImplementedError

    # -- validation ------------------------------------------------------

    def subset(self, x: Iterable[int]) -> frozenset[int]:
        """Return ``x`` as a frozenset, rejecting ids outside ``range(n)``."""
        out = frozenset(x)
        for s in out:
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < self.n:
                raise MalformedInputError(
                    f"element id {s!r} is outside the ground set [0, {self.n})"
                )
        return out

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.n))

    # -- queries -----------------------------------------------------------

    def is_independent(self, x: Iterable[int]) -> bool:
        return self._independent(self.subset(x))

    def _augment(self, order: Iterable[int], start: frozenset[int] = frozenset()) -> frozenset[int]:
        """Scan ``order`` and keep every element that preserves independence."""
        chosen = set(start)
        for s in order:
            if s in chosen:
                continue
            chosen.add(s)
            if not self._independent(frozenset(chosen)):
                chosen.discard(s)
        return frozenset(chosen)

    def max_independent(self, x: Iterable[int]) -> frozenset[int]:
        """A maximal independent subset of ``x`` (greedy by ascending id)."""
        return self._augment(sorted(self.subset(x)))

    def rank(self, x: Iterable[int]) -> int:
        return len(self.max_independent(x))

    @cached_property
    def full_rank(self) -> int:
        return self.rank(range(self.n))

    def closure(self, x: Iterable[int]) -> frozenset[int]:
        x = self.subset(x)
        base = self._augment(sorted(x))
        extra = {s for s in range(self.n) if s not in x and not self._independent(base | {s})}
        return x | extra

    def is_basis(self, b: Iterable[int]) -> bool:
        b = self.subset(b)
        return len(b) == self.full_rank and self._independent(b)

    def find_basis(self, within: Iterable[int] | None = None) -> frozenset[int] | None:
        """A basis of the matroid inside ``within``, or None if ``within`` does not span."""
        within = self.ground if within is None else self.subset(within)
        b = self._augment(sorted(within))
        return b if len(b) == self.full_rank else None

    def fundamental_circuit(self, b: Iterable[int], f: int) -> frozenset[int]:
        """The unique circuit inside ``b + f`` for a basis ``b`` and ``f`` not in ``b``."""
        b = self.subset(b)
        (f,) = self.subset([f])
        if f in b:
            raise PreconditionError(f"element {f} already lies in the basis")
        if not self.is_basis(b):
            raise PreconditionError("fundamental_circuit needs a basis")
        return frozenset(
            [f] + [e for e in sorted(b) if self._independent((b - {e}) | {f})]
        )

    def is_loop(self, s: int) -> bool:
        return not self._independent(frozenset([s]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"


class Uniform(Matroid):
    """U(r, n): every set of at most ``rank`` elements is independent."""

    def __init__(self, n: int, rank: int):
        if not 0 <= rank <= n:
            raise MalformedInputError(f"uniform matroid needs 0 <= rank <= n, got rank={rank}, n={n}")
        self.n = n
        self.r = rank

    def _independent(self, x):
        return len(x) <= self.r

    def __repr__(self):
        return f"Uniform(n={self.n}, rank={self.r})"


class Partition(Matroid):
    """Partition matroid; ``blocks`` must partition ``range(n)``."""

    def __init__(self, blocks: Sequence[Iterable[int]], capacities: Sequence[int]):
        blocks = [frozenset(b) for b in blocks]
        if len(blocks) != len(capacities):
            raise MalformedInputError("partition matroid needs one capacity per block")
        n = sum(len(b) for b in blocks)
        owner = [-1] * n
        for i, block in enumerate(blocks):
            for s in block:
                if not isinstance(s, int) or not 0 <= s < n or owner[s] != -1:
                    raise MalformedInputError(f"partition blocks must partition range({n})")
                owner[s] = i
        if any(c < 0 for c in capacities):
            raise MalformedInputError("block capacities must be non-negative")
        self.n = n
        self.blocks = blocks
        self.capacities = list(capacities)
        self._owner = owner

    def _independent(self, x):
        used = [0] * len(self.blocks)
        for s in x:
            i = self._owner[s]
            used[i] += 1
            if used[i] > self.capacities[i]:
                return False
        return True

    def __repr__(self):
        return f"Partition(blocks={[sorted(b) for b in self.blocks]}, capacities={self.capacities})"


class Graphic(Matroid):
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]], vertex_labels: Sequence[str] | None = None):
        edges = [tuple(e) for e in edges]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise MalformedInputError(f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")
        if vertex_labels is not None and len(vertex_labels) != vertex_count:
            raise MalformedInputError("one label per vertex is required")
        self.n = len(edges)
        self.vertex_count = vertex_count
        self.edges = edges
        self.vertex_labels = list(vertex_labels) if vertex_labels is not None else None

    def _independent(self, x):
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                a = parent[a]
            return a

        for s in x:
            u, v = self.edges[s]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def __repr__(self):
        return f"Graphic(vertex_count={self.vertex_count}, edges={self.edges})"


def _column_rank(columns: list[list[Fraction]]) -> int:
    """Rank of a list of equal-length column vectors, exact elimination."""
    rows = [list(c) for c in columns]  # treat columns as rows; rank is the same
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / p[col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class LinearRational(Matroid):
    """Column matroid of a matrix with exact rational entries."""

    def __init__(self, matrix: Sequence[Sequence]):
        rows = [[Fraction(v) for v in row] for row in matrix]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MalformedInputError("matrix rows must all have the same length")
        self.matrix = rows
        self.n = len(rows[0]) if rows else 0
        self._columns = [[r[j] for r in rows] for j in range(self.n)]

    def _independent(self, x):
        if not x:
            return True
        if len(x) > len(self.matrix):
            return False
        return _column_rank([self._columns[j] for j in x]) == len(x)

    def __repr__(self):
        return f"LinearRational({[[str(v) for v in r] for r in self.matrix]})"


class DirectSum(Matroid):
    """Parts occupy consecutive id ranges in the order given."""

    def __init__(self, parts: Sequence[Matroid]):
        self.parts = list(parts)
        self.offsets = []
        n = 0
        for p in self.parts:
            self.offsets.append(n)
            n += p.n
        self.n = n

    def _independent(self, x):
        for p, off in zip(self.parts, self.offsets):
            local = frozenset(s - off for s in x if off <= s < off + p.n)
            if local and not p._independent(local):
                return False
        return True

    def __repr__(self):
        return f"DirectSum({self.parts!r})"


class Dual(Matroid):
    """Bases are the complements of the bases of ``inner``."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.n = inner.n

    def _independent(self, x):
        rest = frozenset(range(self.n)) - x
        return len(self.inner._augment(sorted(rest))) == self.inner.full_rank

    def __repr__(self):
        return f"Dual({self.inner!r})"


class Restriction(Matroid):
    """``inner`` restricted to ``subset``; local id ``i`` is ``elements[i]``."""

    def __init__(self, inner: Matroid, subset: Iterable[int]):
        self.inner = inner
        self.elements = tuple(sorted(inner.subset(subset)))
        self.n = len(self.elements)

    def _independent(self, x):
        return self.inner._independent(frozenset(self.elements[i] for i in x))

    def __repr__(self):
        return f"Restriction({self.inner!r}, {list(self.elements)})"


class Contraction(Matroid):
    """``inner`` with ``subset`` contracted; local id ``i`` is ``elements[i]``."""

    def __init__(self, inner: Matroid, subset: Iterable[int]):
        self.inner = inner
        self.contracted = inner.subset(subset)
        self.elements = tuple(s for s in range(inner.n) if s not in self.contracted)
        self.n = len(self.elements)
        self._spanning = inner.max_independent(self.contracted)

    def _independent(self, x):
        return self.inner._independent(self._spanning | {self.elements[i] for i in x})

    def __repr__(self):
        return f"Contraction({self.inner!r}, {sorted(self.contracted)})"


class CountingMatroid(Matroid):
    """Wraps a matroid and counts independence queries."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.n = inner.n
        self.calls = 0
        self._lock = threading.Lock()

    def _independent(self, x):
        with self._lock:
            self.calls += 1
        return self.inner._independent(x)

    def reset(self) -> int:
        with self._lock:
            calls, self.calls = self.calls, 0
        return calls

    def __repr__(self):
        return f"CountingMatroid({self.inner!r}, calls={self.calls})"


def exchange_bijection(m: Matroid, b1: Iterable[int], b2: Iterable[int]) -> dict[int, int]:
    """Map each e in b1 - b2 to a distinct g in b2 - b1 with b1 - e + g a basis.

    Built as a perfect matching in the bipartite graph of valid single
    exchanges, which always has one.
    """
    b1, b2 = m.subset(b1), m.subset(b2)
    if not (m.is_basis(b1) and m.is_basis(b2)):
        raise PreconditionError("exchange_bijection needs two bases")
    left, right = sorted(b1 - b2), sorted(b2 - b1)
    if not left:
        return {}
    g = nx.Graph()
    g.add_nodes_from(("out", e) for e in left)
    g.add_nodes_from(("in", f) for f in right)
    for e in left:
        for f in right:
            if m._independent((b1 - {e}) | {f}):
                g.add_edge(("out", e), ("in", f))
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=[("out", e) for e in left])
    phi = {e: matching[("out", e)][1] for e in left if ("out", e) in matching}
    if len(phi) != len(left):
        raise AssertionError("exchange graph has no perfect matching; oracle is not a matroid")
    return phi


def connected_components(m: Matroid, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of ``m`` (or of ``m`` restricted to ``within``).

    Takes a basis B of the restriction and merges every fundamental circuit
    C(B, e) for e outside B. Loops and coloops end up as singletons.
    Components are returned sorted by their smallest element.
    """
    within = m.ground if within is None else m.subset(within)
    base = m._augment(sorted(within))
    uf = UnionFind(sorted(within))
    for f in sorted(within - base):
        for e in base:
            if m._independent((base - {e}) | {f}):
                uf.union(e, f)
    return sorted((frozenset(c) for c in uf.to_sets()), key=min)
