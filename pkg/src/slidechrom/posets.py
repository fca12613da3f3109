"""Labeled posets, acyclic orientations, and the descent composition
machinery that turns a linear order with color bounds into a slide index.

Vertices are 1..n throughout.  A strict order is stored as a frozenset of
pairs (a, b) meaning a < b in the poset.  Permutations are tuples pi with
pi[k] = image of position k+1.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .compositions import WeakComposition, Window
from .dyck import DyckGraph
from .tpoly import TPolynomial


class LabeledPoset:
    """Strict partial order on 1..n, optionally carrying a bijective
    labeling omega and per-vertex upper bounds rho."""

    __slots__ = ("n", "less", "omega", "rho", "_covers")

    def __init__(self, n, less, omega=None, rho=None):
        rel = frozenset((int(a), int(b)) for a, b in less)
        for a, b in rel:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"relation ({a},{b}) outside 1..{n}")
            if a == b:
                raise ValueError(f"reflexive pair ({a},{b})")
            if (b, a) in rel:
                raise ValueError(f"antisymmetry fails on ({a},{b})")
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise ValueError(
                        f"relation not transitive: ({a},{b}),({b},{d}) without ({a},{d})"
                    )
        if omega is not None:
            omega = tuple(omega)
            if sorted(omega) != list(range(1, n + 1)):
                raise ValueError("omega must be a bijection onto 1..n")
        if rho is not None:
            rho = tuple(rho)
            if len(rho) != n:
                raise ValueError("rho must assign a bound to every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "less", rel)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "_covers", None)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledPoset is immutable")

    @classmethod
    def chain(cls, pi: Sequence[int], omega=None, rho=None) -> "LabeledPoset":
        """Linear order pi[0] < pi[1] < ... as a poset."""
        n = len(pi)
        less = {
            (pi[i], pi[j]) for i in range(n) for j in range(i + 1, n)
        }
        return cls(n, less, omega, rho)

    def with_labels(self, omega=None, rho=None) -> "LabeledPoset":
        return LabeledPoset(
            self.n,
            self.less,
            omega if omega is not None else self.omega,
            rho if rho is not None else self.rho,
        )

    def is_less(self, a: int, b: int) -> bool:
        return (a, b) in self.less

    def covers(self) -> frozenset:
        """Pairs (a, b) with a covered by b."""
        cached = self._covers
        if cached is None:
            cached = frozenset(
                (a, b)
                for a, b in self.less
                if not any(
                    (a, c) in self.less and (c, b) in self.less
                    for c in range(1, self.n + 1)
                )
            )
            object.__setattr__(self, "_covers", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return (self.n, self.less, self.omega, self.rho) == (
            other.n,
            other.less,
            other.omega,
            other.rho,
        )

    def __repr__(self):
        return (
            f"LabeledPoset(n={self.n}, covers={sorted(self.covers())},"
            f" omega={self.omega}, rho={self.rho})"
        )

    def hasse_dot(self) -> str:
        lines = ["digraph P {", "  rankdir=BT;"]
        for v in range(1, self.n + 1):
            tags = [str(v)]
            if self.omega is not None:
                tags.append(f"w={self.omega[v - 1]}")
            if self.rho is not None:
                tags.append(f"<={self.rho[v - 1]}")
            label = " ".join(tags)
            lines.append(f'  {v} [label="{label}"];')
        for a, b in sorted(self.covers()):
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines)


def incomparability_poset(graph: DyckGraph) -> LabeledPoset:
    """i < j in the poset iff i < j as integers and {i,j} is a non-edge.

    For interval graphs this relation is transitive; the constructor
    rejects anything else.
    """
    n = graph.n
    less = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if (i, j) not in graph.edges
    }
    return LabeledPoset(n, less)


class Orientation:
    """Acyclic orientation of a graph; arcs point from larger-color to
    smaller-color endpoints in every compatible coloring."""

    __slots__ = ("graph", "arcs")

    def __init__(self, graph: DyckGraph, arcs):
        arcset = frozenset((int(a), int(b)) for a, b in arcs)
        seen = set()
        for a, b in arcset:
            e = (min(a, b), max(a, b))
            if e not in graph.edges:
                raise ValueError(f"arc ({a},{b}) is not an edge")
            if e in seen:
                raise ValueError(f"edge {e} oriented twice")
            seen.add(e)
        if seen != set(graph.edges):
            raise ValueError("every edge needs exactly one direction")
        order = _topological_order(graph.n, arcset)
        if order is None:
            raise ValueError("orientation has a directed cycle")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "arcs", arcset)

    def __setattr__(self, name, value):
        raise AttributeError("Orientation is immutable")

    def ascent_arcs(self) -> int:
        """Arcs (a, b) with a < b: descents forced on compatible colorings."""
        return sum(1 for a, b in self.arcs if a < b)

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.graph, self.arcs))

    def __repr__(self):
        return f"Orientation(arcs={sorted(self.arcs)})"


def _topological_order(n: int, arcs) -> list[int] | None:
    indeg = {v: 0 for v in range(1, n + 1)}
    for a, b in arcs:
        indeg[b] += 1
    ready = [v for v in range(1, n + 1) if indeg[v] == 0]
    out = []
    while ready:
        v = ready.pop()
        out.append(v)
        for a, b in arcs:
            if a == v:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
    return out if len(out) == n else None


def orientation_from_perm(graph: DyckGraph, pi: Sequence[int]) -> Orientation:
    """Direct every edge from its later-in-pi endpoint to the earlier one."""
    pos = {v: k for k, v in enumerate(pi)}
    arcs = []
    for i, j in graph.edges:
        if pos[i] > pos[j]:
            arcs.append((i, j))
        else:
            arcs.append((j, i))
    return Orientation(graph, arcs)


def acyclic_orientations(graph: DyckGraph) -> Iterator[Orientation]:
    edges = graph.sorted_edges()
    for choice in itertools.product((0, 1), repeat=len(edges)):
        arcs = [
            (i, j) if c else (j, i) for (i, j), c in zip(edges, choice)
        ]
        if _topological_order(graph.n, arcs) is not None:
            yield Orientation(graph, arcs)


def omega_labeling(graph: DyckGraph, o: Orientation) -> tuple[int, ...]:
    """Label sources first, always the largest-numbered available vertex.

    Produces omega with: for every arc a -> b, omega(b) > omega(a); and
    the labeling is the one induced by any permutation yielding o.
    """
    n = graph.n
    remaining = set(range(1, n + 1))
    indeg = {v: 0 for v in remaining}
    for a, b in o.arcs:
        indeg[b] += 1
    omega = [0] * n
    ctr = 1
    while remaining:
        v = max(u for u in remaining if indeg[u] == 0)
        omega[v - 1] = ctr
        ctr += 1
        remaining.discard(v)
        for a, b in o.arcs:
            if a == v and b in remaining:
                indeg[b] -= 1
    return tuple(omega)


def poset_of_orientation(o: Orientation) -> LabeledPoset:
    """Transitive closure with b < a for every arc a -> b."""
    n = o.graph.n
    less = {(b, a) for a, b in o.arcs}
    changed = True
    while changed:
        changed = False
        for x, y in list(less):
            for u, v in list(less):
                if y == u and (x, v) not in less:
                    less.add((x, v))
                    changed = True
    return LabeledPoset(n, less)


def graph_inversions(graph: DyckGraph, pi: Sequence[int]) -> int:
    """Edges {i,j}, i<j, whose endpoints appear out of order in pi."""
    pos = {v: k for k, v in enumerate(pi)}
    return sum(1 for i, j in graph.edges if pos[i] > pos[j])


def poset_descents(poset: LabeledPoset, pi: Sequence[int]) -> set[int]:
    """Positions i (1-based) with pi(i+1) < pi(i) in the poset."""
    return {
        i + 1
        for i in range(len(pi) - 1)
        if poset.is_less(pi[i + 1], pi[i])
    }


def tightened_bounds(
    pi: Sequence[int], rho: Sequence[int], poset: LabeledPoset
) -> tuple[int, ...]:
    """Sharpest per-vertex bounds compatible with reading pi as a chain.

    Walking pi top-down: the last vertex keeps its bound; below a
    poset-descent the bound is min-carried, otherwise it drops by one.
    Returned tuple is indexed by vertex.
    """
    n = len(pi)
    if n == 0:
        return ()
    bar = [0] * n
    bar[pi[n - 1] - 1] = rho[pi[n - 1] - 1]
    for i in range(n - 2, -1, -1):
        v, nxt = pi[i], pi[i + 1]
        carried = bar[nxt - 1]
        if not poset.is_less(nxt, v):
            carried -= 1
        bar[v - 1] = min(carried, rho[v - 1])
    return tuple(bar)


def tightened_bounds_by_labels(
    pi: Sequence[int], rho: Sequence[int], omega: Sequence[int]
) -> tuple[int, ...]:
    """Same recursion driven by a labeling: the bound drops by one below
    a descent of omega(pi(.)), and is min-carried below an ascent."""
    n = len(pi)
    if n == 0:
        return ()
    bar = [0] * n
    bar[pi[n - 1] - 1] = rho[pi[n - 1] - 1]
    for i in range(n - 2, -1, -1):
        v, nxt = pi[i], pi[i + 1]
        carried = bar[nxt - 1]
        if omega[v - 1] > omega[nxt - 1]:
            carried -= 1
        bar[v - 1] = min(carried, rho[v - 1])
    return tuple(bar)


def _blocks_to_composition(
    pi: Sequence[int], bar: Sequence[int], is_break
) -> WeakComposition:
    n = len(pi)
    if n == 0:
        return WeakComposition()
    items = []
    start = 0
    for i in range(n):
        if i == n - 1 or is_break(i):
            size = i - start + 1
            items.append((bar[pi[start] - 1], size))
            start = i + 1
    indices = [idx for idx, _ in items]
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise RuntimeError(f"block indices {indices} not strictly increasing")
    return WeakComposition.from_items(items)


def descent_composition(
    pi: Sequence[int], rho: Sequence[int], poset: LabeledPoset
) -> WeakComposition:
    """Block sizes of pi between poset-ascents, placed at the tightened
    bound of each block's first vertex."""
    bar = tightened_bounds(pi, rho, poset)
    return _blocks_to_composition(
        pi, bar, lambda i: not poset.is_less(pi[i + 1], pi[i])
    )


def descent_composition_by_labels(
    pi: Sequence[int], rho: Sequence[int], omega: Sequence[int]
) -> WeakComposition:
    bar = tightened_bounds_by_labels(pi, rho, omega)
    return _blocks_to_composition(
        pi, bar, lambda i: omega[pi[i] - 1] > omega[pi[i + 1] - 1]
    )


def linear_extensions(poset: LabeledPoset) -> Iterator[tuple[int, ...]]:
    """All linear extensions, lexicographically by the emitted tuple."""
    n = poset.n

    def rec(remaining: set[int], acc: list[int]):
        if not remaining:
            yield tuple(acc)
            return
        for v in sorted(remaining):
            if all(not poset.is_less(u, v) for u in remaining if u != v):
                acc.append(v)
                yield from rec(remaining - {v}, acc)
                acc.pop()

    yield from rec(set(range(1, n + 1)), [])


def restricted_partitions(
    poset: LabeledPoset, w: Window
) -> Iterator[tuple[int, ...]]:
    """All maps f on 1..n with w.lo <= f(v) <= min(rho(v), w.hi), weakly
    increasing up covers labeled upward by omega and strictly increasing
    up the rest."""
    if poset.omega is None or poset.rho is None:
        raise ValueError("poset needs omega and rho labels")
    n = poset.n
    omega, rho = poset.omega, poset.rho
    order = next(linear_extensions(poset), None)
    if order is None:
        raise RuntimeError("poset has no linear extension")
    cov = poset.covers()
    below = {v: [a for a, b in cov if b == v] for v in range(1, n + 1)}
    f = [0] * (n + 1)

    def rec(k: int):
        if k == n:
            yield tuple(f[1:])
            return
        v = order[k]
        lo = w.lo
        for u in below[v]:
            need = f[u] if omega[u - 1] < omega[v - 1] else f[u] + 1
            lo = max(lo, need)
        hi = min(rho[v - 1], w.hi)
        for val in range(lo, hi + 1):
            f[v] = val
            yield from rec(k + 1)

    yield from rec(0)


def partition_generating_function(
    poset: LabeledPoset, w: Window
) -> TPolynomial:
    """Sum of x_{f(1)}...x_{f(n)} over restricted partitions of the poset."""
    terms: dict[WeakComposition, dict[int, int]] = {}
    for f in restricted_partitions(poset, w):
        e = WeakComposition.from_values(f)
        tc = terms.setdefault(e, {})
        tc[0] = tc.get(0, 0) + 1
    return TPolynomial(w, terms)
