"""Partial Dyck paths, the graphs they carve out of the diagonal strip,
and per-vertex color bounds.

A path in P(n, r) runs from (0, r) to (n+r, n+r) by unit N and E steps,
staying weakly above y = x.  Vertices of the derived graph are 1..n.
Edge and bound tests reduce to the heights of the east steps: the k-th
east step sits at height r + (number of N steps before it).
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator

_LITERAL = re.compile(r"^([NE]*)@(\d+),(\d+)$")


class PartialDyckPath:
    """Immutable N/E step word with its (n, r) frame."""

    __slots__ = ("n", "r", "steps", "_heights")

    def __init__(self, steps: str, n: int, r: int):
        if n < 0 or r < 0:
            raise ValueError("n and r must be >= 0")
        if set(steps) - {"N", "E"}:
            raise ValueError(f"bad step characters in {steps!r}")
        if steps.count("N") != n or steps.count("E") != n + r:
            raise ValueError(
                f"need {n} N steps and {n + r} E steps, got {steps!r}"
            )
        x, y = 0, r
        for s in steps:
            if s == "E":
                x += 1
            else:
                y += 1
            if y < x:
                raise ValueError(f"path {steps!r} dips below the diagonal")
        heights = []
        seen_n = 0
        for s in steps:
            if s == "N":
                seen_n += 1
            else:
                heights.append(r + seen_n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "_heights", tuple(heights))

    def __setattr__(self, name, value):
        raise AttributeError("PartialDyckPath is immutable")

    @classmethod
    def parse(cls, literal: str) -> "PartialDyckPath":
        """Parse "WORD@n,r" (e.g. "ENEENENEE@3,3")."""
        m = _LITERAL.match(literal.strip())
        if not m:
            raise ValueError(f"bad path literal {literal!r}, want WORD@n,r")
        return cls(m.group(1), int(m.group(2)), int(m.group(3)))

    @property
    def literal(self) -> str:
        return f"{self.steps}@{self.n},{self.r}"

    def east_heights(self) -> tuple[int, ...]:
        """Height of the k-th east step, k = 1..n+r (1-indexed via [k-1])."""
        return self._heights

    def __eq__(self, other):
        if not isinstance(other, PartialDyckPath):
            return NotImplemented
        return (self.n, self.r, self.steps) == (other.n, other.r, other.steps)

    def __hash__(self):
        return hash((self.n, self.r, self.steps))

    def __repr__(self):
        return f"PartialDyckPath({self.literal!r})"

    def to_json(self) -> dict:
        return {"steps": self.steps, "n": self.n, "r": self.r}


class DyckGraph:
    """Graph on vertices 1..n whose edges satisfy the interval property:
    {i,j} an edge forces {i',j'} for all i <= i' < j' <= j."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        es = frozenset(tuple(e) for e in edges)
        for i, j in es:
            if not (1 <= i < j <= n):
                raise ValueError(f"bad edge ({i},{j}) for n={n}")
        for i, j in es:
            for a in range(i, j + 1):
                for b in range(a + 1, j + 1):
                    if (a, b) not in es:
                        raise ValueError(
                            f"interval property fails: ({i},{j}) present, ({a},{b}) missing"
                        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)

    def __setattr__(self, name, value):
        raise AttributeError("DyckGraph is immutable")

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, DyckGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"DyckGraph(n={self.n}, edges={self.sorted_edges()})"

    def dot(self) -> str:
        lines = ["graph G {"]
        for v in range(1, self.n + 1):
            lines.append(f"  {v};")
        for i, j in self.sorted_edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines)


def dyck_graph(path: PartialDyckPath) -> DyckGraph:
    """Edge {i,j} (i<j) iff the unit square in column i+r, row j+r lies
    below the path, i.e. east step i+r has height >= j+r."""
    n, r = path.n, path.r
    h = path.east_heights()
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if h[i + r - 1] >= j + r
    ]
    return DyckGraph(n, edges)


def restriction_map(path: PartialDyckPath) -> tuple[int, ...]:
    """Largest color allowed at each vertex: rho(i) is the largest j <= r
    whose column-j square in row i+r sits above the path (0 if none)."""
    n, r = path.n, path.r
    h = path.east_heights()
    rho = []
    for i in range(1, n + 1):
        best = 0
        for j in range(1, r + 1):
            if h[j - 1] < i + r:
                best = j
        rho.append(best)
    return tuple(rho)


def enumerate_paths(n: int, r: int) -> Iterator[PartialDyckPath]:
    """All of P(n, r) in lexicographic step-word order with E < N."""

    def rec(word: list[str], x: int, y: int, e_left: int, n_left: int):
        if e_left == 0 and n_left == 0:
            yield PartialDyckPath("".join(word), n, r)
            return
        if e_left and y >= x + 1:
            word.append("E")
            yield from rec(word, x + 1, y, e_left - 1, n_left)
            word.pop()
        if n_left:
            word.append("N")
            yield from rec(word, x, y + 1, e_left, n_left - 1)
            word.pop()

    yield from rec([], 0, r, n + r, n)


@lru_cache(maxsize=None)
def count_paths(n: int, r: int) -> int:
    import math

    total = math.comb(2 * n + r, n)
    bad = math.comb(2 * n + r, n - 1) if n >= 1 else 0
    return total - bad
