"""Integer-indexed weak compositions and the sliding order used by the
slide basis.

A weak composition here is a finitely supported map from Z to the
nonnegative integers; entries may sit at nonpositive indices.  Strong
compositions (all parts positive, positions irrelevant) are plain tuples
of positive ints.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple


class _WindowBase(NamedTuple):
    lo: int
    hi: int


class Window(_WindowBase):
    """Inclusive index range [lo, hi] for variable supports.

    A window is metadata: nothing silently truncates to it.  lo = hi + 1
    encodes the empty window (no admissible indices).
    """

    __slots__ = ()

    def __new__(cls, lo: int, hi: int):
        if lo > hi + 1:
            raise ValueError(f"bad window [{lo}, {hi}]")
        return super().__new__(cls, lo, hi)

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def union(self, other: "Window") -> "Window":
        return Window(min(self.lo, other.lo), max(self.hi, other.hi))

    def contains(self, i: int) -> bool:
        return self.lo <= i <= self.hi


def _canonical(entries: Iterable[int], lo: int) -> tuple[int, tuple[int, ...]]:
    ent = list(entries)
    for v in ent:
        if v < 0:
            raise ValueError("weak composition entries must be >= 0")
    while ent and ent[0] == 0:
        ent.pop(0)
        lo += 1
    while ent and ent[-1] == 0:
        ent.pop()
    if not ent:
        return 1, ()
    return lo, tuple(ent)


class WeakComposition:
    """Finitely supported weak composition on Z.

    Stored canonically as (lo, entries) with entries[0] and entries[-1]
    nonzero unless the composition is zero.  Equality and hashing are on
    logical values, never on a particular storage offset.
    """

    __slots__ = ("lo", "entries")

    def __init__(self, entries: Iterable[int] = (), lo: int = 1):
        clo, cent = _canonical(entries, lo)
        object.__setattr__(self, "lo", clo)
        object.__setattr__(self, "entries", cent)

    def __setattr__(self, name, value):
        raise AttributeError("WeakComposition is immutable")

    @classmethod
    def from_items(cls, items: Iterable[tuple[int, int]]) -> "WeakComposition":
        d: dict[int, int] = {}
        for i, v in items:
            if v:
                d[i] = d.get(i, 0) + v
        if not d:
            return cls()
        lo = min(d)
        hi = max(d)
        return cls([d.get(i, 0) for i in range(lo, hi + 1)], lo)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "WeakComposition":
        """Exponent vector of the monomial x_{v1}x_{v2}... (color counts)."""
        return cls.from_items((v, 1) for v in values)

    def __getitem__(self, i: int) -> int:
        j = i - self.lo
        if 0 <= j < len(self.entries):
            return self.entries[j]
        return 0

    @property
    def hi(self) -> int:
        return self.lo + len(self.entries) - 1

    def support(self) -> tuple[int, ...]:
        return tuple(
            self.lo + j for j, v in enumerate(self.entries) if v
        )

    def weight(self) -> int:
        return sum(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def items(self) -> Iterator[tuple[int, int]]:
        for j, v in enumerate(self.entries):
            if v:
                yield self.lo + j, v

    def flatten(self) -> tuple[int, ...]:
        """Positive entries read in index order (a strong composition)."""
        return tuple(v for v in self.entries if v)

    def shifted(self, k: int) -> "WeakComposition":
        return WeakComposition(self.entries, self.lo + k)

    def added(self, other: "WeakComposition") -> "WeakComposition":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return WeakComposition(
            [self[i] + other[i] for i in range(lo, hi + 1)], lo
        )

    def supported_in(self, w: Window) -> bool:
        return all(w.contains(i) for i in self.support())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeakComposition):
            return NotImplemented
        return self.lo == other.lo and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.lo, self.entries))

    def __repr__(self) -> str:
        return f"WeakComposition({list(self.entries)}, lo={self.lo})"

    def __str__(self) -> str:
        """Bar notation: entries at indices <= 0, a bar, then indices >= 1.

        The bar is omitted when the support is entirely positive; the
        positive side always starts at index 1.
        """
        if self.is_zero():
            return "0"
        if self.lo >= 1:
            ent = [0] * (self.lo - 1) + list(self.entries)
            return ",".join(str(v) for v in ent)
        neg = [self[i] for i in range(self.lo, 1)]
        pos = [self[i] for i in range(1, self.hi + 1)]
        return (
            ",".join(str(v) for v in neg)
            + "|"
            + ",".join(str(v) for v in pos)
        )

    def to_json(self) -> dict:
        return {"lo": self.lo, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, d: dict) -> "WeakComposition":
        return cls(d["entries"], d["lo"])


def refines(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """True when merging adjacent parts of alpha can produce beta.

    Works by comparing partial-sum sets; requires equal weights.
    """
    if sum(alpha) != sum(beta):
        return False
    pa, s = set(), 0
    for p in alpha:
        s += p
        pa.add(s)
    s = 0
    for p in beta:
        s += p
        if s not in pa:
            return False
    return True


def dominates(b: WeakComposition, a: WeakComposition) -> bool:
    """Prefix-sum dominance: sum(b_i, i<=k) >= sum(a_i, i<=k) for all k."""
    points = sorted(set(b.support()) | set(a.support()))
    sb = sa = 0
    for k in points:
        sb += b[k]
        sa += a[k]
        if sb < sa:
            return False
    return True


def leq_slide(b: WeakComposition, a: WeakComposition) -> bool:
    """The sliding order: b is reachable from a by leftward slides."""
    return refines(b.flatten(), a.flatten()) and dominates(b, a)


def _part_refinements(part: int) -> Iterator[tuple[int, ...]]:
    # compositions of a single positive integer
    for cuts in range(part):
        for pos in itertools.combinations(range(1, part), cuts):
            prev = 0
            out = []
            for c in pos + (part,):
                out.append(c - prev)
                prev = c
            yield tuple(out)


def refinements(alpha: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All strong compositions refining alpha (adjacent-merge preimages)."""
    if not alpha:
        yield ()
        return
    pools = [list(_part_refinements(p)) for p in alpha]
    for combo in itertools.product(*pools):
        yield tuple(itertools.chain.from_iterable(combo))


def slide_set(a: WeakComposition, w: Window) -> set[WeakComposition]:
    """All b supported in w with flatten(b) refining flatten(a) and
    b dominating a in prefix sums."""
    if a.weight() == 0:
        return {WeakComposition()}
    out: set[WeakComposition] = set()
    positions = list(w.indices())
    for beta in refinements(a.flatten()):
        if len(beta) > len(positions):
            continue
        for spots in itertools.combinations(positions, len(beta)):
            b = WeakComposition.from_items(zip(spots, beta))
            if dominates(b, a):
                out.add(b)
    return out


def comp_of_subset(subset: Iterable[int], n: int) -> tuple[int, ...]:
    """Strong composition of n with partial sums given by the subset of [n-1]."""
    s = sorted(set(subset))
    if n == 0:
        if s:
            raise ValueError("nonempty subset with n = 0")
        return ()
    if s and (s[0] < 1 or s[-1] > n - 1):
        raise ValueError(f"subset {s} not inside [1, {n - 1}]")
    prev = 0
    out = []
    for c in s + [n]:
        out.append(c - prev)
        prev = c
    return tuple(out)


def subset_of_comp(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Partial sums of alpha except the last (inverse of comp_of_subset)."""
    out, s = [], 0
    for p in alpha[:-1]:
        s += p
        out.append(s)
    return tuple(out)


def transpose(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Composition with complementary partial-sum set inside [n-1]."""
    n = sum(alpha)
    chosen = set(subset_of_comp(alpha))
    return comp_of_subset([i for i in range(1, n) if i not in chosen], n)


def lex_key(a: WeakComposition, lo: int, hi: int) -> tuple[int, ...]:
    """Entries read off from lo to hi, for deterministic tie-breaking."""
    return tuple(a[i] for i in range(lo, hi + 1))
