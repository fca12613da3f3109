"""Descent-weighted chromatic polynomials of Dyck graphs, computed two
independent ways: brute-force over bounded proper colorings, and as a
permutation sum of slide polynomials.  Also the fundamental expansion of
the nonpositive-variable specialization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .compositions import WeakComposition, Window, comp_of_subset, transpose
from .dyck import PartialDyckPath, dyck_graph, restriction_map
from .posets import (
    descent_composition,
    graph_inversions,
    incomparability_poset,
    poset_descents,
)
from .slides import fundamental_qsym, slide_polynomial
from .tpoly import TCoeff, TPolynomial, t_add, t_monomial


def chromatic_brute(path: PartialDyckPath, w: Window) -> TPolynomial:
    """Sum of t^(descents) x_{f(1)}..x_{f(n)} over proper colorings f with
    w.lo <= f(i) <= min(rho(i), w.hi).

    A descent is an edge {i,j}, i<j, with f(i) > f(j).
    """
    graph = dyck_graph(path)
    rho = restriction_map(path)
    n = graph.n
    nbrs_before = {
        v: [u for u in range(1, v) if (u, v) in graph.edges]
        for v in range(1, n + 1)
    }
    terms: dict[WeakComposition, TCoeff] = {}
    f = [0] * (n + 1)

    def rec(v: int, des: int):
        if v > n:
            e = WeakComposition.from_values(f[1:])
            tc = terms.setdefault(e, {})
            tc[des] = tc.get(des, 0) + 1
            return
        hi = min(rho[v - 1], w.hi)
        for c in range(w.lo, hi + 1):
            bump = 0
            ok = True
            for u in nbrs_before[v]:
                if f[u] == c:
                    ok = False
                    break
                if f[u] > c:
                    bump += 1
            if ok:
                f[v] = c
                rec(v + 1, des + bump)
        return

    rec(1, 0)
    return TPolynomial(w, terms)


def chromatic_via_slides(
    path: PartialDyckPath, w: Window
) -> tuple[TPolynomial, dict[WeakComposition, TCoeff]]:
    """Permutation sum: t^(graph inversions of pi) times the slide
    polynomial of pi's descent composition.  Returns the polynomial and
    the accumulated slide expansion.
    """
    graph = dyck_graph(path)
    rho = restriction_map(path)
    poset = incomparability_poset(graph)
    expansion: dict[WeakComposition, TCoeff] = {}
    for pi in itertools.permutations(range(1, graph.n + 1)):
        inv = graph_inversions(graph, pi)
        rd = descent_composition(pi, rho, poset)
        expansion[rd] = t_add(expansion.get(rd, {}), t_monomial(inv))
    poly = TPolynomial.zero(w)
    for rd in sorted(expansion, key=lambda e: (e.lo, e.entries)):
        poly = poly + slide_polynomial(rd, w).scaled(expansion[rd])
    return poly, expansion


@dataclass
class ChromaticReport:
    path: PartialDyckPath
    window: Window
    brute: TPolynomial
    via_slides: TPolynomial
    expansion: dict[WeakComposition, TCoeff]
    equal: bool
    nonnegative: bool
    mismatches: list[tuple[WeakComposition, TCoeff]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.equal and self.nonnegative


def compare_chromatic(path: PartialDyckPath, w: Window) -> ChromaticReport:
    """Run both routes and report equality plus coefficient positivity."""
    brute = chromatic_brute(path, w)
    via, expansion = chromatic_via_slides(path, w)
    diff = brute - via
    mismatches = [
        (e, diff.terms[e]) for e in sorted(
            diff.terms, key=lambda e: (e.lo, e.entries)
        )
    ]
    nonneg = all(
        c >= 0 for tc in brute.terms.values() for c in tc.values()
    )
    return ChromaticReport(
        path=path,
        window=w,
        brute=brute,
        via_slides=via,
        expansion=expansion,
        equal=not mismatches,
        nonnegative=nonneg,
        mismatches=mismatches,
    )


def fundamental_expansion(
    path: PartialDyckPath,
) -> dict[tuple[int, ...], TCoeff]:
    """Expansion of the all-nonpositive-color generating function into
    fundamental quasisymmetric polynomials.

    Each permutation contributes t^inv to the transpose of the
    composition recording its poset descents.
    """
    graph = dyck_graph(path)
    poset = incomparability_poset(graph)
    out: dict[tuple[int, ...], TCoeff] = {}
    for pi in itertools.permutations(range(1, graph.n + 1)):
        inv = graph_inversions(graph, pi)
        alpha = transpose(comp_of_subset(poset_descents(poset, pi), graph.n))
        out[alpha] = t_add(out.get(alpha, {}), t_monomial(inv))
    return out


def verify_fundamental_expansion(path: PartialDyckPath, m: int) -> bool:
    """Check the expansion against brute-force colorings in [1-m, 0]."""
    w = Window(1 - m, 0)
    brute = chromatic_brute(path, w)
    total = TPolynomial.zero(w)
    for alpha, tc in sorted(fundamental_expansion(path).items()):
        f = fundamental_qsym(alpha, m).shifted(-m)
        total = total + f.scaled(tc)
    return brute == total


def verify_backstable(path: PartialDyckPath, m: int) -> ChromaticReport:
    """Both chromatic routes over the widened window [1-m, r]."""
    return compare_chromatic(path, Window(1 - m, path.r))
