"""Slide polynomials over integer windows, their expansion algorithm,
fundamental quasisymmetric polynomials, and the tail-strong product
decomposition that splits a slide index into a nonpositive fundamental
part and positive slide parts.
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import (
    WeakComposition,
    Window,
    leq_slide,
    lex_key,
    slide_set,
)
from .tpoly import TCoeff, TPolynomial, t_add


@lru_cache(maxsize=None)
def slide_polynomial(a: WeakComposition, w: Window) -> TPolynomial:
    """Sum of x^b over the slide set of a inside the window.

    Enumerates dominated refinements directly; see
    slide_polynomial_by_chains for the independent model.
    """
    terms = {b: {0: 1} for b in slide_set(a, w)}
    return TPolynomial(w, terms)


@lru_cache(maxsize=None)
def slide_polynomial_by_chains(a: WeakComposition, w: Window) -> TPolynomial:
    """Chain-model slide polynomial: one block per part of flatten(a),
    the block's values capped by the index the part occupies, weakly
    increasing inside blocks and strictly increasing across them.
    """
    parts = []
    for idx, v in a.items():
        parts.append((idx, v))
    terms: dict[WeakComposition, TCoeff] = {}

    def rec(block: int, taken: list[int], prev: int, strict: bool):
        if block == len(parts):
            e = WeakComposition.from_values(taken)
            tc = terms.setdefault(e, {})
            tc[0] = tc.get(0, 0) + 1
            return
        cap, size = parts[block]
        cap = min(cap, w.hi)

        def fill(k: int, lastv: int, first: bool):
            if k == size:
                rec(block + 1, taken, lastv, True)
                return
            lo = max(w.lo, lastv + 1 if (first and strict) else lastv)
            if first and not taken:
                lo = w.lo
            for val in range(lo, cap + 1):
                taken.append(val)
                fill(k + 1, val, False)
                taken.pop()

        fill(0, prev, True)

    rec(0, [], w.lo - 1, False)
    return TPolynomial(w, terms)


def expand_in_slides(
    p: TPolynomial, w: Window
) -> dict[WeakComposition, TCoeff]:
    """Write p as a Z[t]-combination of slide polynomials on w.

    Every monomial of a slide polynomial refines-and-dominates its
    index, so indices are recovered by peeling at exponents maximal in
    that order.  Deterministic via lexicographic tie-breaking.  Raises
    ValueError if p has an exponent outside w and RuntimeError if the
    peel fails to terminate, which would indicate a bug.
    """
    for e in p.terms:
        if not e.supported_in(w):
            raise ValueError(f"exponent {e} not supported in window {w}")
    out: dict[WeakComposition, TCoeff] = {}
    rem = p
    max_rounds = 1000 + 10 * len(p.terms) * (
        max((e.weight() for e in p.terms), default=0) + 2
    ) * (w.hi - w.lo + 3)
    rounds = 0
    while not rem.is_zero():
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("slide expansion failed to terminate")
        exps = list(rem.terms)
        maximal = [
            m
            for m in exps
            if not any(e != m and leq_slide(m, e) for e in exps)
        ]
        lo = min(e.lo for e in maximal)
        hi = max(e.hi for e in maximal)
        m = min(maximal, key=lambda e: lex_key(e, lo, hi))
        c = rem.coefficient(m)
        out[m] = t_add(out.get(m, {}), c)
        rem = rem - slide_polynomial(m, w).scaled(c)
    return {e: tc for e, tc in out.items() if tc}


def expand_in_slides_reversed(
    p: TPolynomial, w: Window
) -> dict[WeakComposition, TCoeff]:
    """Peel taking the lexicographically last maximal exponent instead;
    must agree with expand_in_slides (used as a cross-check)."""
    for e in p.terms:
        if not e.supported_in(w):
            raise ValueError(f"exponent {e} not supported in window {w}")
    out: dict[WeakComposition, TCoeff] = {}
    rem = p
    rounds = 0
    while not rem.is_zero():
        rounds += 1
        if rounds > 100000:
            raise RuntimeError("slide expansion failed to terminate")
        exps = list(rem.terms)
        maximal = [
            m
            for m in exps
            if not any(e != m and leq_slide(m, e) for e in exps)
        ]
        lo = min(e.lo for e in maximal)
        hi = max(e.hi for e in maximal)
        m = max(maximal, key=lambda e: lex_key(e, lo, hi))
        c = rem.coefficient(m)
        out[m] = t_add(out.get(m, {}), c)
        rem = rem - slide_polynomial(m, w).scaled(c)
    return {e: tc for e, tc in out.items() if tc}


def fundamental_qsym(alpha: tuple[int, ...], m: int) -> TPolynomial:
    """Fundamental quasisymmetric polynomial F_alpha(x_1..x_m): weakly
    increasing words with a strict rise exactly where a new part starts."""
    w = Window(1, m)
    if sum(alpha) == 0:
        return TPolynomial.one(w)
    if any(p <= 0 for p in alpha):
        raise ValueError(f"parts must be positive, got {alpha}")
    breaks = set()
    s = 0
    for p in alpha[:-1]:
        s += p
        breaks.add(s)
    n = sum(alpha)
    terms: dict[WeakComposition, TCoeff] = {}

    def rec(k: int, prev: int, taken: list[int]):
        if k == n:
            e = WeakComposition.from_values(taken)
            tc = terms.setdefault(e, {})
            tc[0] = tc.get(0, 0) + 1
            return
        lo = prev + 1 if k in breaks else prev
        if k == 0:
            lo = 1
        for val in range(max(lo, 1), m + 1):
            taken.append(val)
            rec(k + 1, val, taken)
            taken.pop()

    rec(0, 1, [])
    return TPolynomial(w, terms)


def is_tail_strong(a: WeakComposition) -> bool:
    """Entries at nonpositive indices form a contiguous block ending at 0
    (vacuously true when the support is entirely positive)."""
    neg = [i for i in a.support() if i <= 0]
    if not neg:
        return True
    return neg[-1] == 0 and neg == list(range(neg[0], 1))


def nonpositive_flatten(a: WeakComposition) -> tuple[int, ...]:
    return tuple(v for i, v in a.items() if i <= 0)


def positive_part(a: WeakComposition) -> WeakComposition:
    return WeakComposition.from_items((i, v) for i, v in a.items() if i >= 1)


def concat(gamma: tuple[int, ...], delta: tuple[int, ...]) -> tuple[int, ...]:
    return gamma + delta


def near_concat(gamma: tuple[int, ...], delta: tuple[int, ...]) -> tuple[int, ...]:
    if not gamma or not delta:
        raise ValueError("near-concatenation needs nonempty factors")
    return gamma[:-1] + (gamma[-1] + delta[0],) + delta[1:]


def tail_strong_decomposition(
    a: WeakComposition, r: int
) -> list[tuple[tuple[int, ...], WeakComposition]]:
    """All ways to split the positive part of a tail-strong index across
    a concatenation or near-concatenation boundary.

    Returns pairs (alpha . gamma, delta-part placed back at its indices);
    the first factor feeds a fundamental polynomial on the nonpositive
    letters, the second a slide polynomial on x_1..x_r.
    """
    if not is_tail_strong(a):
        raise ValueError(f"{a} is not tail-strong")
    if any(i > r for i in a.support()):
        raise ValueError(f"support of {a} exceeds r={r}")
    alpha = nonpositive_flatten(a)
    pos_items = [(i, v) for i, v in a.items() if i >= 1]
    s = len(pos_items)
    out = []
    for c in range(s + 1):
        gamma = alpha + tuple(v for _, v in pos_items[:c])
        delta = WeakComposition.from_items(pos_items[c:])
        out.append((gamma, delta))
        if c < s:
            idx, part = pos_items[c]
            for g in range(1, part):
                gamma2 = alpha + tuple(
                    v for _, v in pos_items[:c]
                ) + (g,)
                delta_items = [(idx, part - g)] + pos_items[c + 1 :]
                out.append((gamma2, WeakComposition.from_items(delta_items)))
    return out


def fundamental_limit_index(a: WeakComposition) -> tuple[int, ...]:
    """Index of the fundamental polynomial surviving when every positive
    variable is set to zero; defined exactly for tail-strong a."""
    if not is_tail_strong(a):
        raise ValueError(f"{a} is not tail-strong")
    return a.flatten()


def backstable_slide_truncated(a: WeakComposition, w: Window) -> TPolynomial:
    """Slide polynomial over an arbitrary window; alias documenting that
    truncating the unbounded-window sum is the same enumeration."""
    return slide_polynomial(a, w)
