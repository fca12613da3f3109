"""Sparse exact polynomials in variables x_i (i ranging over a window of
integers, possibly nonpositive) with coefficients in Z[t].

A t-coefficient is a dict {t_degree: nonzero int}; all arithmetic is
arbitrary-precision integer arithmetic.  TPolynomial maps exponent
vectors (WeakComposition) to t-coefficients and carries a Window as
metadata describing where exponents are allowed to live.  Operations
never silently truncate; restriction to a window is explicit.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .compositions import WeakComposition, Window, lex_key

TCoeff = dict  # {int: int}, no zero values stored


def t_const(c: int) -> TCoeff:
    return {0: c} if c else {}


def t_monomial(deg: int, c: int = 1) -> TCoeff:
    return {deg: c} if c else {}


def t_add(a: Mapping[int, int], b: Mapping[int, int]) -> TCoeff:
    out = dict(a)
    for d, c in b.items():
        v = out.get(d, 0) + c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


def t_neg(a: Mapping[int, int]) -> TCoeff:
    return {d: -c for d, c in a.items()}

def t_scale(a: Mapping[int, int], k: int) -> TCoeff:
    if not k:
        return {}
    return {d: c * k for d, c in a.items()}


def t_mul(a: Mapping[int, int], b: Mapping[int, int]) -> TCoeff:
    out: TCoeff = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            v = out.get(d, 0) + c1 * c2
            if v:
                out[d] = v
            else:
                out.pop(d, None)
    return out


def t_shift(a: Mapping[int, int], k: int) -> TCoeff:
    """Multiply by t^k."""
    return {d + k: c for d, c in a.items()}


def t_is_nonnegative(a: Mapping[int, int]) -> bool:
    return all(c >= 0 for c in a.values())


def t_str(a: Mapping[int, int]) -> str:
    if not a:
        return "0"
    parts = []
    for d in sorted(a):
        c = a[d]
        if d == 0:
            parts.append(str(c))
            continue
        tp = "t" if d == 1 else f"t^{d}"
        if c == 1:
            parts.append(tp)
        elif c == -1:
            parts.append(f"-{tp}")
        else:
            parts.append(f"{c}{tp}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class TPolynomial:
    """Exact sparse polynomial over Z[t] in window-indexed x variables.

    terms: {WeakComposition: TCoeff}.  Canonical form stores no zero
    t-coefficients and no empty terms.  Equality compares terms only;
    the window is bookkeeping for which variables are in play.
    """

    __slots__ = ("window", "terms")

    def __init__(self, window: Window, terms: Mapping[WeakComposition, Mapping[int, int]] = ()):
        clean: dict[WeakComposition, TCoeff] = {}
        src = terms.items() if isinstance(terms, Mapping) else terms
        for e, tc in src:
            tc = {d: c for d, c in tc.items() if c}
            if not tc:
                continue
            if not e.supported_in(window):
                raise ValueError(
                    f"exponent {e} outside window [{window.lo}, {window.hi}]"
                )
            clean[e] = t_add(clean.get(e, {}), tc) if e in clean else tc
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TPolynomial is immutable")

    @classmethod
    def zero(cls, window: Window) -> "TPolynomial":
        return cls(window, {})

    @classmethod
    def one(cls, window: Window) -> "TPolynomial":
        return cls(window, {WeakComposition(): {0: 1}})

    @classmethod
    def monomial(
        cls, e: WeakComposition, window: Window, tc: Mapping[int, int] | None = None
    ) -> "TPolynomial":
        return cls(window, {e: dict(tc) if tc is not None else {0: 1}})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: WeakComposition) -> TCoeff:
        return dict(self.terms.get(e, {}))

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        w = self.window.union(other.window)
        terms = dict(self.terms)
        for e, tc in other.terms.items():
            merged = t_add(terms.get(e, {}), tc)
            if merged:
                terms[e] = merged
            else:
                terms.pop(e, None)
        return TPolynomial(w, terms)

    def __neg__(self) -> "TPolynomial":
        return TPolynomial(self.window, {e: t_neg(tc) for e, tc in self.terms.items()})

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        return self + (-other)

    def __mul__(self, other: "TPolynomial") -> "TPolynomial":
        w = self.window.union(other.window)
        terms: dict[WeakComposition, TCoeff] = {}
        for e1, t1 in self.terms.items():
            for e2, t2 in other.terms.items():
                e = e1.added(e2)
                merged = t_add(terms.get(e, {}), t_mul(t1, t2))
                if merged:
                    terms[e] = merged
                else:
                    terms.pop(e, None)
        return TPolynomial(w, terms)

    def scaled(self, tc: Mapping[int, int]) -> "TPolynomial":
        """Multiply by an element of Z[t]."""
        out: dict[WeakComposition, TCoeff] = {}
        for e, t1 in self.terms.items():
            v = t_mul(t1, tc)
            if v:
                out[e] = v
        return TPolynomial(self.window, out)

    def scale_t(self, k: int) -> "TPolynomial":
        """Multiply by t^k."""
        return TPolynomial(
            self.window, {e: t_shift(tc, k) for e, tc in self.terms.items()}
        )

    def shifted(self, k: int) -> "TPolynomial":
        """Shift every variable index by k (x_i -> x_{i+k})."""
        return TPolynomial(
            Window(self.window.lo + k, self.window.hi + k),
            {e.shifted(k): dict(tc) for e, tc in self.terms.items()},
        )

    def with_window(self, w: Window) -> "TPolynomial":
        """Same terms, new window metadata.  Raises if a term escapes w."""
        return TPolynomial(w, self.terms)

    def restricted(self, w: Window) -> "TPolynomial":
        """Drop terms whose exponent support leaves w.  The only truncation."""
        return TPolynomial(
            w, {e: dict(tc) for e, tc in self.terms.items() if e.supported_in(w)}
        )

    def evaluate_all_ones(self) -> TCoeff:
        """Set every x_i = 1, leaving a polynomial in t."""
        out: TCoeff = {}
        for tc in self.terms.values():
            out = t_add(out, tc)
        return out

    def total_degrees(self) -> set[int]:
        return {e.weight() for e in self.terms}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("TPolynomial is not hashable")

    def _sorted_terms(self) -> list[tuple[WeakComposition, TCoeff]]:
        if not self.terms:
            return []
        lo = min(e.lo for e in self.terms)
        hi = max(e.hi for e in self.terms)
        return sorted(self.terms.items(), key=lambda it: lex_key(it[0], lo, hi))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, tc in self._sorted_terms():
            def var(i: int) -> str:
                return f"x({i})" if i < 0 else f"x{i}"

            mono = " ".join(
                var(i) if v == 1 else f"{var(i)}^{v}" for i, v in e.items()
            ) or "1"
            cs = t_str(tc)
            if cs == "1":
                bits.append(mono)
            elif mono == "1":
                bits.append(f"({cs})")
            else:
                bits.append(f"({cs})*{mono}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"TPolynomial(window={tuple(self.window)}, {len(self.terms)} terms)"

    def to_json_dict(self) -> dict:
        terms = []
        for e, tc in self._sorted_terms():
            terms.append(
                {
                    "exp": e.to_json(),
                    "t": [
                        {"deg": d, "coef": str(tc[d])} for d in sorted(tc)
                    ],
                }
            )
        return {"window": [self.window.lo, self.window.hi], "terms": terms}

    @classmethod
    def from_json_dict(cls, d: dict) -> "TPolynomial":
        w = Window(d["window"][0], d["window"][1])
        terms = {}
        for item in d["terms"]:
            e = WeakComposition.from_json(item["exp"])
            terms[e] = {x["deg"]: int(x["coef"]) for x in item["t"]}
        return cls(w, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)

    @classmethod
    def loads(cls, s: str) -> "TPolynomial":
        return cls.from_json_dict(json.loads(s))
