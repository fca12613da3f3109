#!/usr/bin/env python3
"""Key-basis coefficients go negative on six vertices.

Slide expansions of these chromatic polynomials are always nonnegative;
expanding in key polynomials instead stays positive on every graph with
up to five vertices, then fails.  This demo replays the pinned witness:
a six-vertex graph whose key expansion carries two -t^2 coefficients.
Recomputing takes a few seconds; finding it from scratch means scanning
about ten thousand paths (``slidechrom sweep keys 6 5``).
"""

from slidechrom import (
    PartialDyckPath,
    TPolynomial,
    Window,
    chromatic_brute,
    dyck_graph,
    key_expansion_of_chromatic,
    key_polynomial,
    load_negative_fixtures,
    restriction_map,
)
from slidechrom.tpoly import t_is_nonnegative, t_str

records = load_negative_fixtures()
lit = records[0].path
path = PartialDyckPath.parse(lit)
print(f"witness path  {lit}")
print(f"edges         {dyck_graph(path).sorted_edges()}")
print(f"restriction   {restriction_map(path)}")
print()

expansion = key_expansion_of_chromatic(path)
print(f"key expansion has {len(expansion)} terms; the offending ones:")
for b in sorted(expansion, key=lambda e: (e.lo, e.entries)):
    tc = expansion[b]
    if not t_is_nonnegative(tc):
        print(f"  kappa[{b}]  coefficient {t_str(tc)}")
print()

# Independent confirmation: summing key polynomials against these
# coefficients reproduces the brute-force chromatic polynomial exactly.
w = Window(1, path.r)
total = TPolynomial.zero(w)
for b, tc in expansion.items():
    total = total + key_polynomial(b, path.r).scaled(tc)
ok = total == chromatic_brute(path, w)
print(f"reconstruction against brute force: {'exact' if ok else 'MISMATCH'}")
print()
print(f"{len(records)} pinned records over {len({r.path for r in records})} paths;")
print("rerun the full scan with:  slidechrom sweep keys 6 6")
