"""Command-line front end.

Every computation in the library is reachable from here.  Output is
human-readable by default (weak compositions in bar notation); --json
switches to one deterministic JSON document per invocation, with the
polynomial schema shared with :mod:`slidechrom.tpoly`.

Sweeps fan out over worker processes (--threads, default one per core);
per-path results are aggregated commutatively and sorted before
printing, so the thread count never changes the output.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .chromatic import (
    chromatic_brute,
    chromatic_via_slides,
    compare_chromatic,
    fundamental_expansion,
    verify_backstable,
    verify_fundamental_expansion,
)
from .compositions import Window, WeakComposition
from .dyck import PartialDyckPath, count_paths, dyck_graph, enumerate_paths, restriction_map
from .keys import (
    fixtures_dir,
    is_key_positive,
    key_expansion_of_chromatic,
    save_negative_fixtures,
    NegativeRecord,
)
from .posets import (
    descent_composition,
    graph_inversions,
    incomparability_poset,
    omega_labeling,
    orientation_from_perm,
    tightened_bounds,
)
from .slides import expand_in_slides, slide_polynomial
from .tpoly import TPolynomial, t_is_nonnegative, t_str


@dataclass
class CommandResult:
    status: str  # ok | mismatch | error
    payload: dict
    # human-readable lines, ignored under --json
    lines: list[str]

    @property
    def exit_code(self) -> int:
        return {"ok": 0, "mismatch": 1}.get(self.status, 2)


def _tc_json(tc) -> list[dict]:
    return [{"deg": d, "coef": str(tc[d])} for d in sorted(tc)]


def _expansion_json(exp) -> list[dict]:
    order = sorted(exp, key=lambda e: (e.lo, e.entries))
    return [{"index": a.to_json(), "t": _tc_json(exp[a])} for a in order]


def _expansion_lines(exp, indent: str = "  ") -> list[str]:
    order = sorted(exp, key=lambda e: (e.lo, e.entries))
    width = max((len(str(a)) for a in order), default=0)
    return [f"{indent}{str(a):<{width}}  {t_str(exp[a])}" for a in order]


def _parse_path(literal: str) -> PartialDyckPath:
    return PartialDyckPath.parse(literal)


def _window(args, default: Window) -> Window:
    if args.window is None:
        return default
    lo, hi = args.window
    return Window(lo, hi)


# ---------------------------------------------------------------- commands


def cmd_graph(args) -> CommandResult:
    path = _parse_path(args.path)
    g = dyck_graph(path)
    rho = restriction_map(path)
    payload = {
        "path": path.to_json(),
        "edges": [list(e) for e in g.sorted_edges()],
        "rho": list(rho),
        "dot": g.dot(),
    }
    lines = [
        f"path  {path.literal}",
        f"edges {' '.join(f'{i}{j}' if j < 10 else f'({i},{j})' for i, j in g.sorted_edges()) or '(none)'}",
        f"rho   ({', '.join(map(str, rho)) or ''})",
        "",
        g.dot(),
    ]
    return CommandResult("ok", payload, lines)


def cmd_chromatic(args) -> CommandResult:
    path = _parse_path(args.path)
    w = _window(args, Window(1, path.r))
    payload: dict = {"path": path.to_json(), "window": [w.lo, w.hi], "mode": args.mode}
    lines = [f"path   {path.literal}", f"window [{w.lo}, {w.hi}]"]
    status = "ok"
    if args.mode == "brute":
        poly = chromatic_brute(path, w)
        payload["polynomial"] = poly.to_json_dict()
        lines += ["", str(poly)]
    elif args.mode == "theorem":
        poly, exp = chromatic_via_slides(path, w)
        payload["polynomial"] = poly.to_json_dict()
        payload["expansion"] = _expansion_json(exp)
        lines += ["", "slide expansion:", *_expansion_lines(exp), "", str(poly)]
    else:
        rep = compare_chromatic(path, w)
        payload["polynomial"] = rep.brute.to_json_dict()
        payload["expansion"] = _expansion_json(rep.expansion)
        payload["equal"] = rep.equal
        payload["nonnegative"] = rep.nonnegative
        if not rep.ok:
            status = "mismatch"
            payload["mismatches"] = _expansion_json(dict(rep.mismatches))
        lines += [
            "",
            "slide expansion:",
            *_expansion_lines(rep.expansion),
            "",
            f"brute == theorem: {'yes' if rep.equal else 'NO'}",
            f"coefficients in N[t]: {'yes' if rep.nonnegative else 'NO'}",
        ]
    return CommandResult(status, payload, lines)


def cmd_slides(args) -> CommandResult:
    raw = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    poly = TPolynomial.loads(raw)
    w = _window(args, poly.window)
    if w != poly.window:
        poly = poly.with_window(w)
    exp = expand_in_slides(poly, w)
    payload = {
        "window": [w.lo, w.hi],
        "expansion": _expansion_json(exp),
        "nonnegative": all(t_is_nonnegative(tc) for tc in exp.values()),
    }
    lines = ["slide expansion:", *_expansion_lines(exp)]
    return CommandResult("ok", payload, lines)


def cmd_rdes(args) -> CommandResult:
    path = _parse_path(args.path)
    g = dyck_graph(path)
    rho = restriction_map(path)
    poset = incomparability_poset(g)
    rows = []
    for pi in itertools.permutations(range(1, g.n + 1)):
        o = orientation_from_perm(g, pi)
        om = omega_labeling(g, o)
        bb = tightened_bounds(pi, rho, poset)
        rd = descent_composition(pi, rho, poset)
        rows.append(
            {
                "pi": list(pi),
                "omega": [om[v - 1] for v in pi],
                "barrho": list(bb),
                "rdes": rd.to_json(),
                "rdes_str": str(rd),
                "inv": graph_inversions(g, pi),
            }
        )
    payload = {"path": path.to_json(), "rows": rows}
    lines = [f"path {path.literal}", ""]
    head = f"{'pi':<{2 * g.n}}  {'omega∘pi':<{2 * g.n}}  {'barrho':<{2 * g.n}}  inv  rdes"
    lines.append(head)
    for row in rows:
        lines.append(
            f"{''.join(map(str, row['pi'])):<{2 * g.n}}  "
            f"{''.join(map(str, row['omega'])):<{2 * g.n}}  "
            f"{','.join(map(str, row['barrho'])):<{2 * g.n}}  "
            f"{row['inv']:<3}  {row['rdes_str']}"
        )
    return CommandResult("ok", payload, lines)


def cmd_backstable(args) -> CommandResult:
    path = _parse_path(args.path)
    rep = verify_backstable(path, args.m)
    payload = {
        "path": path.to_json(),
        "m": args.m,
        "window": [rep.window.lo, rep.window.hi],
        "equal": rep.equal,
        "polynomial": rep.brute.to_json_dict(),
        "expansion": _expansion_json(rep.expansion),
    }
    status = "ok" if rep.equal else "mismatch"
    lines = [
        f"path   {path.literal}",
        f"window [{rep.window.lo}, {rep.window.hi}]  (m = {args.m})",
        "",
        "slide expansion (backstable indices kept):",
        *_expansion_lines(rep.expansion),
        "",
        f"brute == theorem over the extended window: {'yes' if rep.equal else 'NO'}",
    ]
    return CommandResult(status, payload, lines)


def cmd_qsym(args) -> CommandResult:
    path = _parse_path(args.path)
    exp = fundamental_expansion(path)
    order = sorted(exp)
    payload: dict = {
        "path": path.to_json(),
        "expansion": [
            {"alpha": list(al), "t": _tc_json(exp[al])} for al in order
        ],
    }
    width = max((len(",".join(map(str, al))) for al in order), default=0) + 2
    lines = [f"path {path.literal}", "", "fundamental expansion (negative alphabet):"]
    lines += [
        f"  {'(' + ','.join(map(str, al)) + ')':<{width}}  {t_str(exp[al])}"
        for al in order
    ]
    status = "ok"
    if args.m is not None:
        good = verify_fundamental_expansion(path, args.m)
        payload["m"] = args.m
        payload["verified"] = good
        lines += ["", f"truncation to {args.m} variables matches brute force: "
                  f"{'yes' if good else 'NO'}"]
        if not good:
            status = "mismatch"
    return CommandResult(status, payload, lines)


def cmd_keys(args) -> CommandResult:
    path = _parse_path(args.path)
    exp = key_expansion_of_chromatic(path)
    positive = is_key_positive(exp)
    negatives = {
        b: tc for b, tc in exp.items() if not t_is_nonnegative(tc)
    }
    payload = {
        "path": path.to_json(),
        "expansion": _expansion_json(exp),
        "key_positive": positive,
        "negatives": _expansion_json(negatives),
    }
    lines = [f"path {path.literal}", "", "key expansion over [1, r]:"]
    lines += _expansion_lines(exp)
    lines += ["", f"key positive: {'yes' if positive else 'NO — negative coefficients above'}"]
    # negatives are findings, not failures
    return CommandResult("ok", payload, lines)


def cmd_paths(args) -> CommandResult:
    total = count_paths(args.n, args.r)
    payload: dict = {"n": args.n, "r": args.r, "count": total}
    lines = [f"|P({args.n},{args.r})| = {total}"]
    if args.list:
        lits = [p.literal for p in enumerate_paths(args.n, args.r)]
        payload["paths"] = lits
        lines += lits
    return CommandResult("ok", payload, lines)


# ---------------------------------------------------------------- sweep

# worker globals: one key-expansion cache per process
_SWEEP_CACHE: dict = {}


def _sweep_one(task):
    mode, literal, m = task
    path = PartialDyckPath.parse(literal)
    if mode == "theorem":
        rep = compare_chromatic(path, Window(1, path.r))
        return {"path": literal, "ok": rep.ok}
    if mode == "backstable":
        rep = verify_backstable(path, m)
        return {"path": literal, "ok": rep.equal}
    if mode == "corollary":
        return {"path": literal, "ok": verify_fundamental_expansion(path, m)}
    if mode == "keys":
        exp = key_expansion_of_chromatic(path, _SWEEP_CACHE)
        recs = [
            {
                "composition": b.to_json(),
                "composition_str": str(b),
                "t": _tc_json(tc),
            }
            for b, tc in sorted(exp.items(), key=lambda kv: (kv[0].lo, kv[0].entries))
            if not t_is_nonnegative(tc)
        ]
        return {"path": literal, "ok": True, "findings": recs}
    raise ValueError(mode)


def cmd_sweep(args) -> CommandResult:
    if args.n > 6 and not args.force:
        return CommandResult(
            "error",
            {"error": f"refusing n={args.n} > 6 without --force"},
            [f"refusing n={args.n} > 6 without --force"],
        )
    mode = args.mode
    m = args.m if args.m is not None else (2 if mode == "backstable" else args.n)
    tasks = []
    for r in range(args.r + 1):
        for p in enumerate_paths(args.n, r):
            tasks.append((mode, p.literal, m))
    threads = args.threads or os.cpu_count() or 1
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sweep_one, tasks, chunksize=64))
    else:
        results = [_sweep_one(t) for t in tasks]
    # aggregation is commutative: order by (r, literal) for stable output
    results.sort(key=lambda d: (PartialDyckPath.parse(d["path"]).r, d["path"]))
    failures = [d for d in results if not d["ok"]]
    findings = [d for d in results if d.get("findings")]
    payload: dict = {
        "mode": mode,
        "n": args.n,
        "r_max": args.r,
        "paths": len(results),
        "failures": [d["path"] for d in failures],
        "results": results,
    }
    if mode in ("backstable", "corollary"):
        payload["m"] = m
    lines = []
    for d in results:
        if mode == "keys":
            tag = f"finding ({len(d['findings'])})" if d.get("findings") else "ok"
        else:
            tag = "ok" if d["ok"] else "FAIL"
        lines.append(f"{d['path']:<40} {tag}")
    if mode == "keys":
        bad = sum(len(d["findings"]) for d in findings)
        payload["findings"] = [
            {"path": d["path"], "findings": d["findings"]} for d in findings
        ]
        lines.append(
            f"-- {len(results)} paths, {len(findings)} with negative key "
            f"coefficients ({bad} records)"
        )
        status = "ok"  # negatives are findings, not failures
    else:
        lines.append(f"-- {len(results)} paths, {len(failures)} failures")
        status = "ok" if not failures else "mismatch"
    return CommandResult(status, payload, lines)


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="slidechrom",
        description="chromatic polynomials of Dyck graphs in the slide basis",
    )
    ap.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_window(p):
        p.add_argument(
            "--window", nargs=2, type=int, metavar=("LO", "HI"), default=None
        )

    p = sub.add_parser("graph", help="edges, restriction map and DOT for a path")
    p.add_argument("path", help='path literal, e.g. "ENEENENEE@3,3"')
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a path's graph")
    p.add_argument("path")
    p.add_argument("--mode", choices=("brute", "theorem", "both"), default="both")
    add_window(p)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("slides", help="expand a polynomial file in slide polynomials")
    p.add_argument("file", help="polynomial JSON file, or - for stdin")
    add_window(p)
    p.set_defaults(func=cmd_slides)

    p = sub.add_parser("rdes", help="per-permutation descent composition table")
    p.add_argument("path")
    p.set_defaults(func=cmd_rdes)

    p = sub.add_parser("backstable", help="verify the truncation identity for a path")
    p.add_argument("path")
    p.add_argument("--m", type=int, default=2, help="extra nonpositive columns")
    p.set_defaults(func=cmd_backstable)

    p = sub.add_parser("qsym", help="fundamental expansion on the negative alphabet")
    p.add_argument("path")
    p.add_argument("--m", type=int, default=None, help="verify truncation to m variables")
    p.set_defaults(func=cmd_qsym)

    p = sub.add_parser("keys", help="key expansion of the chromatic polynomial")
    p.add_argument("path")
    p.set_defaults(func=cmd_keys)

    p = sub.add_parser("sweep", help="verify a statement over all paths with given n, r <= R")
    p.add_argument("mode", choices=("theorem", "backstable", "corollary", "keys"))
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--threads", type=int, default=None, help="worker count (default: cores)")
    p.add_argument("--force", action="store_true", help="allow n > 6")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("paths", help="count (or list) partial Dyck paths")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_paths)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        result = CommandResult("error", {"error": str(exc)}, [f"error: {exc}"])
    doc = {"status": result.status, "command": args.command, "payload": result.payload}
    if args.json:
        sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        for line in result.lines:
            sys.stdout.write(line + "\n")
        if result.status != "ok":
            sys.stdout.write(f"status: {result.status}\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
