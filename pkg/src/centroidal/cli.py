"""Command-line front end.

Exit status: 0 on success, 1 when a check fails (invalid basis, sweep
violation), 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from pathlib import Path

from . import constructions
from .approx import approx_cd
from .bounds import bounds_report
from .exact import exact_cd
from .graph import FAMILIES, Graph, GraphError, all_pairs_distances, generate, parse_edge_list, to_edge_list
from .locate import is_centroidal_locating, rank_vector
from .sweep import CSV_COLUMNS, MAX_EXHAUSTIVE_N, sweep_exhaustive, sweep_sample

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_graph(path: str) -> tuple[Graph, str]:
    text = _read_text(path)
    return parse_edge_list(text), hashlib.sha256(text.encode()).hexdigest()


def _load_basis(path: str, n: int) -> list[int]:
    ids = []
    for line_no, raw in enumerate(_read_text(path).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = int(line)
        except ValueError:
            raise InputError(f"{path}:{line_no}: not a vertex id: {line!r}") from None
        if not 0 <= v < n:
            raise InputError(f"{path}:{line_no}: vertex {v} out of range 0..{n - 1}")
        ids.append(v)
    if not ids:
        raise InputError(f"{path}: empty basis")
    return ids


def _emit(args, results: dict, digest: str | None, started: float, counters: dict | None = None) -> None:
    report = {
        "command": args.argv,
        "input_digest": digest,
        "results": results,
        "wall_time": round(time.perf_counter() - started, 6),
        "counters": counters or {},
    }
    print(json.dumps(report, sort_keys=True, indent=2))


def _connected(g: Graph):
    dm = all_pairs_distances(g)
    if not dm.connected:
        raise InputError("graph is disconnected; centroidal dimension is only defined for connected graphs")
    return dm


# --- gen --------------------------------------------------------------------

def _build(family: str, params: list[str]):
    """Return (graph, basis or None, provenance)."""
    try:
        if family == "extremal":
            if len(params) != 2:
                raise InputError("usage: gen extremal NAME N")
            inst = constructions.extremal_family(params[0], int(params[1]))
        elif family in ("fig2a", "fig2b"):
            inst = constructions.fig2_fixtures()[family == "fig2b"]
        elif family in constructions.CONSTRUCTIONS:
            if len(params) != 1:
                raise InputError(f"usage: gen {family} N")
            inst = constructions.CONSTRUCTIONS[family](int(params[0]))
        elif family in FAMILIES:
            g = generate(family, [int(p) for p in params])
            return g, None, f"{family} {' '.join(params)}".strip()
        else:
            choices = sorted({*FAMILIES, *constructions.CONSTRUCTIONS, "extremal", "fig2a", "fig2b"})
            raise InputError(f"unknown family {family!r}; choose from {', '.join(choices)}")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return inst.graph, inst.basis, inst.provenance


def cmd_gen(args) -> int:
    g, basis, provenance = _build(args.family, args.params)
    if args.output in (None, "-"):
        text = to_edge_list(g, comment=provenance)
        if basis is not None:
            text = f"# basis: {' '.join(map(str, basis))}\n" + text
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.output)
    out.write_text(to_edge_list(g, comment=provenance), encoding="utf-8")
    if basis is not None:
        sidecar = Path(args.basis_out) if args.basis_out else out.with_name(out.name + ".basis")
        sidecar.write_text("".join(f"{v}\n" for v in basis), encoding="utf-8")
        print(f"wrote {out} (n={g.n}, m={g.m}) and {sidecar} ({len(basis)} vertices)")
    else:
        print(f"wrote {out} (n={g.n}, m={g.m})")
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, digest = _load_graph(args.graph)
    dm = _connected(g)
    basis = _load_basis(args.basis, g.n)
    check = is_centroidal_locating(dm, basis)
    vectors = {x: str(rank_vector(dm, x, basis)) for x in range(g.n)} if args.rank_vectors else None
    if args.json:
        results = {"valid": check.ok, "witness": list(check.witness) if check.witness else None, "size": len(set(basis))}
        if vectors is not None:
            results["rank_vectors"] = {str(x): v for x, v in vectors.items()}
        _emit(args, results, digest, started)
    else:
        if check:
            print(f"valid: {len(set(basis))} vertices locate all {g.n} vertices")
        else:
            x, y = check.witness
            print(f"invalid: vertices {x} and {y} share rank vector {rank_vector(dm, x, basis)}")
        if vectors is not None:
            for x, v in vectors.items():
                print(f"  r({x}) = {v}")
    return EXIT_OK if check else EXIT_VIOLATION


# --- cd ---------------------------------------------------------------------

def cmd_cd(args) -> int:
    started = time.perf_counter()
    g, digest = _load_graph(args.graph)
    dm = _connected(g)
    if args.mode == "exact":
        res = exact_cd(g, args.size_cap, dm=dm)
        results = {"mode": "exact", "value": res.value, "basis": list(res.basis), "certified": res.certified}
        counters = {"nodes_examined": res.nodes_examined, "per_size": {str(k): v for k, v in res.levels.items()}}
        if args.json:
            _emit(args, results, digest, started, counters)
        else:
            tag = "" if res.certified else " (NOT certified: size cap reached, best known set shown)"
            print(f"CD = {res.value}{tag}")
            print(f"basis: {' '.join(map(str, res.basis))}")
            print(f"candidates examined: {res.nodes_examined}")
        return EXIT_OK

    if g.n < 2:
        raise InputError("approximation needs at least two vertices")
    res = approx_cd(g, dm)
    report = bounds_report(g, dm=dm, approx=len(res.basis), budget=args.budget)
    results = {
        "mode": "approx",
        "value": len(res.basis),
        "basis": list(res.basis),
        "cover": [list(p) for p in res.cover],
        "cover_basis_size": len(res.cover_basis),
        "fallback_used": res.fallback_used,
        "greedy_trace": [[list(p), gain] for p, gain in res.greedy_trace],
        "bounds": report.to_json(),
    }
    if args.json:
        _emit(args, results, digest, started, {"greedy_steps": len(res.cover)})
    else:
        print(f"approximate CD <= {len(res.basis)}" + (" (trivial set)" if res.fallback_used else ""))
        print(f"basis: {' '.join(map(str, res.basis))}")
        print(f"greedy cover: {len(res.cover)} pairs covering {len(res.cover_basis)} vertices")
        for (a, b), gain in res.greedy_trace:
            print(f"  pick {{{a},{b}}} +{gain}")
        print(f"bounds: {report.lower()} <= CD <= {report.upper()}")
        for name, e in report.entries.items():
            if e.applicable:
                print(f"  {name:20s} {e.kind:5s} {e.value}  [{e.anchor}]")
    return EXIT_OK


def cmd_bounds(args) -> int:
    started = time.perf_counter()
    g, digest = _load_graph(args.graph)
    dm = _connected(g)
    report = bounds_report(g, dm=dm, budget=args.budget)
    if args.json:
        _emit(args, report.to_json(), digest, started)
    else:
        print(f"n={report.n} m={report.m} diameter={report.diameter}: {report.lower()} <= CD <= {report.upper()}")
        for name, e in report.entries.items():
            print(f"  {name:20s} {e.kind:5s} {'-' if e.value is None else e.value:>4}  "
                  f"{'' if e.applicable else '(n/a) '}[{e.anchor}]")
    return EXIT_OK


# --- sweep ------------------------------------------------------------------

def cmd_sweep(args) -> int:
    started = time.perf_counter()
    if args.sample:
        rows = sweep_sample(args.sample, args.n, args.p, args.seed, budget=args.budget)
    else:
        if args.max_n is None:
            raise InputError("give MAX_N or --sample COUNT")
        if args.max_n > MAX_EXHAUSTIVE_N:
            raise InputError(f"exhaustive sweep limited to MAX_N <= {MAX_EXHAUSTIVE_N}; use --sample")
        rows = sweep_exhaustive(args.max_n, budget=args.budget)

    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    total = violations = 0
    try:
        for row in rows:
            total += 1
            for v in row.violations:
                violations += 1
                print(f"VIOLATION n={row.n} edges={row.graph.sorted_edges()}: {v}", file=sys.stderr)
            if args.only_extremal and row.cd != row.n - 1 and row.family is None:
                continue
            writer.writerow(row.csv_row())
    finally:
        if out is not sys.stdout:
            out.close()
    elapsed = time.perf_counter() - started
    print(f"{total} graphs, {violations} violations, {elapsed:.1f}s", file=sys.stderr)
    return EXIT_VIOLATION if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="centroidal", description="Centroidal locating sets in graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph (and basis sidecar for constructions)")
    p.add_argument("family", help="path, cycle, ..., diam2, diam3, cycle-basis, path-basis, extremal, fig2a, fig2b")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", help="edge-list path (default: stdout)")
    p.add_argument("--basis-out", help="basis sidecar path (default: OUTPUT.basis)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a centroidal locating set")
    p.add_argument("graph")
    p.add_argument("basis", help="file with one vertex id per line")
    p.add_argument("--rank-vectors", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cd", help="centroidal dimension, exact or approximate")
    p.add_argument("mode", choices=["exact", "approx"])
    p.add_argument("graph")
    p.add_argument("--size-cap", type=int)
    p.add_argument("--budget", type=int, default=10_000, help="path-enumeration budget per vertex pair")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cd)

    p = sub.add_parser("bounds", help="evaluate every bound for a graph")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="check all inequalities on small or random graphs, CSV out")
    p.add_argument("max_n", nargs="?", type=int)
    p.add_argument("--only-extremal", action="store_true")
    p.add_argument("--sample", type=int, metavar="COUNT")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)
    args.argv = ["centroidal", *argv]
    try:
        return args.func(args)
    except (InputError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
