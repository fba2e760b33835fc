"""Command line front end.

Exit codes: 0 every check passed, 1 a check failed, 2 usage or input error.
Reports go to stdout as JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .constructions import FAMILIES, build_family
from .extendability import (
    ExtensionSpec,
    GraphError,
    is_cycle_extendable_graph,
    is_set_extendable,
)
from .generators import GenSpec, attempt_seed, sample_in_class
from .graph import Cycle
from .hamiltonicity import CapacityError, HamTable, hamiltonian_cycle, is_pancyclic, subset_cap
from .io import FormatError, file_sha256, format_dot, format_edgelist, read_edgelist
from .recognition import (
    find_induced_pattern,
    is_chordal,
    is_strongly_chordal,
    k_sun,
    minimum_vertex_cut,
    vertex_connectivity,
)

log = logging.getLogger("cycext")

CHECKS = ("chordal", "strongly_chordal", "hamiltonian", "pancyclic", "connectivity")

# filter combinations under which a published result promises {1}-extendability
PROMISED = (
    frozenset({"fan4_free", "k5e_twins_ok"}),
    frozenset({"fan4_free", "abar_free"}),
    frozenset({"fan3_free"}),
)


class UsageError(Exception):
    pass


def _report(input_desc: dict, checks: list[dict]) -> dict:
    return {
        "schema": 1,
        "tool": "cycext",
        "version": __version__,
        "input": input_desc,
        "checks": checks,
        "pass": all(c["status"] != "FAIL" for c in checks),
    }


def _emit(report: dict) -> int:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if report["pass"] else 1


def _load(path: str):
    try:
        return read_edgelist(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except (FormatError, UnicodeDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _table_or_none(g):
    return HamTable(g) if g.n <= subset_cap() else None


# -- construct ---------------------------------------------------------------------


def cmd_construct(args) -> int:
    params = {"t": args.t, "k": args.k, "n": args.n, "p": args.p, "q": args.q}
    if args.S is not None:
        params["S"] = ExtensionSpec.parse(args.S)
    try:
        lg = build_family(args.family, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = lg.graph
    comment = [f"family={lg.family} params={json.dumps(lg.params, sort_keys=True)}"]
    text = format_dot(g, lg.heavy, lg.family) if args.format == "dot" else format_edgelist(g, comment)
    counts = f"vertices: {g.n} edges: {g.num_edges()}"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(counts)
    else:
        sys.stdout.write(text)
        print(counts, file=sys.stderr)
    if args.figure:
        from .plotting import draw_labeled_graph

        draw_labeled_graph(lg, args.figure)
    return 0


# -- verify ------------------------------------------------------------------------


def _timed(name, fn):
    t0 = time.perf_counter()
    entry = {"name": name}
    entry.update(fn())
    entry["runtime_s"] = round(time.perf_counter() - t0, 6)
    return entry


def _check_chordal(g):
    if is_chordal(g):
        return {"status": "PASS"}
    return {"status": "FAIL", "note": "maximum cardinality search order is not a perfect "
                                      "elimination ordering; the graph has a hole"}


def _check_strongly_chordal(g):
    if is_strongly_chordal(g):
        return {"status": "PASS"}
    if not is_chordal(g):
        return {"status": "FAIL", "note": "not chordal"}
    for k in range(3, g.n // 2 + 1):
        occ = find_induced_pattern(g, k_sun(k))
        if occ:
            return {"status": "FAIL", "witness": {"pattern": f"{k}-sun", "occurrence": occ}}
    return {"status": "FAIL", "note": "greedy simple elimination got stuck"}


def _check_hamiltonian(g, table):
    c = hamiltonian_cycle(g, table)
    if c is None:
        return {"status": "FAIL", "note": "exhaustive search exhausted"}
    return {"status": "PASS", "witness": {"cycle": c.names(g)}}


def _check_pancyclic(g, table):
    if table is None:
        return {"status": "SKIP", "note": f"n={g.n} exceeds subset cap {subset_cap()}"}
    if is_pancyclic(g, table):
        return {"status": "PASS"}
    present = set(int(x) for x in table.popcount[table.ham])
    missing = [ell for ell in range(3, g.n + 1) if ell not in present]
    return {"status": "FAIL", "witness": {"missing_lengths": missing},
            "note": "exhaustive search exhausted"}


def _check_connectivity(g, minimum):
    if g.n < 2:
        return {"status": "FAIL", "note": "fewer than 2 vertices"}
    kappa = vertex_connectivity(g)
    entry = {"status": "PASS" if kappa >= minimum else "FAIL", "value": kappa,
             "required": minimum}
    cut = minimum_vertex_cut(g)
    if cut is not None:
        entry["witness"] = {"cut": g.names_of(cut)}
    return entry


def cmd_verify(args) -> int:
    g = _load(args.file)
    wanted = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(","))
    unknown = [c for c in wanted if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)} or all")
    table = _table_or_none(g) if {"hamiltonian", "pancyclic"} & set(wanted) else None
    runners = {
        "chordal": lambda: _check_chordal(g),
        "strongly_chordal": lambda: _check_strongly_chordal(g),
        "hamiltonian": lambda: _check_hamiltonian(g, table),
        "pancyclic": lambda: _check_pancyclic(g, table),
        "connectivity": lambda: _check_connectivity(g, args.min_connectivity),
    }
    checks = [_timed(name, runners[name]) for name in wanted]
    desc = {"file": str(args.file), "sha256": file_sha256(args.file), "n": g.n,
            "m": g.num_edges()}
    return _emit(_report(desc, checks))


# -- extend-check -----------------------------------------------------------------


def cmd_extend_check(args) -> int:
    g = _load(args.file)
    spec = ExtensionSpec.parse(args.S)
    desc = {"file": str(args.file), "sha256": file_sha256(args.file), "n": g.n, "S": sorted(spec.S)}
    if args.cycle:
        names = [tok for tok in args.cycle.replace(",", " ").split() if tok]
        try:
            cycle = Cycle.from_names(g, names)
        except GraphError as exc:
            raise UsageError(f"invalid cycle: {exc}") from None
        table = _table_or_none(g)

        def run():
            try:
                Z = is_set_extendable(g, cycle.vertex_set, spec, table)
            except GraphError as exc:
                raise UsageError(str(exc)) from None
            if Z is None:
                return {"status": "FAIL", "result": "NOT-EXTENDABLE",
                        "witness": {"cycle": cycle.names(g)}, "note": "exhaustive search exhausted"}
            ext = (table.witness(cycle.vertex_set | Z) if table is not None else None)
            witness = {"added": g.names_of(Z)}
            if ext is not None:
                witness["extension"] = ext.names(g)
            return {"status": "PASS", "result": "EXTENDABLE", "witness": witness}

        checks = [_timed("cycle_extendable", run)]
    else:
        table = HamTable(g)

        def run():
            verdict = is_cycle_extendable_graph(g, spec, table)
            entry = {"status": "PASS" if verdict.ok else "FAIL", "result": verdict.status,
                     "cycles_checked": verdict.cycles_checked,
                     "violations": len(verdict.violations)}
            if verdict.violations:
                entry["witness"] = {"cycles": [c.names(g) for c in
                                               verdict.violation_cycles(table)[: args.limit]]}
            return entry

        checks = [_timed("graph_extendable", run)]
    return _emit(_report(desc, checks))


# -- search ----------------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad vertex range {text!r}; use N or LO:HI") from None


def class_promises_extension(filters, spec: ExtensionSpec) -> bool:
    filters = frozenset(filters)
    return 1 in spec.S and any(p <= filters for p in PROMISED)


def cmd_search(args) -> int:
    lo, hi = _parse_range(args.n)
    spec = ExtensionSpec.parse(args.S)
    filters = frozenset(f.strip() for f in args.filters.split(",") if f.strip())
    promised = class_promises_extension(filters, spec)
    findings = []
    violations = 0
    for trial in range(args.trials):
        n = lo + trial % (hi - lo + 1)
        seed = attempt_seed(args.seed, trial)
        try:
            gen = GenSpec(n, seed, args.density, filters)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        g = sample_in_class(gen, args.max_attempts)
        row = {"trial": trial, "seed": seed, "n": n}
        if g is None:
            row.update(status="no-sample", violations=0)
        else:
            verdict = is_cycle_extendable_graph(g, spec, HamTable(g))
            row.update(status=verdict.status, violations=len(verdict.violations))
            if verdict.violations:
                violations += 1
                row["violating_sets"] = [g.names_of(W) for W in verdict.violations[:5]]
                row["edges"] = [list(e) for e in g.edge_names()]
        findings.append(row)
        print(json.dumps(row), flush=True)
    print(f"trials={args.trials} in_class={sum(r['status'] != 'no-sample' for r in findings)} "
          f"violating={violations} promised={promised}", file=sys.stderr)
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "findings.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["trial", "seed", "n", "status", "violations"])
            for r in findings:
                w.writerow([r["trial"], r["seed"], r["n"], r["status"], r["violations"]])
        from .plotting import plot_search_summary

        plot_search_summary(findings, out / "summary.png")
    return 1 if (violations and promised) else 0


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycext", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cycext {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a named construction to a file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("t", "k", "n", "p", "q"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--S", help="extension set, e.g. 1,2,3")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--figure", help="also render a PNG drawing to this path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run class and Hamiltonicity checks on a graph file")
    p.add_argument("file")
    p.add_argument("--checks", default="all", help=f"comma list of {', '.join(CHECKS)}, or all")
    p.add_argument("--min-connectivity", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend-check", help="S-extendability of one cycle or of every cycle")
    p.add_argument("file")
    p.add_argument("--S", default="1")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--cycle", help="vertex names along the cycle, comma or space separated")
    mode.add_argument("--all", action="store_true", help="check every non-Hamiltonian cycle")
    p.add_argument("--limit", type=int, default=10, help="violation witnesses to print")
    p.set_defaults(func=cmd_extend_check)

    p = sub.add_parser("search", help="sample Hamiltonian chordal graphs and test extendability")
    p.add_argument("--n", default="8", help="vertex count N or range LO:HI")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--filters", default="", help="comma list of class filters")
    p.add_argument("--S", default="1")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-attempts", type=int, default=200)
    p.add_argument("--report-dir", help="write findings.csv and summary.png here")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, CapacityError, ValueError) as exc:
        print(f"cycext: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
