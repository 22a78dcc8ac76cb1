"""Command-line front end: single computations, batch checks, exports.

Subcommands
    rpoly     print one polynomial (signed or nonnegative variant)
    verify    run a batch identity check over S_n or over one interval
    graph     export the Bruhat graph of S_n as DOT or JSON
    paths     list monotone paths or V-paths between two permutations
    classify  S-interval classification report for an interval (JSON)
    table     CSV dump of the nonnegative variant over all of S_n

Exit codes: 0 computed/verified, 1 verification counterexample,
2 usage or parse error.  Nothing else.

Batch runs execute on a single worker with one shared memo table; the
KLRPOLY_THREADS environment variable is honored as an upper bound on
worker count (any value >= 1 admits the single worker) and is rejected
with exit code 2 otherwise.  All output is deterministic for fixed
inputs and flags, and JSON documents carry "schema": "kl-rpoly/1".
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field

from klrpoly.bruhat import arcs_from, bruhat_leq, interval
from klrpoly.involution import (
    FIXED,
    canonical_fixed_point,
    classify_s_interval,
    interval_pairing,
    parity_census,
    refined_reflect,
    refinement_sum,
    reflect,
)
from klrpoly.paths import format_path, format_vpath, monotone_paths, path_to_json, vpaths
from klrpoly.perm import Permutation, length, parse_permutation, symmetric_group
from klrpoly.poly import ONE, ZERO
from klrpoly.rpoly import RTable, inversion_sum, rpoly_from_rtilde, rpoly_r, rtilde, rtilde_by_paths

SCHEMA = "kl-rpoly/1"

# Largest n each verify target accepts without an explicit --max-n.
DEFAULT_BUDGETS = {
    "inversion": 5,
    "equidist": 5,
    "dyer": 4,
    "involution": 4,
    "refinement": 4,
    "changevar": 4,
}

GRAPH_MAX_N = 6
TABLE_DEFAULT_MAX_N = 5


@dataclass
class RunReport:
    """Aggregated outcome of one verify run; failures carry replay inputs."""

    command: str
    parameters: dict
    status: str = "pass"
    counters: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "run-report",
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "counters": self.counters,
            "failures": self.failures,
            "elapsed_seconds": self.elapsed_seconds,
        }


def _worker_cap() -> int:
    raw = os.environ.get("KLRPOLY_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"KLRPOLY_THREADS must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"KLRPOLY_THREADS must be a positive integer, got {raw!r}")
    return cap


def _parse_pair(u_text: str, v_text: str) -> tuple[Permutation, Permutation]:
    u = parse_permutation(u_text)
    v = parse_permutation(v_text)
    if u.n != v.n:
        raise ValueError(f"permutations live in different groups: S_{u.n} vs S_{v.n}")
    return u, v


def _comparable_pairs(n: int):
    perms = list(symmetric_group(n))
    for u in perms:
        for v in perms:
            if bruhat_leq(u, v):
                yield u, v


def _all_pairs(n: int):
    perms = list(symmetric_group(n))
    for u in perms:
        for v in perms:
            yield u, v


# --- verify drivers ------------------------------------------------------
# Each driver fills report.counters / report.failures and may return a
# short note for the human-readable summary line.

def _drive_inversion(pairs, table: RTable, report: RunReport) -> str | None:
    checked = 0
    note = None
    for u, v in pairs:
        checked += 1
        got = inversion_sum(u, v, table)
        want = ONE if u == v else ZERO
        note = f"sum {got}"
        if got != want:
            report.failures.append({"u": str(u), "v": str(v), "got": str(got), "want": str(want)})
    report.counters["pairs_checked"] = checked
    return note if checked == 1 else None


def _drive_dyer(pairs, table: RTable, report: RunReport) -> str | None:
    checked = 0
    for u, v in pairs:
        checked += 1
        want = rtilde(u, v, table)
        for direction in ("increasing", "decreasing"):
            got = rtilde_by_paths(u, v, direction)
            if got != want:
                report.failures.append({
                    "u": str(u), "v": str(v), "direction": direction,
                    "by_paths": str(got), "by_recurrence": str(want),
                })
    report.counters["pairs_checked"] = checked
    return None


def _drive_changevar(pairs, table: RTable, report: RunReport) -> str | None:
    checked = 0
    for u, v in pairs:
        checked += 1
        direct = rpoly_r(u, v)
        via_variant = rpoly_from_rtilde(u, v, table)
        if direct != via_variant:
            report.failures.append({
                "u": str(u), "v": str(v),
                "recurrence": str(direct), "change_of_variable": str(via_variant),
            })
    report.counters["pairs_checked"] = checked
    return None


def _drive_involution(pairs, table: RTable, report: RunReport) -> str | None:
    checked = 0
    vpath_count = 0
    for u, v in pairs:
        if u == v:
            continue
        checked += 1
        for p in vpaths(u, v):
            vpath_count += 1
            image = reflect(p)
            ok = (
                image != p
                and image.total_length == p.total_length
                and image.sign == -p.sign
                and image.start == u
                and image.end == v
                and reflect(image) == p
            )
            if not ok:
                report.failures.append({"u": str(u), "v": str(v), "vpath": format_vpath(p)})
    report.counters["pairs_checked"] = checked
    report.counters["vpaths_checked"] = vpath_count
    return None


def _drive_equidist(pairs, table: RTable, report: RunReport, with_pairing: bool) -> str | None:
    checked = 0
    pairings = 0
    note = None
    for u, v in pairs:
        if u == v:
            continue
        checked += 1
        even, odd = parity_census(u, v)
        note = f"census ({even},{odd})"
        if even != odd:
            report.failures.append({"u": str(u), "v": str(v), "even": even, "odd": odd})
            continue
        if with_pairing:
            pairings += 1
            mapping = interval_pairing(u, v)
            for w, partner in mapping.items():
                if (
                    partner == w
                    or mapping[partner] != w
                    or (length(w) - length(partner)) % 2 == 0
                ):
                    report.failures.append({
                        "u": str(u), "v": str(v), "w": str(w), "partner": str(partner),
                    })
    report.counters["pairs_checked"] = checked
    report.counters["pairings_checked"] = pairings
    return note if checked == 1 else None


def _drive_refinement(pairs, table: RTable, report: RunReport, k: int | None) -> str | None:
    checked = 0
    vpath_count = 0
    note = None
    for u, v in pairs:
        if u == v:
            continue
        checked += 1
        n = u.n
        k_values = [k] if k is not None else list(range(1, n + 1))
        total = ZERO
        for k_value in k_values:
            try:
                rep = refinement_sum(u, v, k_value, table)
            except AssertionError as exc:
                report.failures.append({"u": str(u), "v": str(v), "k": k_value, "error": str(exc)})
                continue
            total = total + rep.sum
            note = f"sum {rep.sum}"
        if k is None and not total.is_zero:
            report.failures.append({
                "u": str(u), "v": str(v), "k": "all", "sum_over_k": str(total),
            })
        if k is None:
            # Exhaustive check that at most one V-path per residue is fixed
            # and that the fixed one matches the explicit construction.
            all_vpaths = vpaths(u, v)
            vpath_count += len(all_vpaths)
            for k_value in range(1, n + 1):
                members = [p for p in all_vpaths if p.bottom(n) == k_value]
                fixed = [p for p in members if refined_reflect(p, k_value) is FIXED]
                built = canonical_fixed_point(u, v, k_value)
                expected = [] if built is None else [built]
                if len(fixed) > 1 or fixed != expected:
                    report.failures.append({
                        "u": str(u), "v": str(v), "k": k_value,
                        "fixed_count": len(fixed),
                        "constructed": None if built is None else format_vpath(built),
                    })
    report.counters["pairs_checked"] = checked
    report.counters["vpaths_checked"] = vpath_count
    return note if checked == 1 and k is not None else None


# --- subcommands ---------------------------------------------------------

def _cmd_rpoly(args) -> int:
    u, v = _parse_pair(args.u, args.v)
    if args.kind == "rtilde":
        value = rtilde(u, v, RTable())
    else:
        value = rpoly_r(u, v)
    print(value)
    return 0


def _cmd_verify(args) -> int:
    threads = _worker_cap()
    target = args.target
    started = time.perf_counter()
    table = RTable()

    parameters: dict = {"target": target, "threads": threads}
    if args.all_n is not None:
        n = args.all_n
        budget = args.max_n if args.max_n is not None else DEFAULT_BUDGETS[target]
        if n > budget:
            raise ValueError(
                f"n={n} exceeds the budget for '{target}' ({budget}); "
                f"pass --max-n {n} to allow it (runtime grows like |S_n|^2)"
            )
        parameters["all_n"] = n
        comparable = list(_comparable_pairs(n))
        everything = list(_all_pairs(n))
        single = False
    else:
        u, v = _parse_pair(args.interval[0], args.interval[1])
        parameters["interval"] = [str(u), str(v)]
        comparable = [(u, v)]
        everything = [(u, v)]
        single = True

    if args.k is not None:
        parameters["k"] = args.k

    report = RunReport(command="verify", parameters=parameters)
    if target == "inversion":
        note = _drive_inversion(comparable, table, report)
    elif target == "dyer":
        note = _drive_dyer(everything, table, report)
    elif target == "changevar":
        note = _drive_changevar(everything, table, report)
    elif target == "involution":
        note = _drive_involution(comparable, table, report)
    elif target == "equidist":
        with_pairing = single or (args.all_n is not None and args.all_n <= 4)
        note = _drive_equidist(comparable, table, report, with_pairing)
    else:  # refinement
        note = _drive_refinement(comparable, table, report, args.k)

    report.counters["cache_entries"] = len(table)
    report.counters["cache_hits"] = table.hits
    report.status = "fail" if report.failures else "pass"
    report.elapsed_seconds = round(time.perf_counter() - started, 6)

    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        summary = f"{report.status}, {len(report.failures)} failures"
        if note and report.status == "pass":
            summary = f"{report.status}, {note}"
        print(f"verify {target}: {summary}")
        counters = " ".join(f"{key}={value}" for key, value in report.counters.items())
        print(f"counters: {counters} elapsed={report.elapsed_seconds}s")
        for failure in report.failures:
            print(f"counterexample: {json.dumps(failure)}")
    return 1 if report.failures else 0


def _cmd_graph(args) -> int:
    n = args.n
    if not 1 <= n <= GRAPH_MAX_N:
        raise ValueError(f"graph export supports 1 <= n <= {GRAPH_MAX_N}, got {n}")
    nodes = list(symmetric_group(n))
    edges = [arc for node in nodes for arc in arcs_from(node)]
    if args.format == "dot":
        lines = ["digraph bruhat {"]
        for node in nodes:
            lines.append(f'  "{node}";')
        for arc in edges:
            lines.append(f'  "{arc.source}" -> "{arc.target}" [label="{arc.label}"];')
        lines.append("}")
        print("\n".join(lines))
    else:
        document = {
            "schema": SCHEMA,
            "kind": "bruhat-graph",
            "n": n,
            "nodes": [str(node) for node in nodes],
            "edges": [
                {"source": str(arc.source), "target": str(arc.target), "label": str(arc.label)}
                for arc in edges
            ],
        }
        print(json.dumps(document, indent=2))
    return 0


def _cmd_paths(args) -> int:
    u, v = _parse_pair(args.u, args.v)
    if args.vpaths:
        items = vpaths(u, v)
        if args.format == "json":
            document = {
                "schema": SCHEMA,
                "kind": "vpaths",
                "items": [
                    {
                        "sign": p.sign,
                        "bottom": str(p.bottom),
                        "leg1": path_to_json(p.leg1),
                        "leg2": path_to_json(p.leg2),
                    }
                    for p in items
                ],
            }
            print(json.dumps(document, indent=2))
        else:
            for p in items:
                marker = "+" if p.sign > 0 else "-"
                print(f"{marker} {format_vpath(p)}")
    else:
        direction = "increasing" if args.direction in ("inc", "increasing") else "decreasing"
        found = monotone_paths(u, v, direction)
        if args.format == "json":
            document = {
                "schema": SCHEMA,
                "kind": "paths",
                "direction": direction,
                "items": [path_to_json(p) for p in found],
            }
            print(json.dumps(document, indent=2))
        else:
            for p in found:
                print(format_path(p))
    return 0


def _cmd_classify(args) -> int:
    u, v = _parse_pair(args.u, args.v)
    report = classify_s_interval(u, v)
    document = {"schema": SCHEMA, "kind": "s-interval-report", "u": str(u), "v": str(v)}
    document.update(report.to_json_dict())
    print(json.dumps(document, indent=2))
    return 0


def _cmd_table(args) -> int:
    n = args.n
    cap = args.max_n if args.max_n is not None else TABLE_DEFAULT_MAX_N
    if not 1 <= n <= cap:
        raise ValueError(
            f"table dump supports 1 <= n <= {cap}, got {n}; pass --max-n {n} to allow it"
        )
    table = RTable()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["u", "v", "rtilde"])
    for u, v in _comparable_pairs(n):
        writer.writerow([str(u), str(v), str(rtilde(u, v, table))])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrpoly",
        description="Exact R-polynomial computations and identity checks on symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rpoly = sub.add_parser("rpoly", help="print one R-polynomial")
    p_rpoly.add_argument("u")
    p_rpoly.add_argument("v")
    p_rpoly.add_argument("--kind", choices=["r", "rtilde"], default="rtilde")
    p_rpoly.set_defaults(func=_cmd_rpoly)

    p_verify = sub.add_parser("verify", help="run a batch identity check")
    p_verify.add_argument(
        "target",
        choices=["inversion", "dyer", "involution", "equidist", "refinement", "changevar"],
    )
    scope = p_verify.add_mutually_exclusive_group(required=True)
    scope.add_argument("--all-n", type=int, metavar="N", help="check every pair of S_N")
    scope.add_argument("--interval", nargs=2, metavar=("U", "V"), help="check one interval")
    p_verify.add_argument("--k", type=int, help="restrict refinement to one last-entry value")
    p_verify.add_argument("--max-n", type=int, help="raise the budget cap for --all-n")
    p_verify.add_argument("--json", action="store_true", help="emit the full run report as JSON")
    p_verify.set_defaults(func=_cmd_verify)

    p_graph = sub.add_parser("graph", help="export the Bruhat graph of S_n")
    p_graph.add_argument("n", type=int)
    p_graph.add_argument("--format", choices=["dot", "json"], default="dot")
    p_graph.set_defaults(func=_cmd_graph)

    p_paths = sub.add_parser("paths", help="list monotone paths or V-paths")
    p_paths.add_argument("u")
    p_paths.add_argument("v")
    p_paths.add_argument(
        "--direction", choices=["inc", "dec", "increasing", "decreasing"], default="inc"
    )
    p_paths.add_argument("--vpaths", action="store_true", help="list V-paths with bottom and sign")
    p_paths.add_argument("--format", choices=["text", "json"], default="text")
    p_paths.set_defaults(func=_cmd_paths)

    p_classify = sub.add_parser("classify", help="S-interval classification report")
    p_classify.add_argument("u")
    p_classify.add_argument("v")
    p_classify.set_defaults(func=_cmd_classify)

    p_table = sub.add_parser("table", help="CSV dump of the nonnegative variant over S_n")
    p_table.add_argument("n", type=int)
    p_table.add_argument("--max-n", type=int, help="raise the size cap")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
