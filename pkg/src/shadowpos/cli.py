"""Command-line entry point: compute invariants, transform graphs, replay suites.

Exit codes: 0 success, 2 parse error, 3 precondition failure (disconnected
input, size cap), 4 budget exhausted in --exact mode, 5 unwritable output
path.  All JSON records state the twin-index convention explicitly so
serialized witnesses are unambiguous.
"""

from __future__ import annotations

import datetime
import json
import os
import sys
from typing import Optional

import click

from .families import generate, parse_family_spec
from .formats import (
    edges_to_text,
    graph6_to_graph,
    graph_to_dot,
    graph_to_graph6,
    looks_like_edge_list,
    text_to_edges,
)
from .graph_core import Graph, GraphError
from .shadow import ShadowGraph, shadow, star_shadow
from .solvers import (
    DEFAULT_NODE_BUDGET,
    INVARIANT_CODES,
    chromatic_number,
    isometric_cycle_cover,
    isometric_path_cover,
    max_set,
    max_set_heuristic,
    property_for_code,
)
from .verify import FAIL, SKIPPED, SUITES, SuiteParams, run_suite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_UNWRITABLE = 5

INDEX_CONVENTION = "twin of base vertex i is i + n; apex (star shadow) is 2n"

_SET_INVARIANTS = ("gp", "igp", "mu", "mui", "mut", "muit")


def _load_graph(source: str) -> tuple[Graph, str]:
    """Resolve a graph source: file path, family spec, or literal graph6.

    Returns the graph and a stable identifier for run records.
    """
    if os.path.exists(source):
        try:
            text = open(source, encoding="utf-8").read()
        except OSError as exc:
            raise GraphError(f"cannot read {source}: {exc}") from None
        if looks_like_edge_list(text):
            return text_to_edges(text), source
        return graph6_to_graph(text), source
    try:
        spec = parse_family_spec(source)
    except GraphError:
        pass
    else:
        return generate(spec), spec.text()
    try:
        return graph6_to_graph(source), source
    except GraphError:
        raise GraphError(
            f"{source!r} is not an existing file, a family spec, or a "
            "graph6 string") from None


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


@click.group()
def main() -> None:
    """Exact toolkit for position and visibility invariants of shadow graphs."""


@main.command("compute")
@click.option("--invariant", required=True,
              type=click.Choice(INVARIANT_CODES), help="Invariant to compute.")
@click.option("--graph", "source", required=True,
              help="File path (edge list or graph6), family spec, or graph6 string.")
@click.option("--shadow", "apply_shadow", is_flag=True,
              help="Apply the shadow construction before solving.")
@click.option("--star-shadow", "apply_star", is_flag=True,
              help="Apply the star shadow construction before solving.")
@click.option("--exact/--heuristic", "exact_mode", default=True,
              help="Exact branch and bound (default) or restart heuristic.")
@click.option("--time", "time_budget", type=float, default=1.0, show_default=True,
              help="Heuristic time budget in seconds.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Heuristic random seed.")
@click.option("--budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True,
              help="Exact-search node budget.")
@click.option("--canonical-witness", is_flag=True,
              help="Report the lexicographically smallest maximum witness.")
def cmd_compute(invariant: str, source: str, apply_shadow: bool, apply_star: bool,
                exact_mode: bool, time_budget: float, seed: int, budget: int,
                canonical_witness: bool) -> None:
    """Compute one invariant and print a JSON report on stdout."""
    if apply_shadow and apply_star:
        click.echo("error: --shadow and --star-shadow are mutually exclusive",
                   err=True)
        sys.exit(EXIT_PARSE)
    try:
        g, identifier = _load_graph(source)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        if apply_shadow:
            g = shadow(g).graph
        elif apply_star:
            g = star_shadow(g)
        if invariant in _SET_INVARIANTS:
            prop = property_for_code(invariant)
            if exact_mode:
                report = max_set(prop, g, budget=budget,
                                 canonical_witness=canonical_witness)
            else:
                report = max_set_heuristic(prop, g, time_budget=time_budget,
                                           seed=seed)
        elif invariant == "ip":
            report = isometric_path_cover(g)
        elif invariant == "ic":
            report = isometric_cycle_cover(g)
        else:
            report = chromatic_number(g)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    record = {
        "timestamp": _timestamp(),
        "command": "compute",
        "graph": identifier,
        "n": g.n,
        "index_convention": INDEX_CONVENTION,
        **report.to_dict(),
    }
    click.echo(json.dumps(record))
    if exact_mode and not report.exact:
        sys.exit(EXIT_BUDGET)


@main.command("transform")
@click.option("--graph", "source", required=True,
              help="File path (edge list or graph6), family spec, or graph6 string.")
@click.option("--op", required=True, type=click.Choice(["shadow", "star-shadow"]),
              help="Construction to apply.")
@click.option("--out", "out_path", required=True, help="Output file path.")
@click.option("--format", "fmt", required=True,
              type=click.Choice(["g6", "edges", "dot"]), help="Output format.")
def cmd_transform(source: str, op: str, out_path: str, fmt: str) -> None:
    """Apply a shadow construction and write the result to a file."""
    try:
        g, _ = _load_graph(source)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        sg: Optional[ShadowGraph] = None
        if op == "shadow":
            sg = shadow(g)
            out = sg.graph
        else:
            out = star_shadow(g)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    if fmt == "g6":
        payload = graph_to_graph6(out) + "\n"
    elif fmt == "edges":
        payload = edges_to_text(out)
    else:
        payload = graph_to_dot(out, shadow_of=sg)
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_UNWRITABLE)


@main.command("verify")
@click.option("--suite", "suite_id", required=True,
              help="Suite identifier or 'all'.")
@click.option("--n-max", type=int, default=None,
              help="Override the suite's default size range.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized instances.")
@click.option("--log", "log_path", default=None,
              help="Append one JSONL run record per instance to this file.")
@click.option("--workers", type=int, default=None,
              help="Worker processes (default: SHADOWPOS_THREADS or CPU count).")
def cmd_verify(suite_id: str, n_max: Optional[int], seed: int,
               log_path: Optional[str], workers: Optional[int]) -> None:
    """Replay named verification suites; exit 0 iff no instance fails."""
    if suite_id != "all" and suite_id not in SUITES:
        known = ", ".join(sorted(SUITES))
        click.echo(f"error: unknown suite {suite_id!r}; available: {known}, all",
                   err=True)
        sys.exit(EXIT_PARSE)
    params = SuiteParams(n_max=n_max, seed=seed)
    suite_ids = list(SUITES) if suite_id == "all" else [suite_id]
    log_fh = None
    if log_path is not None:
        try:
            log_fh = open(log_path, "a", encoding="utf-8")
        except OSError as exc:
            click.echo(f"error: cannot write {log_path}: {exc}", err=True)
            sys.exit(EXIT_UNWRITABLE)
    total_fail = 0
    header = f"{'suite':<16} {'instances':>9} {'pass':>6} {'fail':>6} {'skipped':>8}"
    click.echo(header)
    click.echo("-" * len(header))
    try:
        for sid in suite_ids:
            report = run_suite(sid, params, workers=workers)
            total_fail += report.failed
            click.echo(f"{sid:<16} {len(report.results):>9} {report.passed:>6} "
                       f"{report.failed:>6} {report.skipped:>8}")
            for r in report.results:
                if r.status in (FAIL, SKIPPED):
                    click.echo(f"  {r.status} {r.key}: expected {r.expected}, "
                               f"got {r.actual}"
                               + (f" [{r.note}]" if r.note else "")
                               + (f" graph6={r.graph6}" if r.graph6 else ""))
            if log_fh is not None:
                for r in report.results:
                    record = {
                        "timestamp": _timestamp(),
                        "command": "verify",
                        "suite": sid,
                        "index_convention": INDEX_CONVENTION,
                        **r.to_dict(),
                    }
                    log_fh.write(json.dumps(record) + "\n")
                log_fh.flush()
    finally:
        if log_fh is not None:
            log_fh.close()
    click.echo("-" * len(header))
    click.echo("OK" if total_fail == 0 else f"{total_fail} failing instance(s)")
    sys.exit(EXIT_OK if total_fail == 0 else 1)


if __name__ == "__main__":
    main()
