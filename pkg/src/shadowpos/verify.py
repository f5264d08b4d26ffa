"""Statement-replay harness: one named suite per claimed formula or bound.

Each suite generates its instance range, runs the exact (or, where noted,
heuristic) solvers, and compares against a closed form or inequality.
Failures carry a serialized counterexample (graph6 plus witness) so they
can be replayed in isolation.  Instances whose search budget runs out are
reported SKIPPED, never silently passed.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .families import FamilySpec, canonical_key, enumerate_connected, generate, random_tree
from .formats import graph_to_graph6
from .graph_core import Graph, GraphError, mask_to_sorted_list, structural_queries
from .shadow import gp_partition_violations, shadow, shadow_distance_violations
from .solvers import (
    DEFAULT_NODE_BUDGET,
    InvariantReport,
    isometric_cycle_cover,
    isometric_path_cover,
    max_set,
    max_set_heuristic,
)
from .visibility import SetProperty

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class SuiteParams:
    n_max: Optional[int] = None
    seed: int = 0
    tree_count: int = 50
    heuristic_time: float = 60.0
    budget: int = DEFAULT_NODE_BUDGET


@dataclass
class InstanceResult:
    key: str
    status: str
    expected: str = ""
    actual: str = ""
    graph6: Optional[str] = None
    witness: Optional[list[int]] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "key": self.key, "status": self.status, "expected": self.expected,
            "actual": self.actual, "graph6": self.graph6, "witness": self.witness,
            "note": self.note,
        }


@dataclass
class SuiteReport:
    suite: str
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.status == PASS)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == FAIL)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.results if r.status == SKIPPED)

    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if r.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instances": len(self.results),
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "results": [r.to_dict() for r in self.results],
        }


def worker_count() -> int:
    raw = os.environ.get("SHADOWPOS_THREADS", "")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise GraphError(f"SHADOWPOS_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# Closed forms (pure; unit-tested independently of the solvers)


def expected_gp_shadow_complete(n: int) -> int:
    return n


def expected_gp_shadow_bipartite(m: int, n: int) -> int:
    return 2 * max(m, n)


def expected_gp_shadow_cycle(n: int) -> int:
    return n if n <= 7 else 6


def expected_mu_shadow_cycle(n: int) -> int:
    if n == 4:
        return 6
    if n in (3, 5, 6):
        return n + 1
    return n


def expected_gp_shadow_join(orders: Iterable[int]) -> int:
    orders = list(orders)
    n = 1 + sum(orders)
    t1 = sum(1 for w in orders if w == 2)
    return n + t1 - 1


def expected_mu_shadow_multipartite(parts: Iterable[int]) -> int:
    return 2 * sum(parts) - 2


def expected_gp_shadow_tree(leaf_count: int) -> int:
    return 2 * leaf_count


def expected_mu_shadow_tree(n: int, leaf_count: int) -> int:
    return n + leaf_count


def gp_sandwich_bounds(n: int, igp: int, delta: int) -> tuple[int, int]:
    upper = n + min(igp - delta + 1, (igp * (n - 1) - delta) // (igp + delta))
    return 2 * igp, upper


def mu_shadow_bounds(n: int, mu: int, mu_i: int, max_degree: int) -> tuple[int, int]:
    return max(n, 2 * mu_i, 2 * max_degree), min(n + mu, 2 * n - 2)


# ---------------------------------------------------------------------------
# Shared helpers


@lru_cache(maxsize=8)
def _connected_reps_g6(n_max: int) -> tuple[str, ...]:
    return tuple(graph_to_graph6(g) for g in enumerate_connected(n_max, dedup=True))


def _graph_from_payload(payload: dict) -> Graph:
    from .formats import graph6_to_graph
    if "graph6" in payload:
        return graph6_to_graph(payload["graph6"])
    return generate(FamilySpec(payload["family"], tuple(payload["params"]),
                               payload.get("fseed")))


def _exact_value(prop: SetProperty, g: Graph, budget: int) -> tuple[Optional[int], InvariantReport]:
    r = max_set(prop, g, budget=budget)
    return (r.value if r.exact else None), r


def _compare(key: str, g: Graph, actual: Optional[int], expected_desc: str,
             ok: Optional[bool], witness=None, note: str = "") -> InstanceResult:
    if actual is None or ok is None:
        return InstanceResult(key, SKIPPED, expected_desc, "budget exhausted",
                              graph6=graph_to_graph6(g), note=note)
    return InstanceResult(
        key, PASS if ok else FAIL, expected_desc, str(actual),
        graph6=graph_to_graph6(g) if not ok else None,
        witness=witness if not ok else witness,
        note=note,
    )


# ---------------------------------------------------------------------------
# Suite instance builders and checkers


def _instances_gp_complete(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 8
    return [{"n": n, "budget": p.budget} for n in range(2, top + 1)]


def _check_gp_complete(payload: dict) -> InstanceResult:
    n = payload["n"]
    g = generate(FamilySpec("complete", (n,)))
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    exp = expected_gp_shadow_complete(n)
    return _compare(f"K_{n}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _instances_gp_bipartite(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 5
    return [{"m": m, "n": n, "budget": p.budget}
            for n in range(2, top + 1) for m in range(n, top + 1)]


def _check_gp_bipartite(payload: dict) -> InstanceResult:
    m, n = payload["m"], payload["n"]
    g = generate(FamilySpec("complete_bipartite", (m, n)))
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    exp = expected_gp_shadow_bipartite(m, n)
    return _compare(f"K_{{{m},{n}}}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _instances_gp_cycles(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 10
    return [{"n": n, "budget": p.budget} for n in range(3, top + 1)]


def _check_gp_cycles(payload: dict) -> InstanceResult:
    n = payload["n"]
    sg = shadow(generate(FamilySpec("cycle", (n,)))).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    exp = expected_gp_shadow_cycle(n)
    return _compare(f"C_{n}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _instances_mu_cycles(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 9
    return [{"n": n, "budget": p.budget} for n in range(3, top + 1)]


def _check_mu_cycles(payload: dict) -> InstanceResult:
    n = payload["n"]
    sg = shadow(generate(FamilySpec("cycle", (n,)))).graph
    value, r = _exact_value(SetProperty.MV, sg, payload["budget"])
    exp = expected_mu_shadow_cycle(n)
    return _compare(f"C_{n}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _clique_multisets(n_total_max: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, min_size, remaining):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for s in range(min_size, remaining + 1):
            rec(prefix + [s], s, remaining - s)

    rec([], 2, n_total_max - 1)
    return sorted(out)


def _instances_gp_join(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 9
    return [{"orders": list(o), "budget": p.budget} for o in _clique_multisets(top)]


def _check_gp_join(payload: dict) -> InstanceResult:
    orders = tuple(payload["orders"])
    g = generate(FamilySpec("join_k1_cliques", orders))
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    exp = expected_gp_shadow_join(orders)
    return _compare(f"K_1+{list(orders)}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _part_multisets(n_total_max: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, min_size, remaining):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for s in range(min_size, remaining + 1):
            rec(prefix + [s], s, remaining - s)

    rec([], 2, n_total_max)
    return sorted(out)


def _instances_mu_multipartite(p: SuiteParams) -> list[dict]:
    top = p.n_max if p.n_max is not None else 8
    return [{"parts": list(parts), "budget": p.budget}
            for parts in _part_multisets(top)]


def _check_mu_multipartite(payload: dict) -> InstanceResult:
    parts = tuple(payload["parts"])
    g = generate(FamilySpec("complete_multipartite", parts))
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.MV, sg, payload["budget"])
    exp = expected_mu_shadow_multipartite(parts)
    return _compare(f"K_{list(parts)}", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _tree_instances(p: SuiteParams, default_n_max: int, min_diam: int) -> list[dict]:
    top = p.n_max if p.n_max is not None else default_n_max
    out = []
    attempt = 0
    while len(out) < p.tree_count and attempt < 50 * p.tree_count:
        fseed = p.seed * 1_000_003 + attempt
        attempt += 1
        n = 2 + (fseed * 2654435761 % (top - 1)) if top > 2 else 2
        t = random_tree(max(2, n), fseed)
        if structural_queries(t).diameter >= min_diam:
            out.append({"n": t.n, "fseed": fseed, "budget": p.budget})
    return out


def _instances_gp_trees(p: SuiteParams) -> list[dict]:
    return _tree_instances(p, default_n_max=10, min_diam=2)


def _check_gp_trees(payload: dict) -> InstanceResult:
    t = random_tree(payload["n"], payload["fseed"])
    s = structural_queries(t)
    sg = shadow(t).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    exp = expected_gp_shadow_tree(s.leaf_count)
    return _compare(f"tree(n={t.n},seed={payload['fseed']})", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _instances_mu_trees(p: SuiteParams) -> list[dict]:
    return _tree_instances(p, default_n_max=9, min_diam=3)


def _check_mu_trees(payload: dict) -> InstanceResult:
    t = random_tree(payload["n"], payload["fseed"])
    s = structural_queries(t)
    sg = shadow(t).graph
    value, r = _exact_value(SetProperty.MV, sg, payload["budget"])
    exp = expected_mu_shadow_tree(t.n, s.leaf_count)
    return _compare(f"tree(n={t.n},seed={payload['fseed']})", sg, value, str(exp),
                    None if value is None else value == exp,
                    witness=mask_to_sorted_list(r.witness))


def _fuzz_instances(p: SuiteParams, default_n_max: int, min_n: int = 2) -> list[dict]:
    top = p.n_max if p.n_max is not None else default_n_max
    return [{"graph6": g6, "budget": p.budget}
            for g6 in _connected_reps_g6(top)
            if _graph_from_payload({"graph6": g6}).n >= min_n]


def _check_gp_diam3(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    s = structural_queries(g)
    key = payload["graph6"]
    if s.diameter > 3:
        return InstanceResult(key, PASS, note="filtered: diameter > 3")
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    return _compare(key, g, value, f">= {g.n}",
                    None if value is None else value >= g.n,
                    witness=mask_to_sorted_list(r.witness))


def _check_gp_sandwich(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    s = structural_queries(g)
    budget = payload["budget"]
    igp, _ = _exact_value(SetProperty.IGP, g, budget)
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, budget)
    if igp is None or value is None:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    lo, hi = gp_sandwich_bounds(g.n, igp, s.min_degree)
    ok = lo <= value <= hi
    return _compare(key, g, value, f"{lo} <= gp(S(G)) <= {hi}", ok,
                    witness=mask_to_sorted_list(r.witness))


def _check_gp_regular_tf(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    s = structural_queries(g)
    if not (s.is_regular and s.is_triangle_free):
        return InstanceResult(key, PASS, note="filtered: not regular triangle-free")
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.GP, sg, payload["budget"])
    return _compare(key, g, value, f"<= {g.n}",
                    None if value is None else value <= g.n,
                    witness=mask_to_sorted_list(r.witness))


def _check_mu_bounds(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    s = structural_queries(g)
    budget = payload["budget"]
    mu, _ = _exact_value(SetProperty.MV, g, budget)
    mui, _ = _exact_value(SetProperty.IMV, g, budget)
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.MV, sg, budget)
    if mu is None or mui is None or value is None:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    lo, hi = mu_shadow_bounds(g.n, mu, mui, s.max_degree)
    return _compare(key, g, value, f"{lo} <= mu(S(G)) <= {hi}", lo <= value <= hi,
                    witness=mask_to_sorted_list(r.witness))


def _check_mu_leaf(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    if g.n < 3:
        return InstanceResult(key, PASS, note="filtered: n < 3")
    s = structural_queries(g)
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.MV, sg, payload["budget"])
    exp = g.n + s.leaf_count
    return _compare(key, g, value, f">= {exp}",
                    None if value is None else value >= exp,
                    witness=mask_to_sorted_list(r.witness))


def _check_mu_muit(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    s = structural_queries(g)
    if not s.is_triangle_free or s.has_universal_vertex:
        return InstanceResult(key, PASS, note="filtered: triangle or universal vertex")
    budget = payload["budget"]
    muit, _ = _exact_value(SetProperty.ITMV, g, budget)
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.MV, sg, budget)
    if muit is None or value is None:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    exp = g.n + muit
    return _compare(key, g, value, f">= {exp}", value >= exp,
                    witness=mask_to_sorted_list(r.witness))


_P2_KEY = canonical_key(generate(FamilySpec("path", (2,))))
_P3_KEY = canonical_key(generate(FamilySpec("path", (3,))))
_C3_KEY = canonical_key(generate(FamilySpec("cycle", (3,))))


def _check_mu_char(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    sg = shadow(g).graph
    value, r = _exact_value(SetProperty.MV, sg, payload["budget"])
    if value is None:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    ck = canonical_key(g)
    problems = []
    if value in (3, 5):
        problems.append(f"mu(S(G)) = {value} should never occur")
    if (value == 2) != (ck == _P2_KEY):
        problems.append("mu(S(G)) = 2 should hold exactly for the single edge")
    if (value == 4) != (ck in (_P3_KEY, _C3_KEY)):
        problems.append("mu(S(G)) = 4 should hold exactly for the 3-path/3-cycle")
    return _compare(key, g, value, "characterization of small values",
                    not problems, witness=mask_to_sorted_list(r.witness),
                    note="; ".join(problems))


def _check_lemma_distance(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    if g.n < 2:
        return InstanceResult(key, PASS, note="filtered: trivial graph")
    violations = shadow_distance_violations(shadow(g))
    return _compare(key, g, len(violations), "no distance-clause violations",
                    not violations, note="; ".join(violations[:3]))


def _check_lemma_partition(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    if g.n < 2:
        return InstanceResult(key, PASS, note="filtered: trivial graph")
    sgo = shadow(g)
    r = max_set(SetProperty.GP, sgo.graph, budget=payload["budget"])
    if not r.exact:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    violations = gp_partition_violations(sgo, r.witness)
    return _compare(key, g, len(violations), "no partition-clause violations",
                    not violations, witness=mask_to_sorted_list(r.witness),
                    note="; ".join(violations[:3]))


def _check_ip_ic_bounds(payload: dict) -> InstanceResult:
    g = _graph_from_payload(payload)
    key = payload["graph6"]
    budget = payload["budget"]
    gp, _ = _exact_value(SetProperty.GP, g, budget)
    ip_rep = isometric_path_cover(g)
    if gp is None or not ip_rep.exact:
        return InstanceResult(key, SKIPPED, note="budget exhausted")
    problems = []
    if gp > 2 * ip_rep.value:
        problems.append(f"gp = {gp} > 2 ip = {2 * ip_rep.value}")
    ic_rep = isometric_cycle_cover(g)
    if ic_rep.coverable and gp > 3 * ic_rep.value:
        problems.append(f"gp = {gp} > 3 ic = {3 * ic_rep.value}")
    return _compare(key, g, gp, "gp <= 2 ip and gp <= 3 ic", not problems,
                    note="; ".join(problems))


def _instances_mu_balloon(p: SuiteParams) -> list[dict]:
    return [{"k": 2, "seed": p.seed, "time": p.heuristic_time, "budget": p.budget}]


def _check_mu_balloon(payload: dict) -> InstanceResult:
    k = payload["k"]
    g = generate(FamilySpec("balloon", (k,)))
    mut = max_set(SetProperty.TMV, g, budget=payload["budget"])
    if not mut.exact:
        return InstanceResult(f"balloon({k})", SKIPPED, note="budget exhausted")
    if mut.value != 0:
        return _compare(f"balloon({k})", g, mut.value, "total visibility number 0", False)
    sg = shadow(g).graph
    target = 6 * k + 1
    heur = max_set_heuristic(SetProperty.MV, sg, time_budget=payload["time"],
                             seed=payload["seed"], target=target)
    if heur.value < target:
        return InstanceResult(
            f"balloon({k})", FAIL, f"mv set of size >= {target} in S(G)",
            str(heur.value), graph6=graph_to_graph6(sg),
            note="discrepancy: heuristic found no witness of the claimed size")
    return InstanceResult(f"balloon({k})", PASS, f">= {target}", str(heur.value),
                          witness=mask_to_sorted_list(heur.witness))


@dataclass(frozen=True)
class SuiteDef:
    id: str
    description: str
    make_instances: Callable[[SuiteParams], list[dict]]
    check_instance: Callable[[dict], InstanceResult]


def _fuzz6(p):
    return _fuzz_instances(p, 6)


def _fuzz7(p):
    return _fuzz_instances(p, 7)


SUITES: dict[str, SuiteDef] = {s.id: s for s in [
    SuiteDef("gp-complete", "gp(S(K_n)) = n", _instances_gp_complete, _check_gp_complete),
    SuiteDef("gp-bipartite", "gp(S(K_{m,n})) = 2 max(m,n)",
             _instances_gp_bipartite, _check_gp_bipartite),
    SuiteDef("gp-diam3", "diam <= 3 implies gp(S(G)) >= n", _fuzz6, _check_gp_diam3),
    SuiteDef("gp-join", "gp(S(K_1 + cliques)) = n + t_1 - 1",
             _instances_gp_join, _check_gp_join),
    SuiteDef("gp-sandwich", "2 igp <= gp(S(G)) <= igp/min-degree upper bound",
             _fuzz6, _check_gp_sandwich),
    SuiteDef("gp-regular-tf", "regular triangle-free implies gp(S(G)) <= n",
             _fuzz7, _check_gp_regular_tf),
    SuiteDef("gp-cycles", "piecewise formula for gp(S(C_n))",
             _instances_gp_cycles, _check_gp_cycles),
    SuiteDef("gp-trees", "gp(S(T)) = 2 l(T) for diam >= 2",
             _instances_gp_trees, _check_gp_trees),
    SuiteDef("mu-bounds", "max{n, 2 mu_i, 2 max-degree} <= mu(S(G)) <= min{n + mu, 2n - 2}",
             _fuzz6, _check_mu_bounds),
    SuiteDef("mu-multipartite", "mu(S(K_{n_1..n_k})) = 2n - 2",
             _instances_mu_multipartite, _check_mu_multipartite),
    SuiteDef("mu-leaf", "mu(S(G)) >= n + leaf count for n >= 3", _fuzz6, _check_mu_leaf),
    SuiteDef("mu-muit", "triangle-free, no universal vertex: mu(S(G)) >= n + mu_it",
             _fuzz6, _check_mu_muit),
    SuiteDef("mu-trees", "mu(S(T)) = n + l for diam >= 3",
             _instances_mu_trees, _check_mu_trees),
    SuiteDef("mu-balloon", "balloon: mu_t = 0 and mv set of size 6k + 1 in the shadow",
             _instances_mu_balloon, _check_mu_balloon),
    SuiteDef("mu-char", "mu(S(G)) small-value characterization", _fuzz6, _check_mu_char),
    SuiteDef("mu-cycles", "piecewise formula for mu(S(C_n))",
             _instances_mu_cycles, _check_mu_cycles),
    SuiteDef("lemma-distance", "shadow distance clauses", _fuzz7, _check_lemma_distance),
    SuiteDef("lemma-partition", "gp-partition structural clauses",
             _fuzz6, _check_lemma_partition),
    SuiteDef("ip-ic-bounds", "gp <= 2 ip and gp <= 3 ic", _fuzz7, _check_ip_ic_bounds),
]}


def _dispatch(item: tuple[str, dict]) -> InstanceResult:
    suite_id, payload = item
    return SUITES[suite_id].check_instance(payload)


def run_suite(suite_id: str, params: SuiteParams = SuiteParams(),
              workers: Optional[int] = None) -> SuiteReport:
    """Run one suite; results are sorted by instance key for determinism."""
    if suite_id not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise GraphError(f"unknown suite {suite_id!r}; available: {known}")
    suite = SUITES[suite_id]
    instances = suite.make_instances(params)
    items = [(suite_id, payload) for payload in instances]
    if workers is None:
        workers = worker_count()
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_dispatch, items, chunksize=8))
    else:
        results = [_dispatch(item) for item in items]
    report = SuiteReport(suite_id)
    report.results = sorted(results, key=lambda r: r.key)
    return report


def run_all(params: SuiteParams = SuiteParams(),
            workers: Optional[int] = None) -> list[SuiteReport]:
    return [run_suite(sid, params, workers) for sid in SUITES]


# ---------------------------------------------------------------------------
# Fuzz driver


_FUZZ_SUITE_BY_PROPERTY = {
    None: ("gp-diam3", "gp-sandwich", "gp-regular-tf", "mu-bounds", "mu-leaf",
           "mu-muit", "mu-char", "lemma-distance", "lemma-partition", "ip-ic-bounds"),
    SetProperty.GP: ("gp-diam3", "gp-sandwich", "gp-regular-tf", "lemma-partition",
                     "ip-ic-bounds"),
    SetProperty.MV: ("mu-bounds", "mu-leaf", "mu-muit", "mu-char"),
}


def fuzz(n_max: int, properties: Optional[Iterable[SetProperty]] = None,
         seed: int = 0, budget: int = DEFAULT_NODE_BUDGET):
    """Run every applicable per-graph check over all small connected graphs.

    Yields one record per enumerated graph (dedup by isomorphism class);
    counterexamples are serialized in the record immediately.
    """
    if properties is None:
        suite_ids = _FUZZ_SUITE_BY_PROPERTY[None]
    else:
        suite_ids = []
        for prop in properties:
            suite_ids.extend(_FUZZ_SUITE_BY_PROPERTY.get(prop, ()))
        suite_ids = tuple(dict.fromkeys(suite_ids))
    for g in enumerate_connected(n_max, dedup=True):
        g6 = graph_to_graph6(g)
        payload = {"graph6": g6, "budget": budget, "seed": seed}
        checks = {}
        # Every check involves the shadow, which needs at least one edge.
        for sid in suite_ids if g.n >= 2 else ():
            result = SUITES[sid].check_instance(dict(payload))
            checks[sid] = result
        yield {
            "graph6": g6,
            "n": g.n,
            "checks": {sid: r.to_dict() for sid, r in checks.items()},
            "violations": [sid for sid, r in checks.items() if r.status == FAIL],
            "skipped": [sid for sid, r in checks.items() if r.status == SKIPPED],
        }
