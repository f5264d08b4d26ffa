import pytest

from shadowpos.graph_core import GraphError
from shadowpos.verify import (
    FAIL,
    PASS,
    SKIPPED,
    SUITES,
    SuiteParams,
    expected_gp_shadow_bipartite,
    expected_gp_shadow_complete,
    expected_gp_shadow_cycle,
    expected_gp_shadow_join,
    expected_gp_shadow_tree,
    expected_mu_shadow_cycle,
    expected_mu_shadow_multipartite,
    expected_mu_shadow_tree,
    fuzz,
    gp_sandwich_bounds,
    mu_shadow_bounds,
    run_suite,
    worker_count,
)


def test_closed_forms():
    assert [expected_gp_shadow_cycle(n) for n in range(3, 11)] == \
        [3, 4, 5, 6, 7, 6, 6, 6]
    assert [expected_mu_shadow_cycle(n) for n in range(3, 10)] == \
        [4, 6, 6, 7, 7, 8, 9]
    assert expected_gp_shadow_complete(5) == 5
    assert expected_gp_shadow_bipartite(5, 3) == 10
    assert expected_gp_shadow_join([2, 2, 3]) == 9   # n=8, two order-2 cliques
    assert expected_gp_shadow_join([3, 3]) == 6      # t_1 = 0 case as stated
    assert expected_mu_shadow_multipartite([3, 2]) == 8
    assert expected_gp_shadow_tree(4) == 8
    assert expected_mu_shadow_tree(7, 3) == 10
    assert gp_sandwich_bounds(5, 2, 1) == (4, 7)
    # The stated upper bound goes below n on dense graphs; kept as stated.
    assert gp_sandwich_bounds(4, 1, 3) == (2, 3)
    assert mu_shadow_bounds(5, 3, 2, 2) == (5, 8)


def test_all_suite_ids_present():
    assert set(SUITES) == {
        "gp-complete", "gp-bipartite", "gp-diam3", "gp-join", "gp-sandwich",
        "gp-regular-tf", "gp-cycles", "gp-trees", "mu-bounds",
        "mu-multipartite", "mu-leaf", "mu-muit", "mu-trees", "mu-balloon",
        "mu-char", "mu-cycles", "lemma-distance", "lemma-partition",
        "ip-ic-bounds",
    }


def test_unknown_suite_raises():
    with pytest.raises(GraphError):
        run_suite("no-such-suite")


def test_gp_complete_suite_passes():
    rep = run_suite("gp-complete", SuiteParams(n_max=5), workers=1)
    assert rep.failed == 0 and rep.skipped == 0 and rep.passed == 4


def test_budget_exhaustion_reports_skipped():
    rep = run_suite("gp-cycles", SuiteParams(n_max=8, budget=5), workers=1)
    assert rep.skipped > 0
    assert all(r.status in (PASS, SKIPPED) for r in rep.results)


def test_multipartite_suite_documents_three_part_deviation():
    # Two-part instances match the stated formula; instances with >= 3 parts
    # come out exactly one below it (independently brute-force confirmed).
    rep = run_suite("mu-multipartite", SuiteParams(n_max=6), workers=1)
    by_key = {r.key: r for r in rep.results}
    assert by_key["K_[2, 2]"].status == PASS
    assert by_key["K_[3, 3]"].status == PASS
    bad = by_key["K_[2, 2, 2]"]
    assert bad.status == FAIL
    assert bad.actual == "9" and bad.expected == "10"
    assert bad.graph6 is not None and bad.witness is not None


def test_join_suite_documents_t1_zero_deviation():
    rep = run_suite("gp-join", SuiteParams(n_max=7), workers=1)
    by_key = {r.key: r for r in rep.results}
    assert by_key["K_1+[2, 2]"].status == PASS
    assert by_key["K_1+[2, 4]"].status == PASS
    bad = by_key["K_1+[3, 3]"]
    assert bad.status == FAIL and bad.actual == "7" and bad.expected == "6"


def test_mu_leaf_suite_fails_exactly_on_stars():
    from shadowpos.families import canonical_key, generate, FamilySpec
    from shadowpos.formats import graph6_to_graph
    rep = run_suite("mu-leaf", SuiteParams(n_max=5), workers=1)
    star_keys = {canonical_key(generate(FamilySpec("star", (k,))))
                 for k in (2, 3, 4)}
    fail_keys = {canonical_key(graph6_to_graph(r.graph6))
                 for r in rep.failures()}
    assert fail_keys == star_keys


def test_sandwich_suite_fails_only_when_stated_bound_dips_below_n():
    from shadowpos.formats import graph6_to_graph
    from shadowpos.graph_core import structural_queries
    from shadowpos.solvers import max_set
    from shadowpos.visibility import SetProperty
    from shadowpos.verify import gp_sandwich_bounds
    rep = run_suite("gp-sandwich", SuiteParams(n_max=5), workers=1)
    assert rep.failed > 0
    for r in rep.failures():
        g = graph6_to_graph(r.graph6)
        igp = max_set(SetProperty.IGP, g).value
        _, hi = gp_sandwich_bounds(g.n, igp, structural_queries(g).min_degree)
        assert hi < g.n  # only the dense regime where the bound is defective


def test_tree_suites_pass():
    p = SuiteParams(n_max=7, tree_count=10, seed=3)
    assert run_suite("gp-trees", p, workers=1).failed == 0
    assert run_suite("mu-trees", p, workers=1).failed == 0


def test_balloon_suite():
    rep = run_suite("mu-balloon", SuiteParams(heuristic_time=30.0), workers=1)
    assert rep.failed == 0 and rep.results[0].status == PASS


def test_parallel_matches_serial():
    serial = run_suite("mu-cycles", SuiteParams(n_max=7), workers=1)
    parallel = run_suite("mu-cycles", SuiteParams(n_max=7), workers=2)
    assert [r.to_dict() for r in serial.results] == \
        [r.to_dict() for r in parallel.results]


def test_report_serialization():
    rep = run_suite("gp-cycles", SuiteParams(n_max=5), workers=1)
    d = rep.to_dict()
    assert d["suite"] == "gp-cycles"
    assert d["passed"] == len(d["results"]) == 3
    assert all(set(r) >= {"key", "status", "expected", "actual"}
               for r in d["results"])


def test_fuzz_driver_yields_records():
    records = list(fuzz(4))
    assert len(records) == 10  # connected graphs up to iso, n <= 4
    for rec in records:
        assert set(rec) == {"graph6", "n", "checks", "violations", "skipped"}
    # Violations at this size: the defective stated bounds only.
    flagged = {sid for rec in records for sid in rec["violations"]}
    assert flagged <= {"gp-sandwich", "mu-leaf"}
    assert "gp-sandwich" in flagged  # K_4 instance


def test_fuzz_property_filter():
    records = list(fuzz(3, properties=[]))
    assert all(rec["checks"] == {} for rec in records)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("SHADOWPOS_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("SHADOWPOS_THREADS", "zero")
    with pytest.raises(GraphError):
        worker_count()
    monkeypatch.delenv("SHADOWPOS_THREADS")
    assert worker_count() >= 1
