import random

import pytest

from shadowpos.families import canonical_key, generate, parse_family_spec
from shadowpos.graph_core import GraphError, build_graph, structural_queries
from shadowpos.shadow import (
    gp_partition_violations,
    iterated_star_shadow,
    pi_partition,
    shadow,
    shadow_distance_violations,
    star_shadow,
)
from shadowpos.solvers import max_set
from shadowpos.visibility import SetProperty

from conftest import random_connected_graph


def test_shadow_of_single_edge_is_p4():
    sg = shadow(generate(parse_family_spec("path:2")))
    p4 = generate(parse_family_spec("path:4"))
    assert sg.graph.n == 4 and sg.graph.m == 3
    assert canonical_key(sg.graph) == canonical_key(p4)


def test_shadow_edge_count_and_independent_shadow_side():
    rng = random.Random(2)
    for _ in range(15):
        g = random_connected_graph(rng.randint(2, 8), rng)
        sg = shadow(g)
        assert sg.graph.m == 3 * g.m
        for u in range(g.n, 2 * g.n):
            assert sg.graph.adj[u] & sg.shadow_side_mask() == 0
        for v in range(g.n):
            assert sg.twin(v) == v + g.n
            assert sg.twin(v + g.n) == v
            assert not sg.graph.has_edge(v, v + g.n)
            assert sg.graph.label(v + g.n) == sg.graph.label(v) + "'"
            # Twin neighborhood equals the base neighborhood.
            assert sg.graph.adj[v + g.n] == sg.graph.adj[v] & sg.base_side_mask()


def test_shadow_requires_connected():
    with pytest.raises(GraphError):
        shadow(build_graph(4, [(0, 1), (2, 3)]))


def test_star_shadow_shape():
    g = generate(parse_family_spec("cycle:5"))
    h = star_shadow(g)
    assert h.n == 11 and h.label(10) == "s*"
    assert h.degree(10) == 5
    s = structural_queries(h)
    assert s.connected and s.is_triangle_free


def test_iterated_star_shadow_stays_triangle_free():
    g = generate(parse_family_spec("cycle:5"))
    h = iterated_star_shadow(g, 2)
    assert h.n == 23
    assert structural_queries(h).is_triangle_free


def test_distance_clauses_hold_on_random_graphs():
    rng = random.Random(9)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 8), rng)
        assert shadow_distance_violations(shadow(g)) == []


def test_distance_clauses_catch_a_corrupted_shadow():
    sg = shadow(generate(parse_family_spec("path:3")))
    # Add an illegal twin-twin edge; the clause checker must notice.
    rows = list(sg.graph.adj)
    rows[3] |= 1 << 5
    rows[5] |= 1 << 3
    bad = type(sg)(build_graph(6, [(u, v) for u in range(6)
                                   for v in range(u + 1, 6)
                                   if rows[u] >> v & 1]), 3)
    assert shadow_distance_violations(bad) != []


def test_pi_partition_arithmetic():
    rng = random.Random(4)
    for _ in range(20):
        g = random_connected_graph(rng.randint(2, 7), rng)
        sg = shadow(g)
        s = rng.getrandbits(2 * g.n)
        p = pi_partition(sg, s)
        full = sg.base_side_mask()
        assert p.v1 | p.v2 | p.v3 | p.v4 == full
        assert p.n1 + p.n2 + p.n3 + p.n4 == g.n
        assert s.bit_count() == g.n + p.n1 - p.n4


def test_gp_partition_clauses_on_solver_sets():
    for text in ["path:4", "cycle:5", "complete:4", "star:3", "bipartite:2,3"]:
        sg = shadow(generate(parse_family_spec(text)))
        r = max_set(SetProperty.GP, sg.graph)
        assert gp_partition_violations(sg, r.witness) == []


def test_gp_partition_clauses_flag_bad_sets():
    sg = shadow(generate(parse_family_spec("path:3")))
    # {v, its neighbor, both twins}: v1 = {0, 1} is not independent.
    bad = 1 << 0 | 1 << 1 | 1 << 3 | 1 << 4
    assert any("independent" in msg for msg in gp_partition_violations(sg, bad))
