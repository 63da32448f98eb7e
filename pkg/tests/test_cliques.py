import pytest

from cowordmap import fixtures
from cowordmap.cliques import (
    Community,
    CpmParams,
    LexicalGraph,
    build_lexical_graph,
    communities_json_dict,
    edges_csv_text,
    graph_graphml_text,
    k_clique_communities,
    maximal_cliques,
)
from cowordmap.corpus import TimeWindow, ingest
from cowordmap.errors import BudgetExceededError
from cowordmap.proximity import ProximityParams

from oracles import (
    brute_k_clique_communities,
    brute_maximal_cliques,
    proximity_oracle,
    random_graph,
)

W = TimeWindow(2000, 2000)


def graph_of(edges, nodes=None):
    edge_set = frozenset(tuple(sorted(e)) for e in edges)
    node_set = set(nodes or ())
    for a, b in edge_set:
        node_set.update((a, b))
    return LexicalGraph(nodes=frozenset(node_set), edges=edge_set)


# ---------------------------------------------------------------------------
# lexical graph construction

def test_threshold_one_gives_edgeless_graph(fixture_store, fixture_window):
    params = ProximityParams(1.0, 1.0, fixture_window)
    graph = build_lexical_graph(fixture_store, params)
    assert graph.edges == frozenset()
    assert graph.nodes  # isolated nodes retained


def test_edge_rules_coincide_at_alpha_one(fixture_store, fixture_window):
    params = ProximityParams(1.0, 0.1, fixture_window)
    by_or = build_lexical_graph(fixture_store, params, edge_rule="or")
    by_and = build_lexical_graph(fixture_store, params, edge_rule="and")
    assert by_or.edges == by_and.edges


def test_edge_rules_differ_for_asymmetric_measure():
    store = ingest(
        [("big", 2000, 100), ("small", 2000, 10)],
        [("big", "small", 2000, 10)],
    )
    # P(small->big) = (10/10)^a (10/100)^(1/a); P(big->small) = (10/100)^a (10/10)^(1/a)
    params = ProximityParams(4.0, 0.5, W)
    by_or = build_lexical_graph(store, params, edge_rule="or")
    by_and = build_lexical_graph(store, params, edge_rule="and")
    assert len(by_or.edges) == 1
    assert by_and.edges == frozenset()


def test_three_term_edge_set_matches_oracle_threshold():
    counts = {
        ("a", "b"): (6, (10, 12)),
        ("a", "c"): (2, (10, 15)),
        ("b", "c"): (9, (12, 15)),
    }
    store = ingest(
        [("a", 2000, 10), ("b", 2000, 12), ("c", 2000, 15)],
        [(x, y, 2000, n) for (x, y), (n, _) in counts.items()],
    )
    alpha, s = 2.0, 0.15
    expected = set()
    for (x, y), (n, (n_x, n_y)) in counts.items():
        forward = proximity_oracle(n, n_x, n_y, alpha)
        backward = proximity_oracle(n, n_y, n_x, alpha)
        if forward > s or backward > s:
            expected.add(tuple(sorted((store.id_of(x), store.id_of(y)))))
    graph = build_lexical_graph(store, ProximityParams(alpha, s, W))
    assert graph.edges == frozenset(expected)
    assert expected  # the chosen counts keep at least one edge


def test_graph_has_no_self_loops_and_valid_endpoints(fixture_store, fixture_window):
    graph = build_lexical_graph(
        fixture_store, ProximityParams(1.0, 0.01, fixture_window)
    )
    for a, b in graph.edges:
        assert a != b
        assert a in graph.nodes and b in graph.nodes


# ---------------------------------------------------------------------------
# maximal cliques

def test_triangle_is_single_clique():
    graph = graph_of([(0, 1), (1, 2), (0, 2)])
    assert maximal_cliques(graph) == [(0, 1, 2)]


def test_path_gives_two_edges():
    graph = graph_of([("a", "b"), ("b", "c")])
    assert maximal_cliques(graph) == [("a", "b"), ("b", "c")]


def test_isolated_node_is_its_own_maximal_clique():
    graph = graph_of([(0, 1)], nodes=[0, 1, 2])
    assert maximal_cliques(graph) == [(0, 1), (2,)]


def test_maximal_cliques_match_brute_force_oracle():
    for seed in range(40):
        n = 4 + seed % 9  # 4..12 nodes
        p = (0.3, 0.5, 0.7)[seed % 3]
        nodes, edges = random_graph(n, p, seed=1000 + seed)
        graph = graph_of(edges, nodes=nodes)
        assert maximal_cliques(graph) == brute_maximal_cliques(nodes, edges)


def test_clique_budget_raises():
    nodes, edges = random_graph(12, 0.7, seed=7)
    graph = graph_of(edges, nodes=nodes)
    with pytest.raises(BudgetExceededError) as err:
        maximal_cliques(graph, budget=2)
    assert "2" in str(err.value)


# ---------------------------------------------------------------------------
# k-clique percolation

def members_of(communities):
    return {c.members for c in communities}


def test_two_triangles_sharing_an_edge_merge():
    graph = graph_of([(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
    communities = k_clique_communities(graph, 3)
    assert members_of(communities) == {frozenset({0, 1, 2, 3})}
    assert members_of(communities) == brute_k_clique_communities(
        graph.nodes, graph.edges, 3
    )


def test_two_triangles_sharing_a_node_overlap():
    graph = graph_of([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    communities = k_clique_communities(graph, 3)
    assert members_of(communities) == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
    assert members_of(communities) == brute_k_clique_communities(
        graph.nodes, graph.edges, 3
    )
    in_both = [c for c in communities if 2 in c.members]
    assert len(in_both) == 2  # node 2 belongs to both communities


def test_triangle_free_graph_has_no_communities():
    graph = graph_of([(0, 1), (1, 2), (2, 3), (3, 0)])  # 4-cycle
    assert k_clique_communities(graph, 3) == []


def test_k_larger_than_largest_clique_gives_nothing():
    graph = graph_of([(0, 1), (1, 2), (0, 2)])
    assert k_clique_communities(graph, 4) == []


def test_percolation_matches_brute_force_oracle():
    for seed in range(60):
        n = 4 + seed % 9
        p = (0.3, 0.5, 0.7)[seed % 3]
        nodes, edges = random_graph(n, p, seed=2000 + seed)
        graph = graph_of(edges, nodes=nodes)
        for k in (3, 4):
            got = members_of(k_clique_communities(graph, k))
            assert got == brute_k_clique_communities(nodes, edges, k)


def test_every_member_lies_in_an_internal_k_clique():
    # Community vertex sets may overlap and can even nest (e.g. seed
    # 3010, where {1,4,5} sits inside an 11-node community; the brute
    # force oracle and networkx both agree), but each community must be
    # covered by its own k-cliques and sets are pairwise distinct.
    from itertools import combinations

    for seed in range(25):
        nodes, edges = random_graph(11, 0.5, seed=3000 + seed)
        graph = graph_of(edges, nodes=nodes)
        edge_set = {frozenset(e) for e in graph.edges}
        communities = k_clique_communities(graph, 3)
        for c in communities:
            assert len(c.members) >= 3
            internal = {
                sub
                for sub in combinations(sorted(c.members), 3)
                if all(frozenset(p) in edge_set for p in combinations(sub, 2))
            }
            covered = set()
            for sub in internal:
                covered.update(sub)
            assert covered == c.members
        assert len({c.members for c in communities}) == len(communities)


def test_deterministic_ids_sorted_by_smallest_member():
    graph = graph_of([(5, 6), (6, 7), (5, 7), (0, 1), (1, 2), (0, 2)])
    communities = k_clique_communities(graph, 3)
    assert [c.id for c in communities] == [0, 1]
    assert communities[0].members == frozenset({0, 1, 2})
    assert communities[1].members == frozenset({5, 6, 7})


def test_cpm_params_validation():
    with pytest.raises(ValueError):
        CpmParams(k=2)
    with pytest.raises(ValueError):
        CpmParams(k=3, edge_rule="xor")
    assert k_clique_communities(graph_of([(0, 1)]), CpmParams(k=3)) == []


def test_monotone_threshold_shrinks_community_cover(fixture_store, fixture_window):
    covers = []
    for s in (0.02, 0.05, 0.2, 0.3, 0.9):
        graph = build_lexical_graph(
            fixture_store, ProximityParams(1.0, s, fixture_window)
        )
        communities = k_clique_communities(graph, 3)
        cover = set()
        for c in communities:
            cover.update(c.members)
        covers.append(cover)
    for tighter, looser in zip(covers[1:], covers):
        assert tighter <= looser


# ---------------------------------------------------------------------------
# exports

def test_edges_csv_sorted_by_label(fixture_store, fixture_window):
    graph = build_lexical_graph(
        fixture_store, ProximityParams(1.0, 0.05, fixture_window)
    )
    text = edges_csv_text(graph, fixture_store)
    lines = text.strip().split("\n")
    assert lines[0] == "term_a,term_b"
    assert lines[1:] == sorted(lines[1:])
    assert len(lines) - 1 == len(graph.edges)


def test_graphml_contains_nodes_and_edges(fixture_store, fixture_window):
    graph = build_lexical_graph(
        fixture_store, ProximityParams(1.0, 0.05, fixture_window)
    )
    text = graph_graphml_text(graph, fixture_store)
    assert text.count("<node ") == len(graph.nodes)
    assert text.count("<edge ") == len(graph.edges)
    assert "complex systems" in text


def test_communities_json_schema(fixture_store):
    doc = communities_json_dict(
        [Community(0, frozenset({fixture_store.id_of(fixtures.HUB)}))], fixture_store
    )
    assert doc == {"communities": [{"id": 0, "members": ["complex systems"]}]}
