"""Acceptance suite: one test per release criterion, stated tolerances.

Each criterion prints a [PASS]/[FAIL] line on the real stdout so the
verdicts stay visible under pytest's capture.  Randomized suites use
fixed seeds; counts are drawn small enough that every value stays in
the normal double range (underflow to 0.0 would fake ties that the
mathematical strict-monotonicity property does not have).
"""

import json
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from cowordmap import fixtures
from cowordmap.cli import main as cli_main
from cowordmap.cliques import LexicalGraph, k_clique_communities
from cowordmap.corpus import TimeWindow, ingest
from cowordmap.estimators import FieldExtractor
from cowordmap.fields import genericity_index, specificity_index
from cowordmap.macromap import build_macro_map, field_activity, normalized_share
from cowordmap.proximity import ProximityParams, neighborhood, pair_value

from oracles import brute_k_clique_communities, equivalence_index, random_graph

REL = 1e-12
FLOOR = 1e-300


@contextmanager
def criterion(name):
    try:
        yield
    except Exception:
        print(f"[FAIL] {name}", file=sys.__stdout__)
        raise
    print(f"[PASS] {name}", file=sys.__stdout__)


def random_triples(seed, count, max_n=1000):
    rng = random.Random(seed)
    for _ in range(count):
        n_i = rng.randint(1, max_n)
        n_j = rng.randint(1, max_n)
        n_ij = rng.randint(0, min(n_i, n_j))
        alpha = 10 ** rng.uniform(-2, 2)
        yield n_ij, n_i, n_j, alpha


def test_formula_properties_one_to_five():
    with criterion("formula properties 1-5 (randomized, 1e-12 relative, <5s)"):
        start = time.monotonic()
        checked = 0
        for n_ij, n_i, n_j, alpha in random_triples(101, 10_000):
            value = pair_value(n_ij, n_i, n_j, alpha)
            # property 1 and range
            assert 0.0 <= value <= 1.0
            if n_ij == 0:
                assert value == 0.0
                continue
            # property 3 via identical counts
            assert pair_value(n_i, n_i, n_i, alpha) == 1.0
            # property 4: strictly growing in N_ij ...
            if n_ij < min(n_i, n_j):
                assert pair_value(n_ij + 1, n_i, n_j, alpha) > value
            # ... and strictly decreasing in N_i and N_j
            assert pair_value(n_ij, n_i + 1, n_j, alpha) < value
            assert pair_value(n_ij, n_i, n_j + 1, alpha) < value
            # property 5: scale invariance
            for c in (2, 7, 1000):
                scaled = pair_value(c * n_ij, c * n_i, c * n_j, alpha)
                assert abs(scaled - value) <= REL * max(value, FLOOR)
            checked += 1
        # property 2: vanishing limit as N_ij/N_i -> 0
        previous = None
        for power in range(1, 10):
            value = pair_value(10, 2 * 10 ** power, 20, 1.5)
            if previous is not None:
                assert value < previous
            previous = value
        assert previous < 1e-8
        assert checked > 9000
        elapsed = time.monotonic() - start
        assert elapsed < 5.0, f"runtime {elapsed:.2f}s exceeds 5s"


def test_duality_of_measure_and_indexes():
    with criterion("duality P^a(i,j) = P^(1/a)(j,i) and i_g(a) = i_s(1/a)"):
        for n_ij, n_i, n_j, alpha in random_triples(202, 10_000):
            forward = pair_value(n_ij, n_i, n_j, alpha)
            backward = pair_value(n_ij, n_j, n_i, 1.0 / alpha)
            assert abs(forward - backward) <= REL * max(forward, FLOOR)

        rng = random.Random(203)
        window = TimeWindow(2000, 2000)
        for _ in range(25):
            n_terms = rng.randint(2, 6)
            labels = [f"term {i}" for i in range(n_terms)]
            occ = {lab: rng.randint(5, 60) for lab in labels}
            cooc = []
            for i in range(n_terms):
                for j in range(i + 1, n_terms):
                    cap = min(occ[labels[i]], occ[labels[j]])
                    n = rng.randint(0, cap)
                    if n:
                        cooc.append((labels[i], labels[j], 2000, n))
            store = ingest(
                [(lab, 2000, n) for lab, n in occ.items()], cooc, validation="strict"
            )
            from cowordmap.cliques import Community

            community = Community(0, frozenset(range(n_terms)))
            alpha = 10 ** rng.uniform(-1, 1)
            for label in labels:
                i_g = genericity_index(
                    store, community, label, ProximityParams(alpha, 0.0, window)
                )
                i_s_dual = specificity_index(
                    store, community, label, ProximityParams(1.0 / alpha, 0.0, window)
                )
                assert abs(i_g - i_s_dual) <= REL * max(i_g, FLOOR)


def test_equivalence_index_reduction_at_alpha_one():
    with criterion("alpha=1 reduces to the equivalence index (10^4 triples, 1e-12)"):
        rng = random.Random(303)
        for _ in range(10_000):
            n_i = rng.randint(1, 10 ** 6)
            n_j = rng.randint(1, 10 ** 6)
            n_ij = rng.randint(1, min(n_i, n_j))
            value = pair_value(n_ij, n_i, n_j, 1.0)
            exact = float(equivalence_index(n_ij, n_i, n_j))
            assert abs(value - exact) <= REL * max(exact, FLOOR)


def test_cpm_matches_brute_force_oracle():
    with criterion("k-clique percolation equals brute-force oracle (100 graphs, k in {3,4}, <60s)"):
        start = time.monotonic()
        for seed in range(100):
            n = 4 + seed % 9  # 4..12 nodes
            p = (0.3, 0.5, 0.7)[seed % 3]
            nodes, edges = random_graph(n, p, seed=4000 + seed)
            graph = LexicalGraph(
                nodes=frozenset(nodes),
                edges=frozenset(tuple(sorted(e)) for e in edges),
            )
            for k in (3, 4):
                got = {c.members for c in k_clique_communities(graph, k)}
                assert got == brute_k_clique_communities(nodes, edges, k)

        # canonical cases: two triangles sharing an edge merge, sharing
        # a node they stay separate communities overlapping in that node
        shared_edge = LexicalGraph(
            nodes=frozenset(range(4)),
            edges=frozenset({(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)}),
        )
        assert {c.members for c in k_clique_communities(shared_edge, 3)} == {
            frozenset({0, 1, 2, 3})
        }
        shared_node = LexicalGraph(
            nodes=frozenset(range(5)),
            edges=frozenset({(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)}),
        )
        communities = k_clique_communities(shared_node, 3)
        assert {c.members for c in communities} == {
            frozenset({0, 1, 2}),
            frozenset({2, 3, 4}),
        }
        assert sum(1 for c in communities if 2 in c.members) == 2
        elapsed = time.monotonic() - start
        assert elapsed < 60.0, f"runtime {elapsed:.2f}s exceeds 60s"


def test_planted_hierarchy_and_bridge_fixture():
    with criterion("planted hierarchy: hub/specific neighborhoods at alpha 10 / 0.1; bridge term overlaps two fields"):
        store = fixtures.fixture_store()
        window = fixtures.FIXTURE_WINDOW
        s = fixtures.FIXTURE_THRESHOLD
        hub = store.id_of(fixtures.HUB)
        specifics = {store.id_of(t) for t in fixtures.SPECIFICS}

        at_specific_focus = neighborhood(store, hub, ProximityParams(10.0, s, window))
        assert specifics <= at_specific_focus

        for specific in specifics:
            at_generic_focus = neighborhood(
                store, specific, ProximityParams(0.1, s, window)
            )
            assert hub in at_generic_focus

        memberships = FieldExtractor(
            alpha=fixtures.FIXTURE_ALPHA,
            threshold=s,
            k=fixtures.FIXTURE_K,
            window=window,
        ).fit_predict(store)
        bridge_fields = [m for m in memberships if fixtures.BRIDGE in m]
        assert len(bridge_fields) >= 2


def test_macro_assembly():
    with criterion("macro assembly: exact overlap weights, share normalization, A_C=1 on scaled corpus, 6..20 filter"):
        store = fixtures.fixture_store()
        window = fixtures.FIXTURE_WINDOW
        extractor = FieldExtractor(
            alpha=fixtures.FIXTURE_ALPHA,
            threshold=fixtures.FIXTURE_THRESHOLD,
            k=fixtures.FIXTURE_K,
            window=window,
        ).fit(store)
        macro = build_macro_map(extractor.fields_, store, window=window,
                                size_filter=(6, 20))

        by_id = {f.id: f for f in extractor.fields_}
        assert macro.edges  # the bridge edge exists
        for edge in macro.edges:
            shared = (
                by_id[edge.field_a].member_labels()
                & by_id[edge.field_b].member_labels()
            )
            assert edge.weight == len(shared)

        total = sum(
            normalized_share(store, t, window) for t in range(len(store))
        )
        assert abs(total - 1.0) <= 1e-12

        # uniformly scaled two-period corpus: shares unchanged, A_C == 1.0
        scaled = ingest(
            [("a", 1999, 3), ("b", 1999, 9), ("a", 2000, 6), ("b", 2000, 18)],
            [],
            validation="strict",
        )
        result = field_activity(
            scaled,
            {scaled.id_of("a"), scaled.id_of("b")},
            TimeWindow(2000, 2000),
        )
        assert result.value == 1.0

        sizes = {f.id: len(f.members) for f in extractor.fields_}
        kept = {n.field_id for n in macro.nodes}
        assert kept == {fid for fid, size in sizes.items() if 6 <= size <= 20}
        assert kept != set(sizes)  # the 4-term field is filtered out


def test_full_pipeline_determinism(tmp_path):
    with criterion("determinism: two full CLI runs produce byte-identical exports"):
        occ = tmp_path / "occ.csv"
        cooc = tmp_path / "cooc.csv"
        fixtures.write_fixture_csvs(occ, cooc)
        snapshots = []
        for name in ("run1", "run2"):
            base = tmp_path / name
            base.mkdir()
            store = base / "store.json"
            assert cli_main(
                ["ingest", "--occurrences", str(occ), "--cooccurrences", str(cooc),
                 "--out", str(store)]
            ) == 0
            assert cli_main(
                ["fields", "--store", str(store), "--window", "2002:2005",
                 "--alpha", str(fixtures.FIXTURE_ALPHA),
                 "--threshold", str(fixtures.FIXTURE_THRESHOLD),
                 "--k", str(fixtures.FIXTURE_K), "--out", str(base / "fields")]
            ) == 0
            assert cli_main(
                ["map", "--store", str(store), "--fields", str(base / "fields"),
                 "--out", str(base / "map")]
            ) == 0
            files = {}
            for path in sorted(base.rglob("*")):
                if not path.is_file():
                    continue
                data = path.read_bytes()
                if path.name == "store.json":
                    doc = json.loads(data)
                    doc.pop("provenance", None)  # run metadata excluded
                    data = json.dumps(doc, sort_keys=True).encode()
                files[str(path.relative_to(base))] = data
            snapshots.append(files)
        assert snapshots[0].keys() == snapshots[1].keys()
        for name in snapshots[0]:
            assert snapshots[0][name] == snapshots[1][name], name


def test_frozen_fixture_activities_cross_check():
    """Extra guard: the macro activities stay pinned to the exact rationals."""
    store = fixtures.fixture_store()
    extractor = FieldExtractor(
        alpha=fixtures.FIXTURE_ALPHA,
        threshold=fixtures.FIXTURE_THRESHOLD,
        k=fixtures.FIXTURE_K,
        window=fixtures.FIXTURE_WINDOW,
    ).fit(store)
    macro = build_macro_map(extractor.fields_, store)
    by_label = {n.label: n.activity for n in macro.nodes}
    assert by_label["complex systems"] == pytest.approx(
        float(Fraction(40685, 39006)), rel=REL
    )
    assert by_label["feature selection"] == pytest.approx(
        float(Fraction(33970, 28959)), rel=REL
    )
    assert by_label["knowledge discovery"] == pytest.approx(
        float(Fraction(8374, 9653)), rel=REL
    )
