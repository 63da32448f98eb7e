import pytest
from sklearn.base import clone

from cowordmap import fixtures
from cowordmap.cliques import build_lexical_graph, k_clique_communities
from cowordmap.corpus import TimeWindow
from cowordmap.errors import BudgetExceededError
from cowordmap.estimators import FieldExtractor, MacroMapper
from cowordmap.macromap import build_macro_map
from cowordmap.proximity import ProximityParams


def fixture_extractor():
    return FieldExtractor(
        alpha=fixtures.FIXTURE_ALPHA,
        threshold=fixtures.FIXTURE_THRESHOLD,
        k=fixtures.FIXTURE_K,
        window=fixtures.FIXTURE_WINDOW,
    )


def test_get_set_params_round_trip():
    extractor = FieldExtractor(alpha=2.0, threshold=0.3, k=4)
    params = extractor.get_params()
    assert params["alpha"] == 2.0 and params["k"] == 4
    extractor.set_params(alpha=0.5)
    assert extractor.alpha == 0.5
    cloned = clone(extractor)
    assert cloned.get_params() == extractor.get_params()


def test_nested_params_on_macro_mapper():
    mapper = MacroMapper(field_extractor=FieldExtractor(alpha=3.0))
    params = mapper.get_params(deep=True)
    assert params["field_extractor__alpha"] == 3.0
    mapper.set_params(field_extractor__alpha=0.25, min_terms=2)
    assert mapper.field_extractor.alpha == 0.25
    assert mapper.min_terms == 2


def test_fit_matches_function_pipeline(fixture_store):
    extractor = fixture_extractor().fit(fixture_store)
    params = ProximityParams(
        fixtures.FIXTURE_ALPHA, fixtures.FIXTURE_THRESHOLD, fixtures.FIXTURE_WINDOW
    )
    graph = build_lexical_graph(fixture_store, params)
    assert extractor.graph_.edges == graph.edges
    communities = k_clique_communities(graph, fixtures.FIXTURE_K)
    assert [c.members for c in extractor.communities_] == [
        c.members for c in communities
    ]
    assert len(extractor.fields_) == 4


def test_fit_predict_returns_member_label_sets(fixture_store):
    memberships = fixture_extractor().fit_predict(fixture_store)
    bridge_fields = [m for m in memberships if fixtures.BRIDGE in m]
    assert len(bridge_fields) == 2  # the planted overlap


def test_window_accepts_tuple_and_defaults_to_full_range(fixture_store):
    extractor = FieldExtractor(window=(2002, 2005)).fit(fixture_store)
    assert extractor.window_ == TimeWindow(2002, 2005)
    full = FieldExtractor(threshold=0.99).fit(fixture_store)
    assert full.window_ == fixture_store.year_range


def test_macro_mapper_composes(fixture_store):
    mapper = MacroMapper(field_extractor=fixture_extractor()).fit(fixture_store)
    direct = build_macro_map(
        mapper.field_extractor_.fields_,
        fixture_store,
        window=fixtures.FIXTURE_WINDOW,
    )
    assert mapper.map_ == direct
    assert {n.field_id for n in mapper.map_.nodes} == {
        f.id for f in mapper.field_extractor_.fields_ if 6 <= len(f.members) <= 20
    }


def test_macro_mapper_leaves_configured_extractor_unfitted(fixture_store):
    extractor = fixture_extractor()
    MacroMapper(field_extractor=extractor).fit(fixture_store)
    assert not hasattr(extractor, "fields_")  # fitted clone lives on the mapper


def test_invalid_params_raise(fixture_store):
    with pytest.raises(ValueError):
        FieldExtractor(alpha=-1).fit(fixture_store)
    with pytest.raises(ValueError):
        FieldExtractor(k=2).fit(fixture_store)
    with pytest.raises(TypeError):
        FieldExtractor().fit([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        MacroMapper(min_terms=5, max_terms=2).fit(fixture_store)


def test_budget_propagates(fixture_store):
    with pytest.raises(BudgetExceededError):
        FieldExtractor(
            threshold=0.0, window=fixtures.FIXTURE_WINDOW, clique_budget=1
        ).fit(fixture_store)
