"""Scikit-learn style front door for the meso/macro pipeline.

FieldExtractor.fit(store) runs threshold graph -> k-clique percolation
-> per-term profiles; MacroMapper composes a FieldExtractor and adds
the field-overlap graph.  Hyperparameters live in __init__ so
get_params / set_params / clone work, including nested access such as
``field_extractor__alpha`` on MacroMapper.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, clone

from .cliques import DEFAULT_CLIQUE_BUDGET, build_lexical_graph, k_clique_communities
from .corpus import CorpusStore, TimeWindow
from .fields import build_field
from .macromap import DEFAULT_LOG_BASE, DEFAULT_SIZE_FILTER, build_macro_map
from .proximity import ProximityParams
from .validation import (
    check_alpha,
    check_edge_rule,
    check_growth_basis,
    check_k,
    check_log_base,
    check_size_filter,
    check_threshold,
)


def _as_window(window, store):
    if window is None:
        return store.year_range
    if isinstance(window, TimeWindow):
        return store.check_window(window)
    y1, y2 = window
    return store.check_window(TimeWindow(int(y1), int(y2)))


def _check_store(X):
    if not isinstance(X, CorpusStore):
        raise TypeError(f"expected a CorpusStore, got {type(X).__name__}")
    return X


class FieldExtractor(BaseEstimator):
    """Detect overlapping paradigmatic fields in a corpus store.

    Parameters mirror the pipeline: focus parameter ``alpha``, edge
    threshold ``threshold``, clique size ``k``, analysis ``window``
    (None means the full corpus range), ``edge_rule`` ('or'/'and'),
    ``growth_basis`` and the boundary-year convention for the growth
    reference window.

    After fit: ``graph_``, ``communities_``, ``fields_``, ``window_``.
    """

    def __init__(
        self,
        alpha=1.0,
        threshold=0.1,
        k=3,
        window=None,
        edge_rule="or",
        growth_basis="occurrences",
        overlap_boundary=False,
        clique_budget=DEFAULT_CLIQUE_BUDGET,
    ):
        self.alpha = alpha
        self.threshold = threshold
        self.k = k
        self.window = window
        self.edge_rule = edge_rule
        self.growth_basis = growth_basis
        self.overlap_boundary = overlap_boundary
        self.clique_budget = clique_budget

    def fit(self, X, y=None):
        store = _check_store(X)
        check_alpha(self.alpha)
        check_threshold(self.threshold)
        check_k(self.k)
        check_edge_rule(self.edge_rule)
        check_growth_basis(self.growth_basis)
        window = _as_window(self.window, store)
        params = ProximityParams(float(self.alpha), float(self.threshold), window)
        self.window_ = window
        self.graph_ = build_lexical_graph(store, params, edge_rule=self.edge_rule)
        self.communities_ = k_clique_communities(
            self.graph_, self.k, budget=self.clique_budget
        )
        self.fields_ = [
            build_field(
                store,
                community,
                params,
                overlap_boundary=self.overlap_boundary,
                growth_basis=self.growth_basis,
                require_growth_window=False,
            )
            for community in self.communities_
        ]
        return self

    def fit_predict(self, X, y=None):
        """Member label sets, one frozenset per detected field."""
        self.fit(X, y)
        return [field.member_labels() for field in self.fields_]


class MacroMapper(BaseEstimator):
    """Field-overlap graph on top of a (nested) FieldExtractor.

    After fit: ``map_`` plus the fitted ``field_extractor_``.
    """

    def __init__(
        self,
        field_extractor=None,
        min_terms=DEFAULT_SIZE_FILTER[0],
        max_terms=DEFAULT_SIZE_FILTER[1],
        log_base=DEFAULT_LOG_BASE,
    ):
        self.field_extractor = field_extractor
        self.min_terms = min_terms
        self.max_terms = max_terms
        self.log_base = log_base

    def fit(self, X, y=None):
        store = _check_store(X)
        check_size_filter(self.min_terms, self.max_terms)
        check_log_base(self.log_base)
        extractor = self.field_extractor
        if extractor is None:
            extractor = FieldExtractor()
        self.field_extractor_ = clone(extractor).fit(store)
        self.map_ = build_macro_map(
            self.field_extractor_.fields_,
            store,
            window=self.field_extractor_.window_,
            size_filter=(self.min_terms, self.max_terms),
            log_base=self.log_base,
            overlap_boundary=self.field_extractor_.overlap_boundary,
        )
        return self

    def fit_predict(self, X, y=None):
        self.fit(X, y)
        return self.map_
