"""Thresholded lexical graph and overlapping communities by k-clique percolation.

A community is the union of all k-cliques reachable from one another
through adjacency, where two k-cliques are adjacent when they share
k - 1 nodes.  k-cliques are enumerated as the size-k subsets of the
maximal cliques, and chained with a union-find keyed on their (k-1)
subsets: two distinct k-cliques share k - 1 nodes exactly when they
share a (k-1)-subset.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations
from xml.sax.saxutils import escape

from .errors import BudgetExceededError
from .proximity import pair_value
from .validation import check_edge_rule, check_k

DEFAULT_CLIQUE_BUDGET = 10_000_000


@dataclass(frozen=True)
class LexicalGraph:
    """Undirected term graph induced by thresholding the proximity."""

    nodes: frozenset
    edges: frozenset  # of (min_id, max_id) tuples
    params: object = None
    _adjacency: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        adjacency = {node: set() for node in self.nodes}
        for a, b in self.edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
        object.__setattr__(self, "_adjacency", adjacency)

    @property
    def adjacency(self):
        return self._adjacency

    def degree(self, node):
        return len(self._adjacency[node])


@dataclass(frozen=True)
class CpmParams:
    """Clique size and edge rule for the percolation pipeline."""

    k: int = 3
    edge_rule: str = "or"

    def __post_init__(self):
        check_k(self.k)
        check_edge_rule(self.edge_rule)


@dataclass(frozen=True)
class Community:
    id: int
    members: frozenset


def build_lexical_graph(store, params, edge_rule="or"):
    """Link term pairs whose proximity strictly exceeds the threshold.

    Under the default ``or`` rule an edge needs the threshold to be
    passed in either direction; ``and`` requires both.  At alpha = 1
    the measure is symmetric and the two rules coincide.  Terms with
    zero window occurrences are left out entirely; isolated nodes are
    retained.
    """
    check_edge_rule(edge_rule)
    counts = store.window_counts(params.window)
    nodes = frozenset(t for t, n in counts.occurrences.items() if n > 0)
    s = params.threshold
    alpha = params.alpha
    edges = set()
    for (a, b), n_ab in counts.pair_counts.items():
        if n_ab <= 0 or a not in nodes or b not in nodes:
            continue
        forward = pair_value(n_ab, counts.occ(a), counts.occ(b), alpha)
        backward = pair_value(n_ab, counts.occ(b), counts.occ(a), alpha)
        if edge_rule == "or":
            keep = forward > s or backward > s
        else:
            keep = forward > s and backward > s
        if keep:
            edges.add((a, b))
    return LexicalGraph(nodes=nodes, edges=frozenset(edges), params=params)


def maximal_cliques(graph, budget=DEFAULT_CLIQUE_BUDGET):
    """All maximal cliques, as sorted tuples in lexicographic order.

    Recursive pivot-based enumeration; raises BudgetExceededError once
    more than ``budget`` maximal cliques have been produced, so a
    pathological dense graph fails loudly instead of hanging.
    """
    adjacency = graph.adjacency
    cliques = []

    def expand(current, candidates, excluded):
        if not candidates and not excluded:
            cliques.append(tuple(sorted(current)))
            if len(cliques) > budget:
                raise BudgetExceededError(budget)
            return
        pivot = max(sorted(candidates | excluded), key=lambda v: len(candidates & adjacency[v]))
        for v in sorted(candidates - adjacency[pivot]):
            expand(current | {v}, candidates & adjacency[v], excluded & adjacency[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    if graph.nodes:
        expand(frozenset(), set(graph.nodes), set())
    return sorted(cliques)


class UnionFind:
    """Disjoint sets over dense indices, with path compression."""

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def k_clique_communities(graph, k=3, budget=DEFAULT_CLIQUE_BUDGET):
    """Overlapping communities of the graph at clique size k.

    Returns Community objects sorted by smallest member id, then size;
    nodes lying in no k-clique belong to no community.
    """
    if isinstance(k, CpmParams):
        k = k.k
    check_k(k)

    k_cliques = set()
    for clique in maximal_cliques(graph, budget=budget):
        if len(clique) < k:
            continue
        for sub in combinations(clique, k):
            k_cliques.add(sub)
    if not k_cliques:
        return []

    ordered = sorted(k_cliques)
    uf = UnionFind(len(ordered))
    buckets = {}
    for index, kc in enumerate(ordered):
        for sub in combinations(kc, k - 1):
            first = buckets.setdefault(sub, index)
            if first != index:
                uf.union(first, index)

    members_by_root = {}
    for index, kc in enumerate(ordered):
        members_by_root.setdefault(uf.find(index), set()).update(kc)

    communities = sorted(
        (frozenset(members) for members in members_by_root.values()),
        key=lambda m: (min(m), len(m), tuple(sorted(m))),
    )
    return [Community(i, members) for i, members in enumerate(communities)]


# ---------------------------------------------------------------------------
# Exports

def edges_csv_text(graph, store):
    """Edge list as `term_a,term_b` CSV, sorted by label pair."""
    rows = sorted(
        tuple(sorted((store.label_of(a), store.label_of(b)))) for a, b in graph.edges
    )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["term_a", "term_b"])
    writer.writerows(rows)
    return out.getvalue()


def graph_graphml_text(graph, store):
    """GraphML with a `label` node attribute, deterministically ordered."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <graph edgedefault="undirected">',
    ]
    for node in sorted(graph.nodes):
        lines.append(f'    <node id="n{node}">')
        lines.append(f'      <data key="label">{escape(store.label_of(node))}</data>')
        lines.append("    </node>")
    for a, b in sorted(graph.edges):
        lines.append(f'    <edge source="n{a}" target="n{b}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def communities_json_dict(communities, store):
    return {
        "communities": [
            {
                "id": community.id,
                "members": sorted(store.label_of(t) for t in community.members),
            }
            for community in communities
        ]
    }
