"""Macro-level map: a weighted graph of paradigmatic fields.

Edge weights count the terms shared by two fields.  A node's raw size
is the mean normalized occurrence share of its members and its
displayed size a logarithmic mapping of that (floored at 1 so every
surviving field stays visible).  Field activity is the mean ratio of
member occurrence shares between the window and the preceding
equal-length one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple
from xml.sax.saxutils import escape

from .errors import DegenerateWindowError, UndefinedActivityError, WindowRangeError
from .validation import check_log_base, check_size_filter

DEFAULT_SIZE_FILTER = (6, 20)
DEFAULT_LOG_BASE = 10.0

#: Growth/activity color anchors: a ratio of 1 is neutral, decline pulls
#: toward blue and a 150% increase (ratio 2.5) reaches full red.
FULL_RED_RATIO = 2.5
_BLUE = (59, 76, 192)
_WHITE = (255, 255, 255)
_RED = (180, 4, 38)
_NEUTRAL_GRAY = (200, 200, 200)


class FieldActivity(NamedTuple):
    value: float
    excluded: tuple  # member labels with a zero previous-period share


@dataclass(frozen=True)
class MacroNode:
    field_id: int
    size_raw: float
    size_display: float
    activity: float | None
    activity_excluded: int
    label: str
    n_terms: int


@dataclass(frozen=True)
class MacroEdge:
    field_a: int
    field_b: int
    weight: int


@dataclass(frozen=True)
class MacroMap:
    nodes: tuple
    edges: tuple
    window: object
    filter: tuple


def normalized_share(store, term, window):
    """Occurrence count of the term divided by the vocabulary total."""
    term_id = store.resolve(term)
    counts = store.window_counts(window)
    if counts.total == 0:
        raise DegenerateWindowError(f"window {window} has zero total occurrences")
    return counts.occ(term_id) / counts.total


def field_activity(store, community, window, overlap_boundary=False):
    """Mean share ratio of the members between the window and its predecessor.

    Members whose previous-period share is zero cannot contribute a
    ratio; they are excluded from the mean and reported.  When every
    member is excluded the activity is undefined.
    """
    previous = store.check_window(window.preceding(overlap_boundary))
    ratios = []
    excluded = []
    members = getattr(community, "members", community)
    for term in sorted(members):
        base = normalized_share(store, term, previous)
        if base == 0.0:
            excluded.append(store.label_of(term))
            continue
        ratios.append(normalized_share(store, term, window) / base)
    if not ratios:
        raise UndefinedActivityError(
            f"every member of community has zero share in {previous}"
        )
    return FieldActivity(sum(ratios) / len(ratios), tuple(excluded))


def build_macro_map(
    fields,
    store,
    window=None,
    size_filter=DEFAULT_SIZE_FILTER,
    log_base=DEFAULT_LOG_BASE,
    overlap_boundary=False,
):
    """Assemble the field graph for fields within the size filter.

    Nodes carry the generic label of their field; every pair of fields
    sharing at least one term gets an edge weighted by the shared-term
    count.  Activity is recorded as None when the preceding window is
    not available or no member has a previous-period share.
    """
    min_terms, max_terms = check_size_filter(*size_filter)
    check_log_base(log_base)
    kept = [f for f in fields if min_terms <= len(f.members) <= max_terms]
    if not kept:
        return MacroMap((), (), window, (min_terms, max_terms))
    if window is None:
        window = kept[0].window

    nodes = []
    raw_sizes = []
    for f in kept:
        shares = [normalized_share(store, p.term, window) for p in f.members]
        raw_sizes.append(sum(shares) / len(shares))
    min_raw = min(r for r in raw_sizes if r > 0) if any(r > 0 for r in raw_sizes) else 1.0

    for f, raw in zip(kept, raw_sizes):
        activity = None
        excluded = 0
        try:
            result = field_activity(
                store,
                frozenset(p.term for p in f.members),
                window,
                overlap_boundary=overlap_boundary,
            )
            activity = result.value
            excluded = len(result.excluded)
        except (WindowRangeError, UndefinedActivityError, DegenerateWindowError):
            activity = None
            excluded = len(f.members)
        display = 1.0
        if raw > 0:
            display = max(1.0, math.log(raw / min_raw) / math.log(log_base))
        nodes.append(
            MacroNode(
                field_id=f.id,
                size_raw=raw,
                size_display=display,
                activity=activity,
                activity_excluded=excluded,
                label=f.label_generic,
                n_terms=len(f.members),
            )
        )

    edges = []
    for i in range(len(kept)):
        for j in range(i + 1, len(kept)):
            shared = kept[i].member_labels() & kept[j].member_labels()
            if shared:
                edges.append(
                    MacroEdge(kept[i].id, kept[j].id, len(shared))
                )
    edges.sort(key=lambda e: (e.field_a, e.field_b))
    return MacroMap(tuple(nodes), tuple(edges), window, (min_terms, max_terms))


# ---------------------------------------------------------------------------
# Color ramp shared by DOT export and the viewer contract

def activity_color(ratio):
    """Hex color for a growth/activity ratio; None renders neutral gray."""
    if ratio is None:
        return "#%02x%02x%02x" % _NEUTRAL_GRAY
    if ratio <= 1.0:
        fraction = max(0.0, min(1.0, ratio))
        rgb = _mix(_BLUE, _WHITE, fraction)
    else:
        fraction = min(1.0, (ratio - 1.0) / (FULL_RED_RATIO - 1.0))
        rgb = _mix(_WHITE, _RED, fraction)
    return "#%02x%02x%02x" % rgb


def _mix(low, high, fraction):
    return tuple(round(l + (h - l) * fraction) for l, h in zip(low, high))


# ---------------------------------------------------------------------------
# Exports

def macro_map_json_dict(macro_map):
    return {
        "window": [macro_map.window.y1, macro_map.window.y2] if macro_map.window else None,
        "filter": list(macro_map.filter),
        "nodes": [
            {
                "field_id": n.field_id,
                "size_raw": n.size_raw,
                "size_display": n.size_display,
                "activity": n.activity,
                "activity_excluded": n.activity_excluded,
                "label": n.label,
                "n_terms": n.n_terms,
            }
            for n in macro_map.nodes
        ],
        "edges": [
            {"field_a": e.field_a, "field_b": e.field_b, "weight": e.weight}
            for e in macro_map.edges
        ],
    }


def macro_map_graphml_text(macro_map):
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="size_display" for="node" attr.name="size_display" attr.type="double"/>',
        '  <key id="activity" for="node" attr.name="activity" attr.type="double"/>',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <key id="weight" for="edge" attr.name="weight" attr.type="int"/>',
        '  <graph edgedefault="undirected">',
    ]
    for n in macro_map.nodes:
        lines.append(f'    <node id="f{n.field_id}">')
        lines.append(f'      <data key="size_display">{_number(n.size_display)}</data>')
        if n.activity is not None:
            lines.append(f'      <data key="activity">{_number(n.activity)}</data>')
        lines.append(f'      <data key="label">{escape(n.label)}</data>')
        lines.append("    </node>")
    for e in macro_map.edges:
        lines.append(f'    <edge source="f{e.field_a}" target="f{e.field_b}">')
        lines.append(f'      <data key="weight">{e.weight}</data>')
        lines.append("    </edge>")
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def macro_map_dot_text(macro_map):
    lines = ["graph macromap {", "  node [style=filled];"]
    for n in macro_map.nodes:
        color = activity_color(n.activity)
        label = n.label.replace('"', '\\"')
        lines.append(
            f'  f{n.field_id} [label="{label}", width={_number(n.size_display)}, '
            f'fillcolor="{color}"];'
        )
    for e in macro_map.edges:
        lines.append(f"  f{e.field_a} -- f{e.field_b} [weight={e.weight}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _number(value):
    return repr(float(value))
