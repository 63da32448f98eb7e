"""Paradigmatic fields: per-term profiles over a detected community.

For a term w inside a field C the specificity index is the mean
incoming proximity (from every member to w) and the genericity index
the mean outgoing proximity (from w to every member).  Both sums run
over all of C including w itself, whose self-proximity contributes
exactly 1, so each index has a 1/card(C) floor.  The 2-D meso embedding
places a term at (i_s, i_g); rendering orientation (i_s decreasing to
the right, i_g decreasing downward) is the viewer's duty.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .corpus import TimeWindow
from .errors import UndefinedTermError, WindowRangeError
from .proximity import _pair_from_counts
from .validation import check_growth_basis


@dataclass(frozen=True)
class TermFieldProfile:
    term: int
    label: str
    i_s: float
    i_g: float
    intra_weight: int
    growth: float | None


@dataclass(frozen=True)
class ParadigmaticField:
    id: int
    members: tuple  # TermFieldProfile, sorted by label
    window: object
    alpha: float
    label_generic: str
    label_specific: str

    def member_labels(self):
        return frozenset(p.label for p in self.members)


def specificity_index(store, community, w, params):
    """Mean proximity from every field member to w (in-proximity)."""
    target = store.resolve(w)
    members = _resolved_members(store, community, target)
    counts = store.window_counts(params.window)
    total = 0.0
    for other in members:
        total += _pair_from_counts(store, counts, other, target, params.alpha)
    return total / len(members)


def genericity_index(store, community, w, params):
    """Mean proximity from w to every field member (out-proximity)."""
    source = store.resolve(w)
    members = _resolved_members(store, community, source)
    counts = store.window_counts(params.window)
    total = 0.0
    for other in members:
        total += _pair_from_counts(store, counts, source, other, params.alpha)
    return total / len(members)


def _resolved_members(store, community, term_id):
    members = sorted(community.members)
    if term_id not in community.members:
        raise ValueError(
            f"term {store.label_of(term_id)!r} is not a member of community {community.id}"
        )
    return members


def intra_weight(store, community, w, window):
    """Sum of window co-occurrence counts of w with the other members."""
    term = store.resolve(w)
    counts = store.window_counts(window)
    return sum(counts.pair(term, other) for other in community.members if other != term)


def term_growth(store, w, window, overlap_boundary=False, basis="occurrences",
                community=None):
    """Occurrence ratio of the window against the preceding equal-length one.

    Returns None (undefined) when the base count is zero.  With
    basis='intra_cooccurrences' the ratio is computed on the term's
    co-occurrence totals inside ``community`` instead.
    """
    check_growth_basis(basis)
    term = store.resolve(w)
    previous = store.check_window(window.preceding(overlap_boundary))
    if basis == "intra_cooccurrences":
        if community is None:
            raise ValueError("intra_cooccurrences growth needs a community")
        base = intra_weight(store, community, term, previous)
        current = intra_weight(store, community, term, window)
    else:
        base = store.window_counts(previous).occ(term)
        current = store.window_counts(window).occ(term)
    if base == 0:
        return None
    return current / base


def build_field(store, community, params, window=None, *, field_id=None,
                overlap_boundary=False, growth_basis="occurrences",
                require_growth_window=True):
    """Assemble the full per-term profile table for one community.

    The generic label is the member with the highest genericity index,
    the specific label the one with the highest specificity index; ties
    fall to the higher intra-field weight, then the lexicographically
    first label.  When the preceding window falls outside the corpus,
    ``require_growth_window=False`` records growth as undefined instead
    of raising.
    """
    if window is not None and window != params.window:
        params = replace(params, window=window)
    window = params.window
    members = sorted(community.members)
    for term in members:
        if store.window_counts(window).occ(term) == 0:
            raise UndefinedTermError(store.label_of(term), window)

    growth_available = True
    try:
        store.check_window(window.preceding(overlap_boundary))
    except WindowRangeError:
        if require_growth_window:
            raise
        growth_available = False

    profiles = []
    for term in members:
        growth = None
        if growth_available:
            growth = term_growth(
                store,
                term,
                window,
                overlap_boundary=overlap_boundary,
                basis=growth_basis,
                community=community,
            )
        profiles.append(
            TermFieldProfile(
                term=term,
                label=store.label_of(term),
                i_s=specificity_index(store, community, term, params),
                i_g=genericity_index(store, community, term, params),
                intra_weight=intra_weight(store, community, term, window),
                growth=growth,
            )
        )
    profiles.sort(key=lambda p: p.label)
    label_generic = min(profiles, key=lambda p: (-p.i_g, -p.intra_weight, p.label)).label
    label_specific = min(profiles, key=lambda p: (-p.i_s, -p.intra_weight, p.label)).label
    return ParadigmaticField(
        id=community.id if field_id is None else field_id,
        members=tuple(profiles),
        window=window,
        alpha=params.alpha,
        label_generic=label_generic,
        label_specific=label_specific,
    )


def field_from_json_dict(doc, store):
    """Rebuild a field from its export, resolving labels on the store."""
    y1, y2 = doc["window"]
    profiles = tuple(
        TermFieldProfile(
            term=store.id_of(m["label"]),
            label=m["label"],
            i_s=m["i_s"],
            i_g=m["i_g"],
            intra_weight=m["intra_weight"],
            growth=m["growth"],
        )
        for m in doc["members"]
    )
    return ParadigmaticField(
        id=doc["id"],
        members=profiles,
        window=TimeWindow(int(y1), int(y2)),
        alpha=doc["alpha"],
        label_generic=doc["label_generic"],
        label_specific=doc["label_specific"],
    )


def field_json_dict(field):
    """Export schema used by files, the service and the viewer."""
    return {
        "id": field.id,
        "window": [field.window.y1, field.window.y2],
        "alpha": field.alpha,
        "members": [
            {
                "label": p.label,
                "i_s": p.i_s,
                "i_g": p.i_g,
                "intra_weight": p.intra_weight,
                "growth": p.growth,
            }
            for p in field.members
        ],
        "label_generic": field.label_generic,
        "label_specific": field.label_specific,
    }
