"""Asymmetric paradigmatic proximity between terms.

The measure for a source term i and target j over a window is

    (N_ij / N_i) ** alpha * (N_ij / N_j) ** (1 / alpha)

with window-aggregated counts.  alpha > 1 focuses a term's neighborhood
on terms that are more specific than it, alpha < 1 on more generic
ones, and alpha = 1 reduces to the classical equivalence index
N_ij**2 / (N_i * N_j).  Swapping the two terms is the same as inverting
alpha, so the measure is a dual pair of views rather than a symmetric
distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .corpus import TimeWindow
from .errors import UndefinedTermError
from .validation import check_alpha, check_threshold


@dataclass(frozen=True)
class ProximityParams:
    """Focus parameter, neighborhood threshold and time window."""

    alpha: float
    threshold: float
    window: TimeWindow

    def __post_init__(self):
        check_alpha(self.alpha)
        check_threshold(self.threshold)


@dataclass(frozen=True)
class ProximityValue:
    source: int
    target: int
    value: float


def dual_params(params):
    """Same params with alpha inverted; the dual view of the measure."""
    return replace(params, alpha=1.0 / params.alpha)


def pair_value(n_ij, n_i, n_j, alpha):
    """Evaluate the measure on raw counts.

    Exact 0 (no co-occurrence) and exact 1 (identity-like counts) are
    short-circuited on the integer counts so boundary cases never go
    through floating-point pow.  Ratios above 1, which lenient
    ingestion can produce, are clamped to 1 to keep the [0, 1] range.
    """
    if n_i <= 0 or n_j <= 0:
        raise ValueError("pair_value requires positive occurrence counts")
    if n_ij <= 0:
        return 0.0
    c_i = min(n_ij, n_i)
    c_j = min(n_ij, n_j)
    if c_i == n_i and c_j == n_j:
        return 1.0
    exponent = 0.0
    if c_i != n_i:
        exponent += alpha * math.log(c_i / n_i)
    if c_j != n_j:
        exponent += math.log(c_j / n_j) / alpha
    return math.exp(exponent)


def proximity(store, i, j, params):
    """Proximity of target j seen from source i under ``params``.

    Raises UndefinedTermError when either term has no occurrences in
    the window; co-occurring in no document gives exactly 0 and a term
    against itself gives exactly 1.
    """
    source = store.resolve(i)
    target = store.resolve(j)
    counts = store.window_counts(params.window)
    value = _pair_from_counts(store, counts, source, target, params.alpha)
    return ProximityValue(source, target, value)


def _pair_from_counts(store, counts, source, target, alpha):
    n_i = counts.occ(source)
    n_j = counts.occ(target)
    if n_i == 0:
        raise UndefinedTermError(store.label_of(source), counts.window)
    if n_j == 0:
        raise UndefinedTermError(store.label_of(target), counts.window)
    if source == target:
        return 1.0
    n_ij = counts.pair(source, target)
    if n_ij > min(n_i, n_j):
        counts.clamped_pairs.add((source, target) if source < target else (target, source))
    return pair_value(n_ij, n_i, n_j, alpha)


def proximity_row(store, i, params):
    """All nonzero proximities from source i, sorted by target id."""
    source = store.resolve(i)
    counts = store.window_counts(params.window)
    if counts.occ(source) == 0:
        raise UndefinedTermError(store.label_of(source), counts.window)
    row = []
    for target in sorted(counts.partners.get(source, ())):
        if counts.occ(target) == 0:
            # lenient data may pair a term that never occurs in the window
            continue
        value = _pair_from_counts(store, counts, source, target, params.alpha)
        if value > 0.0:
            row.append(ProximityValue(source, target, value))
    return row


def neighborhood(store, i, params):
    """Target ids whose proximity from i strictly exceeds the threshold."""
    source = store.resolve(i)
    return {
        pv.target
        for pv in proximity_row(store, source, params)
        if pv.value > params.threshold and pv.target != source
    }
