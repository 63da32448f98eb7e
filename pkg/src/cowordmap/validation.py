"""Parameter validation helpers shared by estimators, CLI and server."""

from __future__ import annotations

import math

EDGE_RULES = ("or", "and")
GROWTH_BASES = ("occurrences", "intra_cooccurrences")


def check_alpha(alpha):
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool):
        raise ValueError(f"alpha must be a number, got {alpha!r}")
    if not math.isfinite(alpha) or alpha <= 0:
        raise ValueError(f"alpha must be a finite positive real, got {alpha!r}")
    return float(alpha)


def check_threshold(threshold):
    if not isinstance(threshold, (int, float)) or isinstance(threshold, bool):
        raise ValueError(f"threshold must be a number, got {threshold!r}")
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold!r}")
    return float(threshold)


def check_k(k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"k must be an integer, got {k!r}")
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    return k


def check_edge_rule(edge_rule):
    if edge_rule not in EDGE_RULES:
        raise ValueError(f"edge_rule must be one of {EDGE_RULES}, got {edge_rule!r}")
    return edge_rule


def check_growth_basis(basis):
    if basis not in GROWTH_BASES:
        raise ValueError(f"growth_basis must be one of {GROWTH_BASES}, got {basis!r}")
    return basis


def check_size_filter(min_terms, max_terms):
    if min_terms < 1 or max_terms < min_terms:
        raise ValueError(
            f"size filter needs 1 <= min <= max, got ({min_terms}, {max_terms})"
        )
    return min_terms, max_terms


def check_log_base(log_base):
    if not isinstance(log_base, (int, float)) or isinstance(log_base, bool):
        raise ValueError(f"log_base must be a number, got {log_base!r}")
    if not math.isfinite(log_base) or log_base <= 1.0:
        raise ValueError(f"log_base must be greater than 1, got {log_base!r}")
    return float(log_base)
