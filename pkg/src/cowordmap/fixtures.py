"""Synthetic demonstration corpus shipped with the package.

30 terms over 1996-2005, built so the interesting behaviors have an
exactly computable witness:

* a generic hub ("complex systems") that co-occurs in every document
  containing one of five specific terms -- with window counts 40/50 a
  focus of 10 (or its dual 0.1) scores those pairs at 0.8**10, so the
  documented threshold 0.05 shows the hub/specific pattern both ways;
* a bridge term ("knowledge discovery") tied to two otherwise disjoint
  dense clusters (machine-learning-like and data-mining-like), giving
  two overlapping 7-term fields at alpha=1, s=0.05, k=3;
* a 4-term cluster ("game theory" etc.) that the default 6..20 macro
  size filter drops;
* background terms without co-occurrences, including one with an empty
  previous window (undefined growth) and one declining series.
"""

from __future__ import annotations

import csv
from importlib import resources

from .corpus import TimeWindow, ingest

YEARS = tuple(range(1996, 2006))

FIXTURE_WINDOW = TimeWindow(2002, 2005)
FIXTURE_ALPHA = 1.0
FIXTURE_THRESHOLD = 0.05
FIXTURE_K = 3
#: alpha endpoints demonstrating the hub/specific duality.
FIXTURE_SPECIFIC_ALPHA = 10.0
FIXTURE_GENERIC_ALPHA = 0.1

HUB = "complex systems"
SPECIFICS = (
    "genetic algorithm",
    "cellular automata",
    "percolation theory",
    "swarm intelligence",
    "adaptive dynamics",
)
BRIDGE = "knowledge discovery"
ML_CLUSTER = (
    "machine learning",
    "neural network",
    "support vector machine",
    "feature selection",
    "supervised learning",
    "pattern recognition",
)
DM_CLUSTER = (
    "data mining",
    "association rule",
    "text mining",
    "database systems",
    "information retrieval",
    "web mining",
)
GAME_CLUSTER = (
    "game theory",
    "nash equilibrium",
    "evolutionary dynamics",
    "cooperation",
)

_OCC_SERIES = {
    HUB: (8, 9, 10, 11, 11, 12, 12, 13, 12, 13),
    BRIDGE: (4, 4, 6, 6, 8, 8, 10, 10, 12, 12),
    "statistical physics": (20,) * 10,
    "network topology": (3,) * 10,
    "self organization": (0, 0, 0, 0, 0, 2, 3, 4, 5, 6),
    "emergence": (0, 0, 0, 0, 0, 0, 3, 4, 5, 6),
    "phase transition": (7,) * 10,
    "agent based model": (1, 1, 2, 2, 3, 3, 4, 4, 5, 5),
    "chaos theory": (10, 10, 9, 9, 8, 8, 7, 7, 6, 6),
}
for _term in SPECIFICS:
    _OCC_SERIES[_term] = (4, 5, 6, 7, 8, 9, 10, 10, 10, 10)
for _term in ML_CLUSTER:
    _OCC_SERIES[_term] = (6, 6, 8, 8, 10, 10, 12, 12, 14, 14)
for _term in DM_CLUSTER:
    _OCC_SERIES[_term] = (10,) * 10
for _term in GAME_CLUSTER:
    _OCC_SERIES[_term] = (5, 5, 6, 6, 7, 7, 8, 8, 9, 9)

_SPEC_PAIR_SERIES = (2, 2, 3, 3, 4, 4, 5, 5, 5, 5)
_ML_PAIR_SERIES = (3, 3, 4, 4, 5, 5, 6, 6, 7, 7)
_BRIDGE_PAIR_SERIES = (2, 2, 3, 3, 4, 4, 5, 5, 6, 6)
_DM_PAIR_SERIES = (5,) * 10
_GAME_PAIR_SERIES = (2, 2, 3, 3, 3, 3, 4, 4, 4, 4)


def _cooc_series():
    """Map (label_a, label_b) -> per-year counts, one entry per pair."""
    series = {}

    def put(a, b, values):
        key = (a, b) if a < b else (b, a)
        series[key] = values

    for t in SPECIFICS:
        put(HUB, t, _OCC_SERIES[t])  # hub present wherever the specific is
    for i, a in enumerate(SPECIFICS):
        for b in SPECIFICS[i + 1:]:
            put(a, b, _SPEC_PAIR_SERIES)
    for i, a in enumerate(ML_CLUSTER):
        for b in ML_CLUSTER[i + 1:]:
            put(a, b, _ML_PAIR_SERIES)
    for t in ML_CLUSTER:
        put(BRIDGE, t, _BRIDGE_PAIR_SERIES)
    for i, a in enumerate(DM_CLUSTER):
        for b in DM_CLUSTER[i + 1:]:
            put(a, b, _DM_PAIR_SERIES)
    for t in DM_CLUSTER:
        put(BRIDGE, t, _BRIDGE_PAIR_SERIES)
    for i, a in enumerate(GAME_CLUSTER):
        for b in GAME_CLUSTER[i + 1:]:
            put(a, b, _GAME_PAIR_SERIES)
    # a pair active only in the first two years: absent from late windows
    put("phase transition", "statistical physics", (2, 2, 0, 0, 0, 0, 0, 0, 0, 0))
    return series


def occurrence_records():
    records = []
    for term in sorted(_OCC_SERIES):
        for year, count in zip(YEARS, _OCC_SERIES[term]):
            if count > 0:
                records.append((term, year, count))
    return records


def cooccurrence_records():
    records = []
    series = _cooc_series()
    for a, b in sorted(series):
        for year, count in zip(YEARS, series[(a, b)]):
            if count > 0:
                records.append((a, b, year, count))
    return records


def fixture_store(provenance="cowordmap synthetic fixture corpus"):
    """The fixture as an in-memory store (strict validation)."""
    return ingest(
        occurrence_records(),
        cooccurrence_records(),
        validation="strict",
        provenance=provenance,
    )


def write_fixture_csvs(occ_path, cooc_path):
    """Write the fixture as the two canonical CSV inputs."""
    with open(occ_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["term", "year", "count"])
        writer.writerows(occurrence_records())
    with open(cooc_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["term_a", "term_b", "year", "count"])
        writer.writerows(cooccurrence_records())


def fixture_csv_paths():
    """Paths of the CSV copies shipped as package data."""
    data = resources.files(__package__) / "data"
    return data / "fixture_occurrences.csv", data / "fixture_cooccurrences.csv"
