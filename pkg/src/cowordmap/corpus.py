"""Per-year occurrence / co-occurrence counts: ingestion, storage, windowing.

Counts are document-level and symmetric; every unordered pair is stored
once under its (min_id, max_id) key.  Missing (term, year) entries mean
zero.  A CorpusStore is immutable after ingestion and safe to share
between threads.
"""

from __future__ import annotations

import csv
import difflib
import hashlib
import json
import os
import unicodedata
from dataclasses import dataclass, field

from .errors import (
    ParseError,
    UnknownTermError,
    ValidationError,
    WindowRangeError,
)

#: Validation modes accepted by :func:`ingest`.
VALIDATION_MODES = ("strict", "lenient")


def normalize_label(raw):
    """Canonical term label: Unicode NFC, lowercased, single-spaced."""
    text = unicodedata.normalize("NFC", str(raw))
    return " ".join(text.lower().split())


@dataclass(frozen=True, order=True)
class TimeWindow:
    """Inclusive year range [y1, y2]."""

    y1: int
    y2: int

    def __post_init__(self):
        if self.y1 > self.y2:
            raise WindowRangeError(f"window start {self.y1} is after end {self.y2}")

    @classmethod
    def parse(cls, text):
        """Parse 'Y1:Y2' (or a single 'Y') into a TimeWindow."""
        parts = str(text).split(":")
        try:
            if len(parts) == 1:
                y = int(parts[0])
                return cls(y, y)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        raise WindowRangeError(f"cannot parse window {text!r}, expected Y1:Y2")

    @property
    def length(self):
        return self.y2 - self.y1 + 1

    def years(self):
        return range(self.y1, self.y2 + 1)

    def preceding(self, overlap_boundary=False):
        """The equal-length window immediately before this one.

        With ``overlap_boundary`` the previous window ends on this
        window's first year (the convention of comparing 1999-2002
        against 2002-2005); otherwise the windows are adjacent and
        disjoint.
        """
        if overlap_boundary:
            return TimeWindow(self.y1 - self.length + 1, self.y1)
        return TimeWindow(self.y1 - self.length, self.y1 - 1)

    def __str__(self):
        return f"{self.y1}:{self.y2}"


@dataclass(frozen=True)
class YearCounts:
    """Counts observed in one calendar year."""

    year: int
    occurrences: dict
    cooccurrences: dict  # (min_id, max_id) -> count

    def occ(self, term_id):
        return self.occurrences.get(term_id, 0)

    def cooc(self, a, b):
        return self.cooccurrences.get((a, b) if a < b else (b, a), 0)


@dataclass(frozen=True)
class WindowCounts:
    """Counts aggregated over a window: N_i per term, N_ij per pair.

    Terms and pairs absent everywhere in the window are absent from the
    maps (treated as zero by the accessors).  ``clamped_pairs`` tallies
    pairs whose count exceeded a term count and had to be clamped when
    a proximity was evaluated on lenient data.
    """

    window: TimeWindow
    occurrences: dict
    pair_counts: dict
    partners: dict  # term_id -> {partner_id: N_ij}
    total: int
    clamped_pairs: set = field(default_factory=set, compare=False)

    def occ(self, term_id):
        return self.occurrences.get(term_id, 0)

    def pair(self, a, b):
        return self.pair_counts.get((a, b) if a < b else (b, a), 0)


@dataclass(frozen=True)
class CorpusStore:
    """Immutable vocabulary plus per-year count series."""

    labels: tuple
    years: tuple
    provenance: str = ""
    warnings: tuple = field(default=(), compare=False)
    _label_to_id: dict = field(default=None, compare=False, repr=False)
    _window_cache: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_label_to_id", {lab: i for i, lab in enumerate(self.labels)}
        )
        object.__setattr__(self, "_window_cache", {})

    def __len__(self):
        return len(self.labels)

    @property
    def year_range(self):
        if not self.years:
            raise WindowRangeError("corpus has no years")
        return TimeWindow(self.years[0].year, self.years[-1].year)

    def label_of(self, term_id):
        return self.labels[term_id]

    def id_of(self, label):
        norm = normalize_label(label)
        tid = self._label_to_id.get(norm)
        if tid is None:
            close = difflib.get_close_matches(norm, self.labels, n=3)
            raise UnknownTermError(label, close)
        return tid

    def resolve(self, term):
        """Accept a term id or a label and return the id."""
        if isinstance(term, int):
            if not 0 <= term < len(self.labels):
                raise UnknownTermError(term)
            return term
        return self.id_of(term)

    def check_window(self, window):
        rng = self.year_range
        if window.y1 < rng.y1 or window.y2 > rng.y2:
            raise WindowRangeError(
                f"window {window} outside corpus range {rng}"
            )
        return window

    def window_counts(self, window):
        """Aggregated counts over ``window`` (memoized per window)."""
        cached = self._window_cache.get(window)
        if cached is not None:
            return cached
        self.check_window(window)
        occ = {}
        pairs = {}
        for yc in self.years:
            if yc.year < window.y1 or yc.year > window.y2:
                continue
            for tid, n in yc.occurrences.items():
                occ[tid] = occ.get(tid, 0) + n
            for key, n in yc.cooccurrences.items():
                pairs[key] = pairs.get(key, 0) + n
        partners = {}
        for (a, b), n in pairs.items():
            partners.setdefault(a, {})[b] = n
            partners.setdefault(b, {})[a] = n
        counts = WindowCounts(window, occ, pairs, partners, sum(occ.values()))
        self._window_cache[window] = counts
        return counts

    def fingerprint(self):
        """Content hash of the canonical JSON export."""
        return hashlib.sha256(to_json_bytes(self)).hexdigest()


def _canonical_pair(a, b):
    return (a, b) if a < b else (b, a)


def ingest(
    occurrence_records,
    cooccurrence_records,
    validation="lenient",
    provenance="",
):
    """Build a CorpusStore from (label, year, count) and
    (label_a, label_b, year, count) record streams.

    Duplicate (term, year) or (pair, year) records are summed.  Self
    pairs are rejected.  In strict mode any year where a pair count
    exceeds either of its term counts is a validation error; in lenient
    mode the record is kept and a warning is collected on the store.
    """
    if validation not in VALIDATION_MODES:
        raise ValueError(f"validation must be one of {VALIDATION_MODES}")

    occ_records = []
    for index, record in enumerate(occurrence_records, start=1):
        label, year, count = _check_occurrence(record, index)
        occ_records.append((label, year, count))
    cooc_records = []
    for index, record in enumerate(cooccurrence_records, start=1):
        a, b, year, count = _check_cooccurrence(record, index)
        cooc_records.append((a, b, year, count))

    label_set = {r[0] for r in occ_records}
    label_set.update(r[0] for r in cooc_records)
    label_set.update(r[1] for r in cooc_records)
    labels = tuple(sorted(label_set))
    label_to_id = {lab: i for i, lab in enumerate(labels)}

    occ_by_year = {}
    for label, year, count in occ_records:
        per_year = occ_by_year.setdefault(year, {})
        tid = label_to_id[label]
        per_year[tid] = per_year.get(tid, 0) + count
    cooc_by_year = {}
    for a, b, year, count in cooc_records:
        per_year = cooc_by_year.setdefault(year, {})
        key = _canonical_pair(label_to_id[a], label_to_id[b])
        per_year[key] = per_year.get(key, 0) + count

    warnings = []
    all_years = sorted(set(occ_by_year) | set(cooc_by_year))
    year_counts = []
    for year in all_years:
        occ = {t: n for t, n in occ_by_year.get(year, {}).items() if n > 0}
        cooc = {k: n for k, n in cooc_by_year.get(year, {}).items() if n > 0}
        for (a, b), n in sorted(cooc.items()):
            cap = min(occ.get(a, 0), occ.get(b, 0))
            if n > cap:
                message = (
                    f"cooccurrence({labels[a]!r},{labels[b]!r},{year})={n} "
                    f"exceeds min occurrence count {cap}"
                )
                if validation == "strict":
                    raise ValidationError(message)
                warnings.append(message)
        year_counts.append(YearCounts(year, occ, cooc))

    return CorpusStore(
        labels=labels,
        years=tuple(year_counts),
        provenance=provenance,
        warnings=tuple(warnings),
    )


def _check_occurrence(record, index):
    try:
        label, year, count = record
    except (TypeError, ValueError):
        raise ParseError(f"expected (label, year, count), got {record!r}", line=index)
    label = normalize_label(label)
    if not label:
        raise ParseError("empty label after normalization", line=index)
    year = _check_int(year, "year", index)
    count = _check_int(count, "count", index)
    if count < 0:
        raise ParseError(f"negative count {count}", line=index)
    return label, year, count


def _check_cooccurrence(record, index):
    try:
        label_a, label_b, year, count = record
    except (TypeError, ValueError):
        raise ParseError(
            f"expected (label_a, label_b, year, count), got {record!r}", line=index
        )
    a = normalize_label(label_a)
    b = normalize_label(label_b)
    if not a or not b:
        raise ParseError("empty label after normalization", line=index)
    if a == b:
        raise ParseError(f"self pair ({a!r},{a!r}) is not allowed", line=index)
    year = _check_int(year, "year", index)
    count = _check_int(count, "count", index)
    if count < 0:
        raise ParseError(f"negative count {count}", line=index)
    return a, b, year, count


def _check_int(value, name, index):
    if isinstance(value, bool):
        raise ParseError(f"{name} must be an integer, got {value!r}", line=index)
    if isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {value!r}", line=index)


def window_counts(store, window):
    """Module-level alias of :meth:`CorpusStore.window_counts`."""
    return store.window_counts(window)


def total_occurrences(store, window):
    """Sum of window occurrence counts over the whole vocabulary."""
    return store.window_counts(window).total


# ---------------------------------------------------------------------------
# CSV input

OCCURRENCE_HEADER = ["term", "year", "count"]
COOCCURRENCE_HEADER = ["term_a", "term_b", "year", "count"]


def read_occurrence_csv(path):
    """Read `term,year,count` rows, validating syntax with line numbers."""
    return _read_csv(path, OCCURRENCE_HEADER, _check_occurrence)


def read_cooccurrence_csv(path):
    """Read `term_a,term_b,year,count` rows."""
    return _read_csv(path, COOCCURRENCE_HEADER, _check_cooccurrence)


def _read_csv(path, header, checker):
    records = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            first = next(reader)
        except StopIteration:
            raise ParseError("missing header row", line=1, source=str(path))
        if [h.strip().lower() for h in first] != header:
            raise ParseError(
                f"expected header {','.join(header)!r}, got {','.join(first)!r}",
                line=1,
                source=str(path),
            )
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(row)}",
                    line=reader.line_num,
                    source=str(path),
                )
            try:
                records.append(checker(tuple(row), reader.line_num))
            except ParseError as err:
                raise ParseError(err.message, line=err.line, source=str(path)) from err
    return records


def ingest_csv(occ_path, cooc_path, validation="lenient", provenance=None):
    """Ingest a pair of CSV files into a CorpusStore."""
    if provenance is None:
        provenance = f"ingested from {occ_path} and {cooc_path}"
    return ingest(
        read_occurrence_csv(occ_path),
        read_cooccurrence_csv(cooc_path),
        validation=validation,
        provenance=provenance,
    )


# ---------------------------------------------------------------------------
# Canonical JSON store

def to_json_dict(store):
    """Canonical dict form: ids ascending, pairs sorted lexicographically."""
    years = []
    for yc in store.years:
        years.append(
            {
                "year": yc.year,
                "occ": {str(t): yc.occurrences[t] for t in sorted(yc.occurrences)},
                "cooc": [
                    [a, b, yc.cooccurrences[(a, b)]]
                    for a, b in sorted(yc.cooccurrences)
                ],
            }
        )
    return {
        "vocabulary": list(store.labels),
        "years": years,
        "provenance": store.provenance,
    }


def to_json_bytes(store):
    text = json.dumps(to_json_dict(store), ensure_ascii=False, separators=(",", ":"))
    return (text + "\n").encode("utf-8")


def from_json_dict(doc):
    try:
        labels = tuple(normalize_label(lab) for lab in doc["vocabulary"])
        years = []
        for entry in doc["years"]:
            occ = {int(t): int(n) for t, n in entry["occ"].items()}
            cooc = {}
            for a, b, n in entry["cooc"]:
                cooc[_canonical_pair(int(a), int(b))] = int(n)
            years.append(YearCounts(int(entry["year"]), occ, cooc))
        provenance = doc.get("provenance", "")
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError(f"malformed store document: {err}")
    if len(set(labels)) != len(labels):
        raise ParseError("vocabulary labels collide after normalization")
    years.sort(key=lambda yc: yc.year)
    if len({yc.year for yc in years}) != len(years):
        raise ParseError("duplicate year entries in store document")
    vocab_size = len(labels)
    for yc in years:
        for tid in yc.occurrences:
            if not 0 <= tid < vocab_size:
                raise ParseError(f"occurrence term id {tid} outside vocabulary")
        for a, b in yc.cooccurrences:
            if not (0 <= a < vocab_size and 0 <= b < vocab_size) or a == b:
                raise ParseError(f"cooccurrence pair ({a},{b}) outside vocabulary")
    return CorpusStore(labels=labels, years=tuple(years), provenance=provenance)


def save_store(store, path):
    data = to_json_bytes(store)
    tmp = str(path) + ".tmp"
    with open(tmp, "wb") as handle:
        handle.write(data)
    os.replace(tmp, path)


def load_store(path):
    with open(path, "rb") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as err:
            raise ParseError(f"invalid JSON: {err}", source=str(path))
    return from_json_dict(doc)
