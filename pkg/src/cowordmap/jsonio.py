"""Deterministic JSON serialization and atomic file writes.

Export dicts are constructed in canonical order by their builders, so
dumps here never reorder keys; identical payloads serialize to
identical bytes, which the service cache and the byte-compare
determinism checks rely on.
"""

from __future__ import annotations

import json
import os


def json_bytes(obj, indent=2):
    text = json.dumps(obj, ensure_ascii=False, indent=indent)
    return (text + "\n").encode("utf-8")


def atomic_write_bytes(path, data):
    tmp = str(path) + ".tmp"
    with open(tmp, "wb") as handle:
        handle.write(data)
    os.replace(tmp, path)


def atomic_write_text(path, text):
    atomic_write_bytes(path, text.encode("utf-8"))
