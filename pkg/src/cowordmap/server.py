"""Read-only HTTP/1.1 JSON query service over a loaded store.

GET-only; responses for identical parameter tuples are byte-identical
(payloads are cached as serialized bytes in a small LRU).  Requests
whose computation exceeds a soft deadline answer 202 with Retry-After
while the work keeps running and lands in the cache.  The store is
never mutated, so restarting the service reproduces all responses.
"""

from __future__ import annotations

import json
import mimetypes
import os
import posixpath
import threading
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeoutError
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .cliques import DEFAULT_CLIQUE_BUDGET
from .corpus import TimeWindow, normalize_label
from .errors import (
    BudgetExceededError,
    CowordError,
    DegenerateWindowError,
    UndefinedTermError,
    UnknownTermError,
    WindowRangeError,
)
from .estimators import FieldExtractor
from .fields import field_json_dict
from .jsonio import json_bytes
from .macromap import (
    DEFAULT_LOG_BASE,
    DEFAULT_SIZE_FILTER,
    build_macro_map,
    macro_map_json_dict,
)
from .proximity import ProximityParams, proximity_row

JSON_TYPE = "application/json; charset=utf-8"


class _LruCache:
    def __init__(self, size):
        self.size = size
        self._data = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is not None:
                self._data.move_to_end(key)
            return value

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.size:
                self._data.popitem(last=False)


class BadRequest(Exception):
    pass


class Response:
    def __init__(self, status, body, content_type=JSON_TYPE, headers=None):
        self.status = status
        self.body = body
        self.content_type = content_type
        self.headers = dict(headers or {})


def _error_body(message):
    return json_bytes({"error": message})


class AnalyticsService:
    """Routing and computation, independent of the HTTP plumbing."""

    def __init__(
        self,
        store,
        cache_size=64,
        soft_deadline=10.0,
        cors_origins=("*",),
        clique_budget=DEFAULT_CLIQUE_BUDGET,
    ):
        self.store = store
        self.soft_deadline = soft_deadline
        self.cors_origins = tuple(cors_origins)
        self.clique_budget = clique_budget
        self.fingerprint = store.fingerprint()
        self._cache = _LruCache(cache_size)
        self._pending = {}
        self._pending_lock = threading.Lock()
        self._executor = ThreadPoolExecutor(max_workers=4)
        self._totals = None

    # -- routing ----------------------------------------------------------

    def handle(self, path, query):
        try:
            if path == "/healthz":
                return Response(200, json_bytes(
                    {"status": "ok", "fingerprint": self.fingerprint}))
            if path == "/terms":
                return self._terms(query)
            if path == "/neighbors":
                return self._neighbors(query)
            if path == "/fields":
                return self._cached_compute("fields", self._fields_key(query),
                                            self._fields_body)
            if path == "/map":
                return self._cached_compute("map", self._map_key(query),
                                            self._map_body)
        except BadRequest as err:
            return Response(400, _error_body(str(err)))
        except (UnknownTermError, UndefinedTermError) as err:
            return Response(404, _error_body(str(err)))
        except (WindowRangeError, DegenerateWindowError, ValueError) as err:
            return Response(400, _error_body(str(err)))
        except CowordError as err:
            return Response(400, _error_body(str(err)))
        return Response(404, _error_body(f"no such endpoint: {path}"))

    def cors_headers(self, origin):
        if not self.cors_origins:
            return {}
        if "*" in self.cors_origins:
            return {"Access-Control-Allow-Origin": "*"}
        if origin and origin in self.cors_origins:
            return {"Access-Control-Allow-Origin": origin,
                    "Vary": "Origin"}
        return {}

    # -- parameter parsing -------------------------------------------------

    def _window(self, query):
        rng = self.store.year_range
        y1 = _int_param(query, "y1", rng.y1)
        y2 = _int_param(query, "y2", rng.y2)
        try:
            return self.store.check_window(TimeWindow(y1, y2))
        except WindowRangeError as err:
            raise BadRequest(str(err))

    def _proximity_params(self, query):
        alpha = _float_param(query, "alpha", 1.0)
        s = _float_param(query, "s", 0.0)
        window = self._window(query)
        try:
            return ProximityParams(alpha, s, window)
        except ValueError as err:
            raise BadRequest(str(err))

    def _fields_key(self, query):
        params = self._proximity_params(query)
        k = _int_param(query, "k", 3)
        if k < 3:
            raise BadRequest(f"k must be at least 3, got {k}")
        edge_rule = query.get("edge_rule", "or")
        if edge_rule not in ("or", "and"):
            raise BadRequest(f"edge_rule must be 'or' or 'and', got {edge_rule!r}")
        return (params.window.y1, params.window.y2, repr(params.alpha),
                repr(params.threshold), k, edge_rule)

    def _map_key(self, query):
        base = self._fields_key(query)
        min_terms = _int_param(query, "min_terms", DEFAULT_SIZE_FILTER[0])
        max_terms = _int_param(query, "max_terms", DEFAULT_SIZE_FILTER[1])
        if min_terms < 1 or max_terms < min_terms:
            raise BadRequest(
                f"size filter needs 1 <= min <= max, got ({min_terms}, {max_terms})")
        log_base = _float_param(query, "log_base", DEFAULT_LOG_BASE)
        if log_base <= 1.0:
            raise BadRequest(f"log_base must be greater than 1, got {log_base}")
        return base + (min_terms, max_terms, repr(log_base))

    # -- endpoints ----------------------------------------------------------

    def _totals_by_label(self):
        if self._totals is None:
            counts = self.store.window_counts(self.store.year_range)
            self._totals = {
                self.store.label_of(t): counts.occ(t) for t in range(len(self.store))
            }
        return self._totals

    def _terms(self, query):
        prefix = normalize_label(query.get("prefix", ""))
        totals = self._totals_by_label()
        entries = [
            {"label": label, "total_occurrences": total}
            for label, total in totals.items()
            if label.startswith(prefix)
        ]
        entries.sort(key=lambda e: (-e["total_occurrences"], e["label"]))
        return Response(200, json_bytes({"terms": entries}))

    def _neighbors(self, query):
        term = query.get("term")
        if term is None:
            raise BadRequest("missing required parameter: term")
        params = self._proximity_params(query)
        term_id = self.store.id_of(term)
        row = proximity_row(self.store, term_id, params)
        neighbors = [
            {"label": self.store.label_of(pv.target), "value": pv.value}
            for pv in row
            if pv.value > params.threshold and pv.target != term_id
        ]
        neighbors.sort(key=lambda e: (-e["value"], e["label"]))
        payload = {
            "term": self.store.label_of(term_id),
            "alpha": params.alpha,
            "s": params.threshold,
            "window": [params.window.y1, params.window.y2],
            "neighbors": neighbors,
            "dual_alpha": 1.0 / params.alpha,
        }
        return Response(200, json_bytes(payload))

    def _extract_fields(self, key):
        y1, y2, alpha, threshold, k, edge_rule = key
        extractor = FieldExtractor(
            alpha=float(alpha),
            threshold=float(threshold),
            k=k,
            window=TimeWindow(y1, y2),
            edge_rule=edge_rule,
            clique_budget=self.clique_budget,
        )
        return extractor.fit(self.store)

    def _fields_body(self, key):
        extractor = self._extract_fields(key)
        payload = {
            "window": [extractor.window_.y1, extractor.window_.y2],
            "alpha": extractor.alpha,
            "threshold": extractor.threshold,
            "k": extractor.k,
            "edge_rule": extractor.edge_rule,
            "fields": [field_json_dict(f) for f in extractor.fields_],
        }
        return json_bytes(payload)

    def _map_body(self, key):
        min_terms, max_terms, log_base = key[6], key[7], float(key[8])
        extractor = self._extract_fields(key[:6])
        macro = build_macro_map(
            extractor.fields_,
            self.store,
            window=extractor.window_,
            size_filter=(min_terms, max_terms),
            log_base=log_base,
        )
        return json_bytes(macro_map_json_dict(macro))

    # -- caching and deadlines ----------------------------------------------

    def _cached_compute(self, kind, key, build):
        full_key = (kind,) + key
        cached = self._cache.get(full_key)
        if cached is not None:
            return Response(200, cached, headers={"X-Cache": "hit"})
        created = False
        with self._pending_lock:
            future = self._pending.get(full_key)
            if future is None:
                future = self._executor.submit(build, key)
                self._pending[full_key] = future
                created = True
        if created:
            # registered outside the lock: a finished future runs the
            # callback inline, and the callback takes the lock itself.
            # The result lands in the cache when the computation ends,
            # whether or not a request is still waiting.
            future.add_done_callback(self._finish(full_key))
        try:
            body = future.result(timeout=self.soft_deadline)
        except FutureTimeoutError:
            return Response(
                202,
                json_bytes({"status": "pending", "retry_after": 1}),
                headers={"Retry-After": "1", "X-Cache": "miss"},
            )
        except BudgetExceededError as err:
            return Response(503, _error_body(str(err)))
        except CowordError as err:
            return Response(400, _error_body(str(err)))
        return Response(200, body, headers={"X-Cache": "miss"})

    def _finish(self, full_key):
        def callback(future):
            try:
                body = future.result()
            except Exception:
                pass  # errors are reported by the waiting request path
            else:
                self._cache.put(full_key, body)
            with self._pending_lock:
                self._pending.pop(full_key, None)

        return callback

    def warm_fields_cache(self, export_dir):
        """Preload the /fields cache from a cmd-fields export directory."""
        index_path = os.path.join(export_dir, "index.json")
        with open(index_path, encoding="utf-8") as handle:
            index = json.load(handle)
        payload = {
            "window": index["window"],
            "alpha": index["alpha"],
            "threshold": index["threshold"],
            "k": index["k"],
            "edge_rule": index["edge_rule"],
            "fields": [],
        }
        for entry in index["fields"]:
            with open(os.path.join(export_dir, entry["file"]), encoding="utf-8") as handle:
                payload["fields"].append(json.load(handle))
        key = ("fields", index["window"][0], index["window"][1],
               repr(float(index["alpha"])), repr(float(index["threshold"])),
               index["k"], index["edge_rule"])
        self._cache.put(key, json_bytes(payload))

    def shutdown(self):
        self._executor.shutdown(wait=False, cancel_futures=True)


def _int_param(query, name, default):
    raw = query.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise BadRequest(f"parameter {name} must be an integer, got {raw!r}")


def _float_param(query, name, default):
    raw = query.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = float(raw)
    except ValueError:
        raise BadRequest(f"parameter {name} must be a number, got {raw!r}")
    return value


# ---------------------------------------------------------------------------
# HTTP plumbing

def make_handler(service, static_dir=None):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def do_GET(self):
            split = urlsplit(self.path)
            path = split.path
            query = {k: v[0] for k, v in parse_qs(split.query).items()}
            if path.startswith(("/healthz", "/terms", "/neighbors", "/fields", "/map")):
                response = service.handle(path, query)
            else:
                response = self._static_response(path)
            self._send(response)

        def _static_response(self, path):
            if static_dir is None:
                return Response(404, _error_body(f"no such endpoint: {path}"))
            clean = posixpath.normpath(path.lstrip("/")) or "."
            if clean.startswith(".."):
                return Response(403, _error_body("forbidden"))
            full = os.path.join(static_dir, clean)
            if os.path.isdir(full):
                full = os.path.join(full, "index.html")
            if not os.path.isfile(full):
                return Response(404, _error_body(f"not found: {path}"))
            ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
            with open(full, "rb") as handle:
                return Response(200, handle.read(), content_type=ctype)

        def _send(self, response):
            self.send_response(response.status)
            self.send_header("Content-Type", response.content_type)
            self.send_header("Content-Length", str(len(response.body)))
            for name, value in response.headers.items():
                self.send_header(name, value)
            for name, value in service.cors_headers(self.headers.get("Origin")).items():
                self.send_header(name, value)
            self.end_headers()
            self.wfile.write(response.body)

        def log_message(self, format, *args):  # quiet by default
            pass

    return Handler


def make_server(service, host="127.0.0.1", port=0, static_dir=None):
    handler = make_handler(service, static_dir=static_dir)
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(service, host, port, static_dir=None):
    server = make_server(service, host, port, static_dir=static_dir)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        service.shutdown()
        server.server_close()
