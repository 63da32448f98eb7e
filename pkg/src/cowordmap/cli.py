"""Batch command-line front end for the whole pipeline.

Exit codes: 0 success, 2 input error, 3 query error, 4 resource budget
exceeded, 5 degenerate window.  All outputs are deterministic for
identical inputs and configuration; files are written atomically.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .cliques import (
    DEFAULT_CLIQUE_BUDGET,
    communities_json_dict,
    edges_csv_text,
    graph_graphml_text,
)
from .corpus import TimeWindow, ingest_csv, load_store, save_store
from .errors import (
    BudgetExceededError,
    CowordError,
    DegenerateWindowError,
    ParseError,
    UndefinedTermError,
    UnknownTermError,
    ValidationError,
    WindowRangeError,
)
from .estimators import FieldExtractor
from .fields import field_from_json_dict, field_json_dict
from .jsonio import atomic_write_bytes, atomic_write_text, json_bytes
from .macromap import (
    DEFAULT_LOG_BASE,
    DEFAULT_SIZE_FILTER,
    build_macro_map,
    macro_map_dot_text,
    macro_map_graphml_text,
    macro_map_json_dict,
)
from .proximity import ProximityParams, proximity_row

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_QUERY = 3
EXIT_BUDGET = 4
EXIT_DEGENERATE = 5


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    apply_config_file(args)
    try:
        return args.func(args)
    except (ParseError, ValidationError, WindowRangeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (UnknownTermError, UndefinedTermError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_QUERY
    except BudgetExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except DegenerateWindowError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DEGENERATE
    except CowordError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cowordmap",
        description="Multi-level co-word maps from occurrence/co-occurrence counts",
    )
    parser.add_argument("--config", help="key=value file; explicit flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--store", help="canonical JSON store path")
    common.add_argument("--window", help="analysis window Y1:Y2")
    common.add_argument("--alpha", type=float, default=None, help="focus parameter")
    common.add_argument("--threshold", type=float, default=None, help="edge threshold s")
    common.add_argument("--k", type=int, default=None, help="clique size (>= 3)")
    common.add_argument("--edge-rule", choices=("or", "and"), default=None)
    common.add_argument("--filter", default=None, help="field size filter MIN:MAX")
    common.add_argument("--out", help="output file or directory")

    p = sub.add_parser("ingest", parents=[common], help="CSV counts -> canonical store")
    p.add_argument("--occurrences", required=True)
    p.add_argument("--cooccurrences", required=True)
    p.add_argument("--validation", choices=("strict", "lenient"), default="lenient")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("validate", parents=[common], help="strict-check CSV counts")
    p.add_argument("--occurrences", required=True)
    p.add_argument("--cooccurrences", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("neighbors", parents=[common], help="threshold neighborhood of a term")
    p.add_argument("--term", required=True)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("fields", parents=[common], help="detect paradigmatic fields")
    p.add_argument("--growth-basis", choices=("occurrences", "intra_cooccurrences"),
                   default="occurrences")
    p.add_argument("--overlap-boundary", action="store_true",
                   help="previous growth window shares its last year with the current one")
    p.add_argument("--clique-budget", type=int, default=DEFAULT_CLIQUE_BUDGET)
    p.set_defaults(func=cmd_fields)

    p = sub.add_parser("map", parents=[common], help="macro map from exported fields")
    p.add_argument("--fields", required=True, help="fields output dir or index.json")
    p.add_argument("--log-base", type=float, default=DEFAULT_LOG_BASE)
    p.add_argument("--overlap-boundary", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("sweep", parents=[common], help="field counts over a parameter grid")
    p.add_argument("--alphas", default="", help="comma-separated alpha values")
    p.add_argument("--thresholds", default="", help="comma-separated s values")
    p.add_argument("--ks", default="", help="comma-separated k values")
    p.add_argument("--clique-budget", type=int, default=DEFAULT_CLIQUE_BUDGET)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP query service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--static", help="directory of viewer assets to serve at /")
    p.add_argument("--cors", default="*", help="comma-separated allowed origins")
    p.add_argument("--cache-size", type=int, default=64)
    p.add_argument("--soft-deadline", type=float, default=10.0)
    p.add_argument("--warm-fields", help="fields export dir to preload into the cache")
    p.set_defaults(func=cmd_serve)

    return parser


def apply_config_file(args):
    """Fill unset options from a key=value file; explicit flags win."""
    path = getattr(args, "config", None)
    if not path:
        return
    values = {}
    with open(path, encoding="utf-8") as handle:
        for line_num, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParseError("expected key=value", line=line_num, source=path)
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    casts = {"alpha": float, "threshold": float, "k": int, "log_base": float,
             "clique_budget": int, "port": int, "cache_size": int,
             "soft_deadline": float}
    for key, value in values.items():
        if not hasattr(args, key):
            continue  # key belongs to a different subcommand
        if getattr(args, key) is not None:
            continue  # explicit flag wins
        cast = casts.get(key, str)
        try:
            setattr(args, key, cast(value))
        except ValueError:
            raise ParseError(f"cannot parse {key}={value!r}", source=path)


def _window_from(args, store):
    if args.window:
        return store.check_window(TimeWindow.parse(args.window))
    return store.year_range


def _params_from(args, store, default_threshold=0.1):
    window = _window_from(args, store)
    alpha = args.alpha if args.alpha is not None else 1.0
    threshold = args.threshold if args.threshold is not None else default_threshold
    return ProximityParams(alpha, threshold, window)


def _filter_from(args):
    if not args.filter:
        return DEFAULT_SIZE_FILTER
    try:
        lo, _, hi = args.filter.partition(":")
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"cannot parse size filter {args.filter!r}, expected MIN:MAX")


def _load_store(args):
    if not args.store:
        raise ValueError("--store is required for this command")
    return load_store(args.store)


def cmd_ingest(args):
    if not args.out:
        raise ValueError("--out is required: path of the store file to write")
    store = ingest_csv(args.occurrences, args.cooccurrences, validation=args.validation)
    save_store(store, args.out)
    n_pairs = len({key for yc in store.years for key in yc.cooccurrences})
    print(f"terms: {len(store)}")
    print(f"years: {len(store.years)}")
    print(f"pairs: {n_pairs}")
    print(f"warnings: {len(store.warnings)}")
    if n_pairs == 0:
        print("warning: 0 pairs ingested; all proximities will be zero")
    for warning in store.warnings:
        print(f"warning: {warning}")
    print(f"store written to {args.out}")
    return EXIT_OK


def cmd_validate(args):
    try:
        store = ingest_csv(args.occurrences, args.cooccurrences, validation="strict")
    except ValidationError as err:
        print(f"invalid: {err}", file=sys.stderr)
        return EXIT_INPUT
    print(f"ok: {len(store)} terms, {len(store.years)} years, strict validation passed")
    return EXIT_OK


def cmd_neighbors(args):
    store = _load_store(args)
    params = _params_from(args, store)
    term_id = store.id_of(args.term)
    row = proximity_row(store, term_id, params)
    neighbors = [
        {"label": store.label_of(pv.target), "value": pv.value}
        for pv in row
        if pv.value > params.threshold and pv.target != term_id
    ]
    neighbors.sort(key=lambda entry: (-entry["value"], entry["label"]))
    payload = {
        "term": store.label_of(term_id),
        "alpha": params.alpha,
        "s": params.threshold,
        "window": [params.window.y1, params.window.y2],
        "neighbors": neighbors,
    }
    sys.stdout.write(json_bytes(payload).decode("utf-8"))
    return EXIT_OK


def _run_field_extractor(args, store):
    params = _params_from(args, store)
    extractor = FieldExtractor(
        alpha=params.alpha,
        threshold=params.threshold,
        k=args.k if args.k is not None else 3,
        window=params.window,
        edge_rule=args.edge_rule or "or",
        growth_basis=getattr(args, "growth_basis", "occurrences"),
        overlap_boundary=getattr(args, "overlap_boundary", False),
        clique_budget=getattr(args, "clique_budget", DEFAULT_CLIQUE_BUDGET),
    )
    return extractor.fit(store)


def cmd_fields(args):
    store = _load_store(args)
    if not args.out:
        raise ValueError("--out is required: directory for field exports")
    extractor = _run_field_extractor(args, store)
    os.makedirs(args.out, exist_ok=True)
    atomic_write_text(
        os.path.join(args.out, "graph_edges.csv"),
        edges_csv_text(extractor.graph_, store),
    )
    atomic_write_text(
        os.path.join(args.out, "graph.graphml"),
        graph_graphml_text(extractor.graph_, store),
    )
    atomic_write_bytes(
        os.path.join(args.out, "communities.json"),
        json_bytes(communities_json_dict(extractor.communities_, store)),
    )
    index_entries = []
    for field in extractor.fields_:
        name = f"field_{field.id:03d}.json"
        atomic_write_bytes(os.path.join(args.out, name), json_bytes(field_json_dict(field)))
        index_entries.append(
            {
                "id": field.id,
                "file": name,
                "size": len(field.members),
                "label_generic": field.label_generic,
                "label_specific": field.label_specific,
            }
        )
    index = {
        "window": [extractor.window_.y1, extractor.window_.y2],
        "alpha": extractor.alpha,
        "threshold": extractor.threshold,
        "k": extractor.k,
        "edge_rule": extractor.edge_rule,
        "fields": index_entries,
    }
    atomic_write_bytes(os.path.join(args.out, "index.json"), json_bytes(index))
    print(f"fields: {len(extractor.fields_)}")
    print(f"written to {args.out}")
    return EXIT_OK


def _load_fields(fields_path, store):
    index_path = fields_path
    if os.path.isdir(fields_path):
        index_path = os.path.join(fields_path, "index.json")
    with open(index_path, encoding="utf-8") as handle:
        index = json.load(handle)
    base = os.path.dirname(index_path)
    fields = []
    for entry in index["fields"]:
        with open(os.path.join(base, entry["file"]), encoding="utf-8") as handle:
            fields.append(field_from_json_dict(json.load(handle), store))
    return index, fields


def cmd_map(args):
    store = _load_store(args)
    if not args.out:
        raise ValueError("--out is required: directory for map exports")
    index, fields = _load_fields(args.fields, store)
    window = _window_from(args, store) if args.window else TimeWindow(*index["window"])
    macro = build_macro_map(
        fields,
        store,
        window=window,
        size_filter=_filter_from(args),
        log_base=args.log_base,
        overlap_boundary=args.overlap_boundary,
    )
    os.makedirs(args.out, exist_ok=True)
    atomic_write_bytes(os.path.join(args.out, "map.json"), json_bytes(macro_map_json_dict(macro)))
    atomic_write_text(os.path.join(args.out, "map.graphml"), macro_map_graphml_text(macro))
    atomic_write_text(os.path.join(args.out, "map.dot"), macro_map_dot_text(macro))
    print(f"nodes: {len(macro.nodes)}")
    print(f"edges: {len(macro.edges)}")
    print(f"written to {args.out}")
    return EXIT_OK


def _parse_list(text, cast):
    return [cast(part) for part in text.split(",") if part.strip()]


def cmd_sweep(args):
    store = _load_store(args)
    alphas = _parse_list(args.alphas, float)
    thresholds = _parse_list(args.thresholds, float)
    ks = _parse_list(args.ks, int)
    window = _window_from(args, store)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["alpha", "threshold", "k", "n_fields", "covered_terms", "overlapping_terms", "status"]
    )
    for alpha in alphas:
        for threshold in thresholds:
            for k in ks:
                row = [alpha, threshold, k]
                try:
                    extractor = FieldExtractor(
                        alpha=alpha,
                        threshold=threshold,
                        k=k,
                        window=window,
                        edge_rule=args.edge_rule or "or",
                        clique_budget=args.clique_budget,
                    ).fit(store)
                    memberships = {}
                    for field in extractor.fields_:
                        for profile in field.members:
                            memberships[profile.term] = memberships.get(profile.term, 0) + 1
                    covered = len(memberships)
                    overlapping = sum(1 for n in memberships.values() if n > 1)
                    row += [len(extractor.fields_), covered, overlapping, "ok"]
                except BudgetExceededError:
                    row += ["", "", "", "budget-exceeded"]
                writer.writerow(row)
    text = out.getvalue()
    if args.out:
        atomic_write_text(args.out, text)
        print(f"sweep written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_serve(args):
    from .server import AnalyticsService, serve_forever

    store = _load_store(args)
    service = AnalyticsService(
        store,
        cache_size=args.cache_size,
        soft_deadline=args.soft_deadline,
        cors_origins=tuple(o.strip() for o in args.cors.split(",") if o.strip()),
    )
    if args.warm_fields:
        service.warm_fields_cache(args.warm_fields)
    print(f"serving on http://{args.host}:{args.port}")
    serve_forever(service, args.host, args.port, static_dir=args.static)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
