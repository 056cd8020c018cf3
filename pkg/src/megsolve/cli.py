"""Command-line interface.

Reports are JSON with a top-level schema version and are byte-identical
across runs for the same input and flags; timing is therefore opt-in.
Exit codes: 0 success, 2 input/parse problems, 3 connectivity or size
preconditions, 4 forced-method mismatch, 5 hard size limits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .errors import (EdgeListParseError, GenerationError, LimitExceededError,
                     MethodMismatchError, NotConnectedError, SelfLoopError)
from .generators import GenSpec, generate
from .graph_core import Graph, articulation_points, format_edge_list, \
    read_graph_file
from .monitoring import bounds, is_meg_set, mandatory_vertices
from .oracle import DEFAULT_VERTEX_LIMIT, min_meg_bruteforce
from .recognizers import (detect_spider, recognize_bipartite_permutation,
                          recognize_distance_hereditary, recognize_p4_sparse,
                          recognize_strongly_chordal)
from .solvers import solve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4
EXIT_LIMIT = 5

ORACLE_LIMIT_ENV = "MEGSOLVE_ORACLE_LIMIT"

GEN_ALIASES = {
    "dh": "distance_hereditary",
    "distance-hereditary": "distance_hereditary",
    "p4sparse": "p4_sparse",
    "p4-sparse": "p4_sparse",
    "bipperm": "bipartite_permutation",
    "bipartite-permutation": "bipartite_permutation",
    "stronglychordal": "strongly_chordal",
    "strongly-chordal": "strongly_chordal",
    "random": "random",
}


def _oracle_limit() -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_VERTEX_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_LIMIT_ENV} must be an integer, got {raw!r}")
    if value < 2:
        raise ValueError(f"{ORACLE_LIMIT_ENV} must be at least 2")
    return value


def _summary(G: Graph, path: str) -> dict:
    return {"n": G.n, "m": G.m, "labels": sorted(G.labels), "path": path}


def _labels_sorted(G: Graph, ids) -> list[str]:
    return sorted(G.labels_of(ids))


def _report(command: str, G: Graph, path: str, result: dict,
            args: argparse.Namespace, started: float) -> int:
    report = {
        "schema": 1,
        "command": command,
        "input": _summary(G, path),
        "result": result,
        "exit": EXIT_OK,
    }
    if getattr(args, "timing", False):
        report["elapsedMs"] = round((time.perf_counter() - started) * 1000, 3)
    print(json.dumps(report, sort_keys=True, indent=2))
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    _require_connected(G, allow_single=True)
    dh = recognize_distance_hereditary(G)
    bp = recognize_bipartite_permutation(G)
    seo = recognize_strongly_chordal(G)
    try:
        p4 = "yes" if recognize_p4_sparse(G) else "no"
    except LimitExceededError:
        p4 = "unknown"  # scan refused above its size limit
    result: dict = {
        "distanceHereditary": "yes" if dh else "no",
        "bipartitePermutation": bp.verdict,
        "stronglyChordal": "yes" if seo else "no",
        "p4Sparse": p4,
    }
    if args.certificate:
        certs: dict = {
            "distanceHereditary": dh.to_json(G) if dh else None,
            "bipartitePermutation":
                bp.ordering.to_json(G) if bp.ordering else None,
            "stronglyChordal": seo.to_json(G) if seo else None,
        }
        spider = detect_spider(G)
        if spider is not None:
            certs["spider"] = spider.to_json(G)
        result["certificates"] = certs
    return _report("recognize", G, args.path, result, args, started)


def cmd_meg(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    res = solve(G, method=args.method, oracle_limit=_oracle_limit())
    result: dict = {
        "class": res.class_used,
        "method": res.method,
        "meg": res.meg,
        "witness": _labels_sorted(G, res.witness) if res.witness is not None else None,
        "minimal": res.minimality_guaranteed,
    }
    if res.bounds is not None:
        result["bounds"] = {
            "lower": res.bounds.lower,
            "upper": res.bounds.upper,
            "mandatory": _labels_sorted(G, res.bounds.mandatory),
            "nonCut": _labels_sorted(G, res.bounds.non_cut),
        }
    return _report("meg", G, args.path, result, args, started)


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    members = []
    for label in args.set.split(","):
        label = label.strip()
        if not label:
            continue
        try:
            members.append(G.id_of(label))
        except KeyError:
            raise EdgeListParseError(0, f"unknown vertex label {label!r} in --set")
    check = is_meg_set(G, members)
    uncovered = None
    if check.uncovered is not None:
        u, v = check.uncovered
        uncovered = sorted([G.label(u), G.label(v)])
    result = {"isMeg": check.ok, "uncovered": uncovered}
    return _report("verify", G, args.path, result, args, started)


def cmd_mandatory(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    result = {"mandatory": _labels_sorted(G, mandatory_vertices(G))}
    return _report("mandatory", G, args.path, result, args, started)


def cmd_cut(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    _require_connected(G, allow_single=True)
    result = {"cutVertices": _labels_sorted(G, articulation_points(G))}
    return _report("cut", G, args.path, result, args, started)


def cmd_oracle(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    G = read_graph_file(args.path)
    res = min_meg_bruteforce(G, trust_bounds=args.trust_bounds,
                             limit=_oracle_limit())
    result = {
        "meg": res.meg,
        "witness": _labels_sorted(G, res.witness),
        "explored": res.explored,
        "trustedBounds": res.trusted_bounds,
    }
    return _report("oracle", G, args.path, result, args, started)


def cmd_gen(args: argparse.Namespace) -> int:
    cls = GEN_ALIASES.get(args.cls, args.cls)
    spec = GenSpec(cls=cls, seed=args.seed, n=args.n, p=args.p, q=args.q,
                   m=args.m)
    if cls in ("distance_hereditary", "p4_sparse", "strongly_chordal"):
        if spec.n is None:
            raise GenerationError(f"--n is required for class {args.cls}")
    elif cls == "bipartite_permutation":
        if spec.p is None or spec.q is None:
            raise GenerationError(f"--p and --q are required for class {args.cls}")
    elif cls == "random":
        if spec.n is None or spec.m is None:
            raise GenerationError(f"--n and --m are required for class {args.cls}")
    else:
        raise GenerationError(f"unknown generator class {args.cls!r}")
    G = generate(spec)
    text = format_edge_list(G, header_comments=[spec.comment()])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    limit = _oracle_limit()
    paths = sorted(p for p in os.listdir(args.corpus) if p.endswith(".edges"))
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["class", "n", "m", "method", "meg", "elapsed_ms",
                     "agreed_with_oracle"])
    for name in paths:
        full = os.path.join(args.corpus, name)
        try:
            G = read_graph_file(full)
            res = solve(G, oracle_limit=limit)
        except (EdgeListParseError, SelfLoopError, NotConnectedError,
                LimitExceededError) as exc:
            writer.writerow([name, "", "", "error", "", "", str(exc)])
            continue
        agreed = ""
        if res.meg is not None and G.n <= limit:
            oracle_meg = min_meg_bruteforce(G, limit=limit).meg
            agreed = "yes" if oracle_meg == res.meg else "no"
        writer.writerow([res.class_used, G.n, G.m, res.method,
                         "" if res.meg is None else res.meg,
                         round(res.elapsed * 1000, 3), agreed])
    text = buf.getvalue()
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _require_connected(G: Graph, allow_single: bool = False) -> None:
    from .graph_core import is_connected

    if G.n == 0:
        raise NotConnectedError("graph has no vertices")
    if not allow_single and G.n < 2:
        raise NotConnectedError("need at least two vertices")
    if not is_connected(G):
        raise NotConnectedError("graph must be connected")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="megsolve",
        description="Monitoring edge-geodetic sets on restricted graph classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock time in the report")

    p = sub.add_parser("recognize", help="class membership verdicts")
    p.add_argument("path")
    p.add_argument("--certificate", action="store_true",
                   help="attach recognizer certificates")
    add_common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("meg", help="solve for the MEG number")
    p.add_argument("path")
    p.add_argument("--method", default="auto",
                   choices=["auto", "cut", "mandatory", "structural",
                            "oracle", "decomposition"])
    add_common(p)
    p.set_defaults(func=cmd_meg)

    p = sub.add_parser("verify", help="check a vertex set for MEG coverage")
    p.add_argument("path")
    p.add_argument("--set", required=True,
                   help="comma-separated vertex labels")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mandatory", help="vertices in every MEG set")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=cmd_mandatory)

    p = sub.add_parser("cut", help="articulation vertices")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("oracle", help="exhaustive minimum MEG search")
    p.add_argument("path")
    p.add_argument("--trust-bounds", action=argparse.BooleanOptionalAction,
                   default=True,
                   help="restrict the search between the sandwich bounds")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a generated instance as an edge list")
    p.add_argument("--class", dest="cls", required=True,
                   help="dh | p4sparse | bipperm | stronglychordal | random")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="solve a corpus directory, emit CSV")
    p.add_argument("corpus")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SelfLoopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except MethodMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
