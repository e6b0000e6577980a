"""Command-line front end.

Every invocation prints one self-contained JSON report (stable key
order, machine part first) followed by a short human summary, and exits
0 exactly when all checks in the run passed.  All randomness flows from
--seed; --budget-ms converts to deterministic work budgets at a fixed
documented rate (2000 enumeration steps per millisecond), never from
wall-clock measurement, so identical commands yield byte-identical
reports apart from the elapsed_ms field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from . import __version__
from .colorers import (colour_2tree_7, colour_exact_distance_via_dcol,
                       colour_exact_distance_via_wcolk,
                       colour_strong_square_via_col2)
from .families import FAMILIES, FamilySpec, generate
from .formats import (FormatError, audit_table, colouring_to_json,
                      colouring_to_text, graph_from_text, graph_to_dot,
                      graph_to_text, ordering_from_text, ordering_to_text,
                      reduction_to_json, signed_from_text, signed_to_dot,
                      signed_to_text, triangulation_to_json)
from .orderings import degeneracy_ordering, minimize_over_orderings, profile
from .planar import (ReductionError, Triangulation, TriangulationError,
                     audit_dr4, build_reduction, load_triangulation,
                     reduction_ordering, verify_reduction)
from .sgraph import SignedGraph, exact_distance_graph, graph_union
from .twotrees import NotTwoTreeError
from .verify import SUITES, run_suite

STEPS_PER_MS = 2000

_KIND_NAMES = {"wcol": "weak", "col": "strong", "dcol": "distance"}


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path: str, inputs: dict) -> str:
    text = Path(path).read_text()
    inputs[path] = _sha256(text)
    return text


def _load_graph_any(text: str):
    """Signed or unsigned edge list, by problem type."""
    for _, tok in _iter_problem(text):
        if tok[1] == "sg":
            return signed_from_text(text)
        return graph_from_text(text)
    raise FormatError("line 1: missing problem line")


def _iter_problem(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if tok and tok[0] == "p" and len(tok) >= 2:
            yield i, tok


def _parse_k(value: str):
    if value in ("inf", "infinity"):
        return math.inf
    return int(value)


def _emit_payload(args, results: dict, payload: str, outputs: dict):
    results["output_sha256"] = _sha256(payload)
    if args.out:
        Path(args.out).write_text(payload)
        outputs[args.out] = results["output_sha256"]
    else:
        results["output"] = payload


def _cmd_gen(args, inputs, outputs):
    spec = FamilySpec(args.family, tuple(args.params), args.seed)
    obj = generate(spec)
    params = {"family": args.family, "params": list(args.params),
              "format": args.format}
    if isinstance(obj, Triangulation):
        results = {"n": obj.n, "m": obj.graph().m, "kind": "triangulation"}
        payload = triangulation_to_json(obj) + "\n"
        if args.format == "dot":
            payload = graph_to_dot(obj.graph())
    else:
        results = {"n": obj.n, "m": obj.m, "kind": "signed"}
        payload = signed_to_dot(obj) if args.format == "dot" else signed_to_text(obj)
    _emit_payload(args, results, payload, outputs)
    return params, results, True, [f"{args.family}: n={results['n']} m={results['m']}"]


def _cmd_exactdist(args, inputs, outputs):
    g = signed_from_text(_read(args.input, inputs))
    ed = exact_distance_graph(g, args.k, args.variant)
    params = {"k": args.k, "variant": args.variant}
    results = {"n": g.n, "m_in": g.m, "m_out": ed.m}
    payload = graph_to_dot(ed) if args.format == "dot" else graph_to_text(ed)
    _emit_payload(args, results, payload, outputs)
    return params, results, True, [f"exact-distance {args.k} ({args.variant}): "
                                   f"{ed.m} edges"]


def _cmd_colnum(args, inputs, outputs):
    g = _load_graph_any(_read(args.input, inputs))
    if isinstance(g, SignedGraph):
        g = g.underlying()
    kind = _KIND_NAMES[args.kind]
    k = _parse_k(args.k)
    params = {"kind": args.kind, "k": args.k}
    if args.ordering:
        L = ordering_from_text(_read(args.ordering, inputs), g.n)
        prof = profile(g, L, kind, k)
        method = "given-ordering"
    else:
        mode = "exhaustive" if args.exhaustive else "heuristic"
        L, _ = minimize_over_orderings(g, kind, k, mode=mode, cap=args.cap)
        prof = profile(g, L, kind, k)
        method = mode
    params["method"] = method
    results = {"value": prof.max_size, "argmax_vertex": prof.argmax_vertex,
               "method": method}
    if method == "exhaustive":
        results["ordering"] = [v + 1 for v in L]
    return params, results, True, [f"{args.kind}_{args.k} = {prof.max_size} "
                                   f"({method}, argmax vertex {prof.argmax_vertex})"]


def _cmd_color(args, inputs, outputs):
    g = signed_from_text(_read(args.input, inputs))
    modes = [m for m in ("dcol", "wcolk", "col2", "tw2") if getattr(args, m)]
    if len(modes) != 1:
        raise ValueError("choose exactly one of --dcol, --wcolk, --col2, --tw2")
    mode = modes[0]
    params = {"mode": mode}
    if mode in ("dcol", "wcolk"):
        if args.k is None:
            raise ValueError(f"--{mode} needs -k")
        params["k"] = args.k
    if mode == "tw2":
        _, col = colour_2tree_7(g)
        check_graph = graph_union(g.underlying(),
                                  exact_distance_graph(g, 2, "some_negative"))
    else:
        if args.ordering:
            L = ordering_from_text(_read(args.ordering, inputs), g.n)
            params["ordering"] = args.ordering
        else:
            L = degeneracy_ordering(g.underlying())
            params["ordering"] = "degeneracy"
        if mode == "dcol":
            budget = args.budget_ms * STEPS_PER_MS if args.budget_ms else None
            col = colour_exact_distance_via_dcol(g, args.k, L, budget=budget)
            check_graph = exact_distance_graph(g, args.k, "every_negative")
        elif mode == "wcolk":
            col = colour_exact_distance_via_wcolk(g, args.k, L)
            check_graph = exact_distance_graph(g, args.k, "every_negative")
        else:
            col = colour_strong_square_via_col2(g, L)
            check_graph = exact_distance_graph(g, 2, "some_negative")
    bad = next(((u, v) for u, v in check_graph.edges() if col[u] == col[v]), None)
    results = {"palette_size": col.palette_size,
               "distinct_colours": col.distinct_count(),
               "proper": bad is None}
    if bad is not None:
        results["monochromatic_edge"] = list(bad)
    payload = (colouring_to_text(col) if args.format == "text"
               else colouring_to_json(col) + "\n")
    _emit_payload(args, results, payload, outputs)
    lines = [f"{mode}: palette {col.palette_size}, "
             f"{col.distinct_count()} colours used, "
             f"{'proper' if bad is None else f'edge {bad} monochromatic'}"]
    return params, results, bad is None, lines


def _cmd_reduce(args, inputs, outputs):
    t = load_triangulation(_read(args.input, inputs))
    r = build_reduction(t)
    violations = verify_reduction(t, r, seed=args.seed or 0)
    results = {"n": t.n, "paths": len(r.paths), "violations": violations}
    payload = reduction_to_json(r) + "\n"
    _emit_payload(args, results, payload, outputs)
    if args.ordering_out:
        text = ordering_to_text(reduction_ordering(r))
        Path(args.ordering_out).write_text(text)
        outputs[args.ordering_out] = _sha256(text)
    lines = [f"reduction: {len(r.paths)} paths, "
             f"{len(violations)} verification violations"]
    return {}, results, not violations, lines


def _cmd_audit(args, inputs, outputs):
    t = load_triangulation(_read(args.input, inputs))
    r = build_reduction(t)
    budget = args.budget_ms * STEPS_PER_MS if args.budget_ms else 2_000_000
    rep = audit_dr4(t, r, budget=budget)
    params = {"budget": budget}
    results = rep.to_dict()
    return params, results, rep.passed, audit_table(rep).rstrip("\n").splitlines()


def _cmd_verify(args, inputs, outputs):
    params = {"suite": args.suite}
    kwargs = {}
    for name in ("seed", "count", "hom_count", "full_depth", "seeded_count",
                 "max_n", "signatures"):
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    if args.budget_ms:
        kwargs["budget"] = args.budget_ms * STEPS_PER_MS
    suite = run_suite(args.suite, **kwargs)
    params.update(suite.params)
    results = suite.to_dict()
    lines = [f"suite {args.suite}: "
             f"{sum(c.passed for c in suite.checks)}/{len(suite.checks)} checks passed"]
    for c in suite.failures()[:10]:
        lines.append(f"  FAIL {c.name}: {c.detail}")
    return params, results, suite.passed, lines


def _cmd_export_dot(args, inputs, outputs):
    g = _load_graph_any(_read(args.input, inputs))
    payload = signed_to_dot(g) if isinstance(g, SignedGraph) else graph_to_dot(g)
    results = {"n": g.n}
    _emit_payload(args, results, payload, outputs)
    return {}, results, True, ["dot export written"]


def _add_common(sp, out=True):
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1,
                    help="accepted for interface compatibility; runs are sequential")
    sp.add_argument("--budget-ms", type=int, default=None, dest="budget_ms",
                    help=f"work budget, {STEPS_PER_MS} enumeration steps per ms")
    sp.add_argument("--format", choices=("json", "text", "dot"), default="text")
    if out:
        sp.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgcol",
                                description="signed-graph colouring toolkit")
    p.add_argument("--version", action="version", version=f"sgcol {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("gen", help="generate an instance family member")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("params", nargs="*")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_gen)

    sp = sub.add_parser("exactdist", help="exact-distance graph of a signed graph")
    sp.add_argument("input")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--variant", choices=("every_negative", "some_negative"),
                    default="every_negative")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_exactdist)

    sp = sub.add_parser("colnum", help="generalised colouring numbers")
    sp.add_argument("input")
    sp.add_argument("--kind", choices=tuple(_KIND_NAMES), required=True)
    sp.add_argument("-k", required=True)
    sp.add_argument("--ordering", default=None, help="ordering file, one vertex per line")
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--heuristic", action="store_true")
    sp.add_argument("--cap", type=int, default=10)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_colnum)

    sp = sub.add_parser("color", help="run one of the colouring constructions")
    sp.add_argument("input")
    sp.add_argument("--dcol", action="store_true")
    sp.add_argument("--wcolk", action="store_true")
    sp.add_argument("--col2", action="store_true")
    sp.add_argument("--tw2", action="store_true")
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("--ordering", default=None)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_color)

    sp = sub.add_parser("reduce", help="isometric-path reduction of a triangulation")
    sp.add_argument("input", help="rotation system JSON")
    sp.add_argument("--ordering-out", default=None, dest="ordering_out")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_reduce)

    sp = sub.add_parser("audit", help="distance-reach audit at radius 4")
    sp.add_argument("input", help="rotation system JSON")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_audit)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--count", type=int, default=None)
    sp.add_argument("--hom-count", type=int, default=None, dest="hom_count")
    sp.add_argument("--full-depth", type=int, default=None, dest="full_depth")
    sp.add_argument("--seeded-count", type=int, default=None, dest="seeded_count")
    sp.add_argument("--max-n", type=int, default=None, dest="max_n")
    sp.add_argument("--signatures", type=int, default=None)
    _add_common(sp, out=False)
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("export-dot", help="DOT export of an edge list")
    sp.add_argument("input")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_export_dot)

    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("sgcol: --jobs must be at least 1", file=sys.stderr)
        return 2
    t0 = time.monotonic()
    inputs: dict = {}
    outputs: dict = {}
    try:
        params, results, passed, lines = args.handler(args, inputs, outputs)
        error = None
    except (FormatError, TriangulationError, ReductionError, NotTwoTreeError,
            ValueError, OSError) as e:
        params, results = {}, {"error": str(e), "error_kind": type(e).__name__}
        passed, lines = False, [f"error ({type(e).__name__}): {e}"]
        error = e
    report = {
        "command": ["sgcol"] + argv,
        "version": __version__,
        "seed": args.seed,
        "parameters": params,
        "inputs": inputs,
        "outputs": outputs,
        "results": results,
        "passed": passed,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
    print(json.dumps(report, sort_keys=True, indent=1))
    status = "PASS" if passed else "FAIL"
    print(f"sgcol {args.cmd}: {status}")
    for line in lines:
        print(f"  {line}")
    return 0 if passed and error is None else 1
