"""Text and JSON formats for graphs, orderings, reductions, and reports.

Edge lists follow the DIMACS habit: a problem line, then one `e u v`
line per edge, vertices 1-based.  Signed graphs use problem type `sg`
and append the sign character to each edge line.  All readers report
the offending line number on parse errors; all writers are pure
functions returning strings, file handling stays with the caller.
"""

from __future__ import annotations

import json

from .colorers import Colouring
from .orderings import VertexOrdering
from .sgraph import CHAR_SIGNS, SIGN_CHARS, Graph, SignedGraph


class FormatError(ValueError):
    """Malformed input document; message carries the line number."""


def _lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield i, line.split()


def signed_to_text(g: SignedGraph) -> str:
    out = [f"p sg {g.n} {g.m}"]
    for u, v, s in g.edges():
        out.append(f"e {u + 1} {v + 1} {SIGN_CHARS[s]}")
    return "\n".join(out) + "\n"


def signed_from_text(text: str) -> SignedGraph:
    g = None
    declared = 0
    for i, tok in _lines(text):
        if tok[0] == "p":
            if g is not None:
                raise FormatError(f"line {i}: second problem line")
            if len(tok) != 4 or tok[1] != "sg":
                raise FormatError(f"line {i}: expected 'p sg <n> <m>'")
            try:
                n, declared = int(tok[2]), int(tok[3])
            except ValueError:
                raise FormatError(f"line {i}: non-integer sizes") from None
            g = SignedGraph(n)
        elif tok[0] == "e":
            if g is None:
                raise FormatError(f"line {i}: edge before problem line")
            if len(tok) != 4 or tok[3] not in CHAR_SIGNS:
                raise FormatError(f"line {i}: expected 'e <u> <v> <+|->'")
            try:
                u, v = int(tok[1]) - 1, int(tok[2]) - 1
            except ValueError:
                raise FormatError(f"line {i}: non-integer endpoints") from None
            try:
                g.add_edge(u, v, CHAR_SIGNS[tok[3]])
            except ValueError as e:
                raise FormatError(f"line {i}: {e}") from None
        else:
            raise FormatError(f"line {i}: unknown record {tok[0]!r}")
    if g is None:
        raise FormatError("line 1: missing problem line")
    if g.m != declared:
        raise FormatError(f"line 1: problem line declares {declared} edges, "
                          f"found {g.m}")
    return g


def graph_to_text(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def graph_from_text(text: str) -> Graph:
    g = None
    declared = 0
    for i, tok in _lines(text):
        if tok[0] == "p":
            if g is not None:
                raise FormatError(f"line {i}: second problem line")
            if len(tok) != 4 or tok[1] != "edge":
                raise FormatError(f"line {i}: expected 'p edge <n> <m>'")
            try:
                n, declared = int(tok[2]), int(tok[3])
            except ValueError:
                raise FormatError(f"line {i}: non-integer sizes") from None
            g = Graph(n)
        elif tok[0] == "e":
            if g is None:
                raise FormatError(f"line {i}: edge before problem line")
            if len(tok) != 3:
                raise FormatError(f"line {i}: expected 'e <u> <v>'")
            try:
                u, v = int(tok[1]) - 1, int(tok[2]) - 1
            except ValueError:
                raise FormatError(f"line {i}: non-integer endpoints") from None
            try:
                g.add_edge(u, v)
            except ValueError as e:
                raise FormatError(f"line {i}: {e}") from None
        else:
            raise FormatError(f"line {i}: unknown record {tok[0]!r}")
    if g is None:
        raise FormatError("line 1: missing problem line")
    if g.m != declared:
        raise FormatError(f"line 1: problem line declares {declared} edges, "
                          f"found {g.m}")
    return g


def ordering_to_text(order: VertexOrdering) -> str:
    return "\n".join(str(v + 1) for v in order) + "\n"


def ordering_from_text(text: str, n: int = None) -> VertexOrdering:
    vertices = []
    for i, tok in _lines(text):
        if len(tok) != 1:
            raise FormatError(f"line {i}: expected one vertex per line")
        try:
            vertices.append(int(tok[0]) - 1)
        except ValueError:
            raise FormatError(f"line {i}: non-integer vertex") from None
    if n is not None and len(vertices) != n:
        raise FormatError(f"line 1: {len(vertices)} vertices listed, expected {n}")
    try:
        return VertexOrdering(vertices)
    except ValueError as e:
        raise FormatError(f"line 1: {e}") from None


def signed_to_dot(g: SignedGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for u, v, s in g.edges():
        out.append(f'  {u + 1} -- {v + 1} [sign="{SIGN_CHARS[s]}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for u, v in g.edges():
        out.append(f"  {u + 1} -- {v + 1};")
    out.append("}")
    return "\n".join(out) + "\n"


def triangulation_to_json(t) -> str:
    doc = {
        "n": t.n,
        "outer": [v + 1 for v in t.outer],
        "rot": {str(v + 1): [u + 1 for u in t.rot[v]] for v in range(t.n)},
    }
    return json.dumps(doc, indent=1)


def reduction_to_json(r) -> str:
    metas = []
    for meta in r.metas:
        if meta is None:
            metas.append(None)
            continue
        metas.append({
            "index": meta.index,
            "manager": meta.manager,
            "foreman": meta.foreman,
            "anchor1": [v + 1 for v in meta.anchor1],
            "anchor2": [v + 1 for v in meta.anchor2],
            "arc_manager": [v + 1 for v in meta.arc_manager],
            "arc_foreman": [v + 1 for v in meta.arc_foreman],
        })
    doc = {
        "n": r.n,
        "paths": [[v + 1 for v in path] for path in r.paths],
        "metadata": metas,
        "ordering": [v + 1 for path in r.paths for v in path],
    }
    return json.dumps(doc, indent=1)


def _json_colour(c):
    return c if isinstance(c, int) else repr(c)


def colouring_to_json(col: Colouring) -> str:
    doc = {
        "palette_size": col.palette_size,
        "colours": {str(v + 1): _json_colour(c) for v, c in sorted(col.colour.items())},
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def colouring_to_text(col: Colouring) -> str:
    out = [f"{v + 1} {_json_colour(c)}" for v, c in sorted(col.colour.items())]
    return "\n".join(out) + "\n"


def assignment_to_text(asg) -> str:
    """Triple assignment, one `v: c | A | B` line per vertex."""
    out = []
    for v in sorted(asg.triples):
        c, a, b = asg.triples[v]
        out.append(f"{v + 1}: {c} | {' '.join(map(str, sorted(a)))} | "
                   f"{' '.join(map(str, sorted(b)))}")
    return "\n".join(out) + "\n"


def audit_table(report) -> str:
    """Human-readable companion to AuditReport.to_dict()."""
    d = report.to_dict()
    lines = [
        f"vertices            {d['vertex_count']}",
        f"max |DReach_4|      {d['max_size']}  (bound {d['bound']})",
        f"argmax vertex       {d['argmax_vertex']}",
        f"enumeration fallbacks {d['fallback_count']}",
        f"path overlap max    {d['path_overlap_max']}  (bound {d['path_overlap_bound']})",
        f"paths touched max   {d['paths_touched_max']}",
        f"verdict             {'PASS' if d['passed'] else 'FAIL'}",
        "size histogram:",
    ]
    for size, count in sorted(report.histogram.items()):
        lines.append(f"  {size:4d}  {count}")
    if report.path_overlap_violations:
        lines.append("overlap violations:")
        for viol in report.path_overlap_violations[:20]:
            lines.append(f"  vertex {viol['vertex']} path {viol['path']} "
                         f"overlap {viol['overlap']}")
    return "\n".join(lines) + "\n"
