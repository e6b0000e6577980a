"""Planar triangulations, their reduction into isometric paths, and the
distance-reach audit at radius 4.

A triangulation arrives as a rotation system (clockwise neighbour order
per vertex) plus a designated outer face.  The reduction chops the
vertex set into an ordered list of paths: P_0 is an outer-face edge,
P_1 the remaining outer vertex, and each later P_i is an isometric path
inside one connected component K_i of the unplaced vertices.  The face
of the already-placed graph that contains K_i has its boundary split
into two runs lying on two earlier paths (the lower-indexed one is
called the manager, the other the foreman); the faces at the two run
junctions pin the endpoints w_i, w'_i of P_i, and among the shortest
w_i w'_i-paths the construction takes the one hugging the manager run.

Ordering the paths end to end gives a vertex ordering whose DReach_4
sets stay small; audit_dr4 measures them and checks the size bound 76
together with the per-path overlap bound |N^4[v] cap P_i| <= 9 in the
residual graph where both v and P_i are present.
"""

from __future__ import annotations

import json
import random
from collections import Counter, deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .orderings import VertexOrdering, dreach_sets
from .sgraph import Graph

DEFAULT_DR4_BOUND = 76
PATH_OVERLAP_BOUND = 9
DEFAULT_AUDIT_BUDGET = 2_000_000


class TriangulationError(ValueError):
    """Invalid rotation system; `kind` names the failed check."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class ReductionError(RuntimeError):
    """Fatal structural failure while building a reduction."""


class Triangulation:
    """Validated plane triangulation given by clockwise rotations.

    All faces, the designated outer one included, must be triangles;
    the graph must be simple, connected, and satisfy m = 3n - 6.
    """

    def __init__(self, rot, outer):
        self.rot = [list(map(int, nbrs)) for nbrs in rot]
        self.outer = tuple(int(v) for v in outer)
        self.n = len(self.rot)
        self._graph = None
        self._validate_structure()
        self._idx = [{u: i for i, u in enumerate(nbrs)} for nbrs in self.rot]
        self._validate_connected()
        self._validate_euler()
        self.faces = self._trace_faces()
        if len(self.outer) != 3 or frozenset(self.outer) not in self.faces:
            raise TriangulationError("outer", f"outer face {self.outer} is not a face")

    def _validate_structure(self):
        n = self.n
        if n < 3:
            raise TriangulationError("rotation", "need at least 3 vertices")
        nbr_sets = []
        for v, nbrs in enumerate(self.rot):
            s = set(nbrs)
            if len(s) != len(nbrs):
                raise TriangulationError("rotation", f"vertex {v}: repeated neighbour")
            if v in s:
                raise TriangulationError("rotation", f"vertex {v}: self-loop")
            if not all(0 <= u < n for u in nbrs):
                raise TriangulationError("rotation", f"vertex {v}: neighbour out of range")
            nbr_sets.append(s)
        for v, s in enumerate(nbr_sets):
            for u in s:
                if v not in nbr_sets[u]:
                    raise TriangulationError("rotation", f"edge ({v},{u}) not symmetric")

    def _validate_connected(self):
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.rot[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != self.n:
            raise TriangulationError("disconnected",
                                     f"only {len(seen)} of {self.n} vertices reachable")

    def _validate_euler(self):
        m = sum(len(nbrs) for nbrs in self.rot) // 2
        if m != 3 * self.n - 6:
            raise TriangulationError("euler",
                                     f"m = {m}, a triangulation on {self.n} "
                                     f"vertices needs {3 * self.n - 6}")

    def succ(self, u: int, v: int) -> int:
        """Vertex after u in the rotation at v: the face-walk step and
        the apex of the face left of the directed edge u -> v."""
        nbrs = self.rot[v]
        return nbrs[(self._idx[v][u] + 1) % len(nbrs)]

    def _trace_faces(self):
        faces = set()
        seen = set()
        for a in range(self.n):
            for b in self.rot[a]:
                if (a, b) in seen:
                    continue
                u, v = a, b
                cycle = []
                for _ in range(3):
                    seen.add((u, v))
                    cycle.append(u)
                    u, v = v, self.succ(u, v)
                if (u, v) != (a, b):
                    raise TriangulationError("face",
                                             f"face at edge ({a},{b}) is not a triangle")
                faces.add(frozenset(cycle))
        return faces

    def graph(self) -> Graph:
        if self._graph is None:
            g = Graph(self.n)
            for u in range(self.n):
                for v in self.rot[u]:
                    if u < v:
                        g.add_edge(u, v)
            self._graph = g
        return self._graph


def load_triangulation(src) -> Triangulation:
    """Triangulation from a rotation document (dict or JSON text).

    Schema: {"n": int, "outer": [u1, u2, u3], "rot": {vertex: [nbrs]}},
    all vertex labels 1-based.
    """
    if isinstance(src, (str, bytes)):
        try:
            src = json.loads(src)
        except json.JSONDecodeError as e:
            raise ValueError(f"rotation document: invalid JSON ({e})") from None
    if not isinstance(src, dict):
        raise ValueError("rotation document: expected a JSON object")
    try:
        n = int(src["n"])
        outer = [int(v) - 1 for v in src["outer"]]
        rot_in = src["rot"]
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"rotation document: missing or malformed field ({e})") from None
    rot = [None] * n
    for key, nbrs in rot_in.items():
        v = int(key) - 1
        if not 0 <= v < n:
            raise ValueError(f"rotation document: vertex {key} out of range")
        rot[v] = [int(u) - 1 for u in nbrs]
    missing = [v + 1 for v in range(n) if rot[v] is None]
    if missing:
        raise ValueError(f"rotation document: no rotation for vertices {missing[:5]}")
    return Triangulation(rot, outer)


@dataclass
class PathMeta:
    """Bookkeeping for one reduction path (index >= 2)."""

    index: int
    manager: int                # path index h of the manager run
    foreman: int                # path index j of the foreman run
    anchor1: tuple              # (v, w, z): face at the first junction, w = path start
    anchor2: tuple              # (v', w', z'): face at the second junction, w' = path end
    arc_manager: tuple          # boundary run on the manager path, walk order
    arc_foreman: tuple
    component: tuple            # K_i snapshot, sorted
    r1_interior: tuple          # interior vertices on the manager side, sorted


@dataclass
class Reduction:
    """Ordered paths partitioning the vertices, with per-path metadata."""

    paths: list
    metas: list
    n: int
    _pidx: np.ndarray = field(default=None, repr=False)
    _ppos: np.ndarray = field(default=None, repr=False)

    def _index_arrays(self):
        if self._pidx is None:
            pidx = np.full(self.n, -1, dtype=np.int32)
            ppos = np.full(self.n, -1, dtype=np.int32)
            for i, path in enumerate(self.paths):
                for j, v in enumerate(path):
                    if not 0 <= v < self.n or pidx[v] >= 0:
                        raise ValueError(f"paths do not partition: vertex {v}")
                    pidx[v] = i
                    ppos[v] = j
            if int((pidx < 0).sum()):
                raise ValueError("paths do not cover every vertex")
            self._pidx = pidx
            self._ppos = ppos
        return self._pidx, self._ppos

    def path_index(self) -> np.ndarray:
        return self._index_arrays()[0]

    def pos_in_path(self) -> np.ndarray:
        return self._index_arrays()[1]


def reduction_ordering(r: Reduction) -> VertexOrdering:
    """Paths concatenated end to end, each from w_i to w'_i."""
    return VertexOrdering([v for path in r.paths for v in path])


def _face_boundary(t: Triangulation, placed, K) -> list:
    """Boundary cycle of the placed-graph face containing component K.

    Walks the face of the graph induced on placed vertices: from the
    directed edge (u, v) the walk continues to the first placed vertex
    after u in the rotation at v.  The start edge is taken at the
    smallest K-vertex with a placed neighbour, entering the rotation gap
    that contains it, so the traced face is the one K sits in.
    """
    x0 = b = -1
    for x in sorted(K):
        pl = [w for w in t.rot[x] if placed[w]]
        if pl:
            x0, b = x, min(pl)
            break
    if x0 < 0:
        raise ReductionError("component has no placed neighbour")
    rb = t.rot[b]
    db = len(rb)
    i0 = t._idx[b][x0]
    c = -1
    for s in range(1, db + 1):
        cand = rb[(i0 + s) % db]
        if placed[cand]:
            c = cand
            break
    if c < 0:
        raise ReductionError(f"placed vertex {b} has no other placed neighbour")
    seq = []
    u, v = b, c
    for _ in range(6 * t.n + 12):
        seq.append(u)
        rv = t.rot[v]
        dv = len(rv)
        i = t._idx[v][u]
        w = -1
        for s in range(1, dv + 1):
            cand = rv[(i + s) % dv]
            if placed[cand]:
                w = cand
                break
        if w < 0:
            raise ReductionError(f"face walk stuck at ({u},{v})")
        u, v = v, w
        if (u, v) == (b, c):
            break
    else:
        raise ReductionError("face walk did not close")
    if len(set(seq)) != len(seq):
        raise ReductionError(f"face boundary repeats a vertex: {seq}")
    return seq


def _boundary_runs(seq, pidx, ppos):
    """Split the boundary cycle into its two path runs.

    Returns (manager_pid, manager_run, foreman_pid, foreman_run) with
    runs in walk order; every run must be contiguous along its path.
    """
    ids = [int(pidx[v]) for v in seq]
    L = len(seq)
    start = -1
    for i in range(L):
        if ids[i] != ids[i - 1]:
            start = i
            break
    if start < 0:
        raise ReductionError(f"boundary lies on a single path {ids[0]}")
    rseq = seq[start:] + seq[:start]
    rids = ids[start:] + ids[:start]
    runs = []
    for v, pid in zip(rseq, rids):
        if runs and runs[-1][0] == pid:
            runs[-1][1].append(v)
        else:
            runs.append((pid, [v]))
    if len(runs) != 2:
        raise ReductionError(f"boundary touches {len(runs)} path runs, expected 2")
    for pid, run in runs:
        steps = {int(ppos[b]) - int(ppos[a]) for a, b in zip(run, run[1:])}
        if not steps <= {1} and not steps <= {-1}:
            raise ReductionError(f"run on path {pid} is not contiguous: {run}")
    (pa, ra), (pb, rb) = runs
    if pa < pb:
        return pa, ra, pb, rb
    return pb, rb, pa, ra


def _k_side_apex(t: Triangulation, p: int, q: int, K) -> int:
    """Apex of the face on the component side of boundary edge pq."""
    a1 = t.succ(p, q)
    a2 = t.succ(q, p)
    hits = [a for a in (a1, a2) if a in K]
    if len(hits) != 1:
        raise ReductionError(f"junction edge ({p},{q}) has {len(hits)} "
                             "component-side apexes, expected 1")
    return hits[0]


def _leftmost_geodesic(t: Triangulation, K, w: int, w1: int, v: int, z: int) -> list:
    """Shortest w..w1 path in K hugging the manager side.

    Distances run from w1; at each step the next vertex is the first
    distance-decreasing K-neighbour met when sweeping the rotation away
    from the manager-side reference (v at the start, then the vertex we
    arrived from), keeping one fixed sweep direction throughout.  The
    direction is chosen so the first sweep leaves the anchor face vwz
    through its v-side.
    """
    if w == w1:
        return [w]
    dist = {w1: 0}
    queue = deque([w1])
    while queue:
        u = queue.popleft()
        for nb in t.rot[u]:
            if nb in K and nb not in dist:
                dist[nb] = dist[u] + 1
                queue.append(nb)
    if w not in dist:
        raise ReductionError(f"path endpoints {w},{w1} disconnected in component")
    rw = t.rot[w]
    dw = len(rw)
    iv = t._idx[w][v]
    if rw[(iv + 1) % dw] == z:
        delta = -1
    elif rw[(iv - 1) % dw] == z:
        delta = 1
    else:
        raise ReductionError(f"anchor face ({v},{w},{z}) not consecutive at {w}")
    path = [w]
    cur, ref = w, v
    while dist[cur] > 0:
        rc = t.rot[cur]
        dc = len(rc)
        i0 = t._idx[cur][ref]
        nxt = -1
        for s in range(1, dc + 1):
            cand = rc[(i0 + delta * s) % dc]
            if cand in K and dist.get(cand, -2) == dist[cur] - 1:
                nxt = cand
                break
        if nxt < 0:
            raise ReductionError(f"geodesic sweep stuck at {cur}")
        path.append(nxt)
        cur, ref = nxt, cur
    return path


def _components(t: Triangulation, vertices) -> list:
    out = []
    left = set(vertices)
    for v in sorted(left):
        if v not in left:
            continue
        comp = {v}
        stack = [v]
        left.discard(v)
        while stack:
            u = stack.pop()
            for nb in t.rot[u]:
                if nb in left:
                    left.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(comp)
    return out


def _region_interior(t: Triangulation, K, path_vertices, arc_manager) -> set:
    """Vertices of K strictly inside the manager-side region: the
    components of K minus the path that touch the manager run."""
    arc = set(arc_manager)
    interior = set()
    for comp in _components(t, K - set(path_vertices)):
        if any(nb in arc for u in comp for nb in t.rot[u]):
            interior |= comp
    return interior


def brute_min_region_paths(t: Triangulation, K, w: int, w1: int, arc_manager,
                           cap: int = 20):
    """All shortest w..w1 paths in K minimizing the manager-side interior.

    Exhaustive cross-check oracle for the geodesic selection; capped to
    small components.  Returns (minimum interior size, list of paths).
    """
    if len(K) >= cap:
        raise ValueError(f"oracle capped at {cap} vertices, component has {len(K)}")
    dist = {w1: 0}
    queue = deque([w1])
    while queue:
        u = queue.popleft()
        for nb in t.rot[u]:
            if nb in K and nb not in dist:
                dist[nb] = dist[u] + 1
                queue.append(nb)
    paths = []

    def extend(prefix):
        cur = prefix[-1]
        if cur == w1:
            paths.append(list(prefix))
            return
        for nb in sorted(t.rot[cur]):
            if nb in K and dist.get(nb, -2) == dist[cur] - 1:
                prefix.append(nb)
                extend(prefix)
                prefix.pop()

    extend([w])
    best = None
    best_paths = []
    for p in paths:
        size = len(_region_interior(t, K, p, arc_manager))
        if best is None or size < best:
            best = size
            best_paths = [p]
        elif size == best:
            best_paths.append(p)
    return best, best_paths


def build_reduction(t: Triangulation) -> Reduction:
    """Reduction of a triangulation, processing components first come
    first served.  Structural expectations (boundary shape, junction
    faces) are enforced and raise ReductionError when violated."""
    n = t.n
    placed = [False] * n
    pidx = np.full(n, -1, dtype=np.int32)
    ppos = np.full(n, -1, dtype=np.int32)
    u1, u2, u3 = t.outer
    paths = [[u1, u2], [u3]]
    metas = [None, None]
    for i, path in enumerate(paths):
        for j, v in enumerate(path):
            placed[v] = True
            pidx[v] = i
            ppos[v] = j
    worklist = deque(_components(t, [v for v in range(n) if not placed[v]]))
    while worklist:
        K = worklist.popleft()
        i = len(paths)
        seq = _face_boundary(t, placed, K)
        h, run_m, j, run_f = _boundary_runs(seq, pidx, ppos)
        e1 = (run_m[-1], run_f[0])
        e2 = (run_f[-1], run_m[0])
        w = _k_side_apex(t, e1[0], e1[1], K)
        w1 = _k_side_apex(t, e2[0], e2[1], K)
        anchor1 = (e1[0], w, e1[1])
        anchor2 = (e2[1], w1, e2[0])
        for a in (anchor1, anchor2):
            if frozenset(a) not in t.faces:
                raise ReductionError(f"junction triple {a} is not a face")
        path = _leftmost_geodesic(t, K, w, w1, anchor1[0], anchor1[2])
        interior = _region_interior(t, K, path, run_m)
        metas.append(PathMeta(index=i, manager=h, foreman=j,
                              anchor1=anchor1, anchor2=anchor2,
                              arc_manager=tuple(run_m), arc_foreman=tuple(run_f),
                              component=tuple(sorted(K)),
                              r1_interior=tuple(sorted(interior))))
        paths.append(path)
        for pos, v in enumerate(path):
            placed[v] = True
            pidx[v] = i
            ppos[v] = pos
        worklist.extend(_components(t, K - set(path)))
    return Reduction(paths=paths, metas=metas, n=n)


def _component_of(t: Triangulation, start: int, allowed) -> set:
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for nb in t.rot[u]:
            if nb in allowed and nb not in comp:
                comp.add(nb)
                stack.append(nb)
    return comp


def verify_reduction(t: Triangulation, r: Reduction, *, samples: int = 3,
                     seed: int = 0, check_separation: bool = False) -> list:
    """Independent sweep over every reduction invariant.

    Recomputes components from scratch, re-measures path isometry,
    re-locates anchor faces, checks that each component met exactly its
    two boss paths, and samples the detour property: walking between
    two path vertices through the manager-side interior takes strictly
    longer than along the path.  Returns violation strings, empty when
    the reduction is sound.
    """
    out = []
    g = t.graph()
    if r.n != t.n:
        return [f"reduction covers {r.n} vertices, triangulation has {t.n}"]
    try:
        pidx, ppos = r._index_arrays()
    except ValueError as e:
        return [str(e)]
    u1, u2, u3 = t.outer
    if list(r.paths[0]) != [u1, u2]:
        out.append(f"P0 is {r.paths[0]}, expected [{u1}, {u2}]")
    if list(r.paths[1]) != [u3]:
        out.append(f"P1 is {r.paths[1]}, expected [{u3}]")
    for i, path in enumerate(r.paths):
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                out.append(f"P{i}: consecutive vertices {a},{b} not adjacent")
    rng = random.Random(seed)
    for i in range(2, len(r.paths)):
        path = r.paths[i]
        meta = r.metas[i]
        if meta is None:
            out.append(f"P{i}: metadata missing")
            continue
        allowed = {v for v in range(t.n) if pidx[v] >= i}
        K = _component_of(t, path[0], allowed)
        if meta.component != tuple(sorted(K)):
            out.append(f"P{i}: stored component differs from recomputation")
            continue
        if not set(path) <= K:
            out.append(f"P{i}: path leaves its component")
            continue
        dist = {path[0]: 0}
        queue = deque([path[0]])
        while queue:
            u = queue.popleft()
            for nb in t.rot[u]:
                if nb in K and nb not in dist:
                    dist[nb] = dist[u] + 1
                    queue.append(nb)
        if dist.get(path[-1]) != len(path) - 1:
            out.append(f"P{i}: length {len(path) - 1} but component distance "
                       f"{dist.get(path[-1])}")
        h, j = meta.manager, meta.foreman
        if not h < j < i:
            out.append(f"P{i}: boss indices ({h},{j}) out of order")
        for name, (v, w, z), end in (("first", meta.anchor1, path[0]),
                                     ("second", meta.anchor2, path[-1])):
            if frozenset((v, w, z)) not in t.faces:
                out.append(f"P{i}: {name} anchor {(v, w, z)} is not a face")
            if w != end:
                out.append(f"P{i}: {name} anchor midpoint {w} is not the path end {end}")
            if pidx[v] != h or pidx[z] != j:
                out.append(f"P{i}: {name} anchor feet on paths "
                           f"({pidx[v]},{pidx[z]}), expected ({h},{j})")
        bosses = set()
        for u in K:
            for nb in t.rot[u]:
                if pidx[nb] < i:
                    bosses.add(int(pidx[nb]))
        if bosses != {h, j}:
            out.append(f"P{i}: component adjacent to paths {sorted(bosses)}, "
                       f"expected [{h}, {j}]")
        interior = _region_interior(t, K, path, meta.arc_manager)
        if meta.r1_interior != tuple(sorted(interior)):
            out.append(f"P{i}: stored manager-side interior differs from recomputation")
        if samples > 0 and len(path) >= 2 and interior:
            out.extend(_detour_violations(t, path, interior, rng, samples, i))
        if check_separation:
            arcs = set(meta.arc_manager) | set(meta.arc_foreman)
            comp = _component_of(t, path[0], set(range(t.n)) - arcs)
            early = [v for v in comp if pidx[v] < i and v not in arcs]
            if early:
                out.append(f"P{i}: arcs fail to separate the component "
                           f"from vertices {sorted(early)[:5]}")
    return out


def _detour_violations(t, path, interior, rng, samples, i):
    """Sampled check that leaving the path into the manager-side
    interior costs at least one extra step between any two path
    vertices.  Two BFS layers per source: reached cleanly, or reached
    having visited the interior."""
    out = []
    allowed = set(path) | interior
    pos_on = {v: idx for idx, v in enumerate(path)}
    for _ in range(samples):
        a = rng.randrange(len(path) - 1)
        b = rng.randrange(a + 1, len(path))
        x, y = path[a], path[b]
        start = (x, False)
        dist = {start: 0}
        queue = deque([start])
        hit = None
        while queue:
            (u, flag) = queue.popleft()
            d = dist[(u, flag)]
            if u == y and flag:
                hit = d
                break
            for nb in t.rot[u]:
                if nb not in allowed:
                    continue
                nf = flag or nb in interior
                key = (nb, nf)
                if key not in dist:
                    dist[key] = d + 1
                    queue.append(key)
        if hit is not None and hit < (b - a) + 1:
            out.append(f"P{i}: detour through the interior from {x} to {y} "
                       f"has length {hit}, shorter than along-path {b - a} + 1")
    return out


@dataclass
class AuditReport:
    """Distance-reach measurements at radius 4 under the reduction ordering."""

    vertex_count: int
    max_size: int
    bound: int
    passed: bool
    argmax_vertex: int
    histogram: dict
    witness_paths: dict
    fallback_count: int
    path_overlap_bound: int
    path_overlap_max: int
    path_overlap_violations: list
    paths_touched_max: int

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "max_size": self.max_size,
            "bound": self.bound,
            "passed": self.passed,
            "argmax_vertex": self.argmax_vertex,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witness_paths": {str(k): list(v) for k, v in sorted(self.witness_paths.items())},
            "fallback_count": self.fallback_count,
            "path_overlap_bound": self.path_overlap_bound,
            "path_overlap_max": self.path_overlap_max,
            "path_overlap_violations": self.path_overlap_violations,
            "paths_touched_max": self.paths_touched_max,
        }


def _witness_paths(g: Graph, pos, k: int, y: int, budget: int = 5_000_000) -> dict:
    """One qualifying path per member of DReach_k[y], by the same
    enumeration as the kernel; first-found path kept."""
    indptr, nbr = g.csr()[:2]
    m = k // 2
    py = int(pos[y])
    big = 1 << 60
    witness = {y: (y,)}
    stack = [(y, int(indptr[y]))]
    pms = [big]
    fss = [big]
    pm_cur, fs_cur = py, big
    on_path = {y}
    pushes = 0
    while stack:
        u, cursor = stack[-1]
        limit = min(k, fs_cur + m) if fs_cur < big else k
        advanced = False
        if len(stack) - 1 < limit:
            end = int(indptr[u + 1])
            while cursor < end:
                v = int(nbr[cursor])
                cursor += 1
                if v in on_path:
                    continue
                pushes += 1
                if pushes > budget:
                    raise RuntimeError("witness enumeration budget exceeded")
                t = len(stack)
                pv = int(pos[v])
                stack[-1] = (u, cursor)
                if pv < pm_cur and fs_cur >= t - m and v not in witness:
                    witness[v] = (v,) + tuple(x for x, _ in reversed(stack))
                pms.append(pm_cur)
                fss.append(fs_cur)
                if pv < pm_cur:
                    pm_cur = pv
                if pv < py and t < fs_cur:
                    fs_cur = t
                on_path.add(v)
                stack.append((v, int(indptr[v])))
                advanced = True
                break
            if not advanced:
                stack[-1] = (u, cursor)
        if not advanced:
            on_path.discard(u)
            pm_cur = pms.pop()
            fs_cur = fss.pop()
            stack.pop()
    return witness


def audit_dr4(t: Triangulation, r: Reduction, *,
              budget: int = DEFAULT_AUDIT_BUDGET,
              bound: int = DEFAULT_DR4_BOUND,
              profile=None) -> AuditReport:
    """Measure all DReach_4 sets under the reduction ordering.

    Reports the maximum size against `bound`, a size histogram, witness
    paths for the worst vertex, enumeration fallbacks, and the per-path
    overlap check: for every vertex v and every path P_i holding a
    member of DReach_4[v], the 4-ball of v in the graph restricted to
    paths >= i meets P_i in at most 9 vertices.

    A precomputed distance-reach profile for this graph and ordering at
    radius 4 may be passed to avoid recomputation.
    """
    if r.n != t.n:
        raise ValueError(f"reduction covers {r.n} vertices, triangulation has {t.n}")
    g = t.graph()
    L = reduction_ordering(r)
    if profile is not None:
        if profile.kind != "distance" or profile.k != 4 or profile.ordering != L:
            raise ValueError("profile does not match the reduction ordering at radius 4")
        prof = profile
    else:
        prof = dreach_sets(g, L, 4, budget=budget)
    sizes = prof.sizes
    max_size = prof.max_size
    histogram = dict(Counter(sizes))
    witness = _dreach_argmax_witnesses(g, L, prof)
    pidx = r.path_index()
    indptr, nbr = g.csr()[:2]
    overlap_max = 0
    violations = []
    touched_max = 0
    for v in range(t.n):
        touched = sorted({int(pidx[x]) for x in prof.sets[v].tolist()})
        touched_max = max(touched_max, len(touched))
        for i in touched:
            ball = _kernels.filtered_ball(indptr, nbr, pidx, i, v, 4)
            overlap = int((pidx[ball] == i).sum())
            if overlap > overlap_max:
                overlap_max = overlap
            if overlap > PATH_OVERLAP_BOUND:
                violations.append({"vertex": v, "path": i, "overlap": overlap})
    return AuditReport(
        vertex_count=t.n,
        max_size=max_size,
        bound=bound,
        passed=max_size <= bound and not violations,
        argmax_vertex=prof.argmax_vertex,
        histogram=histogram,
        witness_paths=witness,
        fallback_count=prof.fallback_count,
        path_overlap_bound=PATH_OVERLAP_BOUND,
        path_overlap_max=overlap_max,
        path_overlap_violations=violations,
        paths_touched_max=touched_max,
    )


def _dreach_argmax_witnesses(g: Graph, L: VertexOrdering, prof) -> dict:
    y = prof.argmax_vertex
    if y < 0:
        return {}
    witness = _witness_paths(g, L.pos_array(), 4, y)
    expected = set(prof.set_of(y))
    got = set(witness)
    assert got == expected, (sorted(got ^ expected))
    return witness
