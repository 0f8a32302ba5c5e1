"""Explicit graph and hypergraph constructions.

Three generators and one embedding:

* coordinate-colored hypercubes (proper colorings without rainbow cycles),
* binomial graphs stripped of short cycles by one-edge deletions (high girth),
* binomial 3-graphs stripped of short surface cycles the same way,
* the representation embedding that turns a 3-uniform face cycle into an
  even cycle inside a hypercube, alternating face and edge characteristic
  vectors.

The deletion constructions process detected copies in canonical order and
delete the lexicographically least edge of each copy still present, so the
deletion log is reproducible for a fixed seed.  Both re-scan the output and
record the certification; deleting edges never creates cycles, so the
re-scan always comes back clean.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import ColoredGraph, InputError, SimpleGraph
from .hypergraphs import RGraph
from .simplicial import FaceCycleCert, FaceWalk, canonical_cycle_faces, classify_walk

__all__ = [
    "hypercube_colored",
    "GirthResult",
    "random_high_girth_graph",
    "ThreeGraphResult",
    "random_short_cycle_free_3graph",
    "embed_cycle_in_hypercube",
    "validate_hypercube_embedding",
    "deletion_log_to_document",
]

FORMAT_VERSION = 1


def hypercube_colored(m: int) -> ColoredGraph:
    """Hypercube on bit-string vertices (bit i = coordinate i) with the
    coordinate coloring: an edge flipping coordinate i gets color i.  The
    coloring is proper and the graph has no rainbow cycle: any cycle flips
    every coordinate an even number of times, so some color repeats."""
    if not 1 <= m <= 20:
        raise InputError(f"m must lie in 1..20, got {m}")
    n = 1 << m
    edges = []
    colors = {}
    for u in range(n):
        for i in range(m):
            v = u ^ (1 << i)
            if u < v:
                edges.append((u, v))
                colors[(u, v)] = i
    return ColoredGraph(SimpleGraph(n, edges), colors)


# ---------------------------------------------------------------------------
# high-girth graphs by deletion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GirthResult:
    graph: SimpleGraph
    deletion_log: tuple[dict, ...]      # {"cycle": [...], "deleted_edge": [u, v]}
    p: float
    expected_edges: float
    sampled_edges: int
    girth_floor: int                    # girth is certified to exceed this
    certified: bool


def _short_cycles(n: int, edges: set[tuple[int, int]],
                  max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles of length <= max_len, one canonical tuple each:
    the start is the least vertex and the second vertex is below the last."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    for v in adj:
        adj[v].sort()
    out: list[tuple[int, ...]] = []
    for start in range(n):
        path = [start]
        on_path = {start}

        def rec():
            u = path[-1]
            for w in adj[u]:
                if w < start:
                    continue
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                    continue
                if w in on_path or len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                rec()
                path.pop()
                on_path.discard(w)

        rec()
    return sorted(out)


def _cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    closed = list(cycle) + [cycle[0]]
    return [(min(u, w), max(u, w)) for u, w in zip(closed, closed[1:])]


def random_high_girth_graph(n: int, ell: int, seed: int) -> GirthResult:
    """Binomial graph with p = n^(-1 + 1/(3*ell+2)), then one-edge deletions
    killing every cycle of length <= 3*ell+3; the output girth always
    exceeds 3*ell+3.  Edge counts are recorded, not asserted: the density
    target is asymptotic and desk sizes sit far from it."""
    if n < 1 or ell < 1:
        raise InputError("need n >= 1 and ell >= 1")
    girth_floor = 3 * ell + 3
    p = min(1.0, n ** (-1.0 + 1.0 / (3 * ell + 2)))
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    for u, w in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, w))
    sampled = len(edges)
    log: list[dict] = []
    for cyc in _short_cycles(n, edges, girth_floor):
        ce = _cycle_edges(cyc)
        if all(e in edges for e in ce):
            victim = min(ce)
            edges.discard(victim)
            log.append({"cycle": list(cyc), "deleted_edge": list(victim)})
    certified = not _short_cycles(n, edges, girth_floor)
    if not certified:
        raise AssertionError("deletion pass left a short cycle")
    return GirthResult(
        graph=SimpleGraph(n, sorted(edges)),
        deletion_log=tuple(log),
        p=p,
        expected_edges=p * n * (n - 1) / 2,
        sampled_edges=sampled,
        girth_floor=girth_floor,
        certified=certified,
    )


# ---------------------------------------------------------------------------
# short-cycle-free 3-graphs by deletion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThreeGraphResult:
    rgraph: RGraph
    deletion_log: tuple[dict, ...]   # {"vertices", "cycle", "deleted_edge"}
    p: float
    expected_edges: float
    sampled_edges: int
    scan_max_vertices: int           # cycles on <= this many vertices destroyed
    certified: bool                  # re-scan clean (vacuously when < 4)


@functools.lru_cache(maxsize=None)
def _cycle_patterns(ell: int) -> tuple[tuple[tuple, frozenset, int], ...]:
    """Every face cycle shape of length ell on vertex set {0..ell-1}, up to
    rotation/reflection: (canonical faces, edge-index set, edge bitmask).
    Edge indices refer to sorted 3-subsets of the vertex set."""
    verts = tuple(range(ell))
    triples = list(itertools.combinations(verts, 3))
    tri_index = {t: i for i, t in enumerate(triples)}
    faces_all = list(itertools.combinations(verts, 2))
    seen: dict[tuple, tuple[frozenset, int]] = {}

    def close_ok(seq: list[tuple[int, ...]]) -> bool:
        return len(set(seq[-1]) | set(seq[0])) == 3

    def record(seq: list[tuple[int, ...]]):
        walk = FaceWalk(3, tuple(seq) + (seq[0],))
        cls = classify_walk(walk)
        if cls.kind != "cycle":
            return
        canon = canonical_cycle_faces(walk.faces)
        if canon in seen:
            return
        idx = frozenset(tri_index[tuple(sorted(set(a) | set(b)))]
                        for a, b in zip(walk.faces, walk.faces[1:]))
        mask = 0
        for i in idx:
            mask |= 1 << i
        seen[canon] = (idx, mask)

    def dfs(seq: list[tuple[int, ...]]):
        if len(seq) == ell:
            if close_ok(seq):
                record(seq)
            return
        last = set(seq[-1])
        for f in faces_all:
            if len(last | set(f)) == 3:
                seq.append(f)
                dfs(seq)
                seq.pop()

    for f0 in faces_all:
        dfs([f0])
    return tuple(sorted((canon, idx, mask)
                        for canon, (idx, mask) in seen.items()))


def _scan_subsets(n: int, ell: int, edge_set: set[tuple[int, ...]],
                  on_hit=None) -> int:
    """Scan every ell-subset for face cycles of length ell (a length-ell
    cycle spans exactly ell vertices).  ``on_hit(subset, canon, idx_edges)``
    is called per still-present pattern; returns the number of hits."""
    patterns = _cycle_patterns(ell)
    if not patterns:
        return 0
    triples_local = list(itertools.combinations(range(ell), 3))
    hits = 0
    for subset in itertools.combinations(range(n), ell):
        mask = 0
        global_tris = []
        for bit, tri in enumerate(triples_local):
            gt = (subset[tri[0]], subset[tri[1]], subset[tri[2]])
            global_tris.append(gt)
            if gt in edge_set:
                mask |= 1 << bit
        if not mask:
            continue
        for canon, idx, pmask in patterns:
            if pmask & mask == pmask:
                hits += 1
                if on_hit is not None:
                    on_hit(subset, canon, [global_tris[i] for i in sorted(idx)])
                    # recompute the present mask: a deletion may have
                    # removed one of this subset's edges
                    mask = 0
                    for bit, gt in enumerate(global_tris):
                        if gt in edge_set:
                            mask |= 1 << bit
    return hits


def random_short_cycle_free_3graph(n: int, alpha: float,
                                   seed: int) -> ThreeGraphResult:
    """Binomial 3-graph with p = 12 * n^(-1+alpha) (clamped to 1), then one
    deletion per surface cycle spanning at most 1/alpha vertices.  A cycle
    of length ell spans exactly ell vertices, so the scan runs exhaustively
    over ell-subsets for ell = 4 .. floor(1/alpha); thresholds below 4 are
    vacuous and the raw sample is returned certified."""
    if n < 3:
        raise InputError("need n >= 3")
    if not 0.0 < alpha < 1.0:
        raise InputError(f"alpha must lie in (0, 1), got {alpha}")
    p = min(1.0, 12.0 * n ** (-1.0 + alpha))
    rng = random.Random(seed)
    edge_set: set[tuple[int, ...]] = set()
    for tri in itertools.combinations(range(n), 3):
        if rng.random() < p:
            edge_set.add(tri)
    sampled = len(edge_set)
    cap = math.floor(1.0 / alpha)
    log: list[dict] = []

    def destroy(subset, canon, gedges):
        present = [e for e in gedges if e in edge_set]
        victim = min(present)
        edge_set.discard(victim)
        log.append({
            "vertices": list(subset),
            "cycle": [list(f) for f in canon],
            "deleted_edge": list(victim),
        })

    for ell in range(4, cap + 1):
        if ell > n:
            break
        _scan_subsets(n, ell, edge_set, on_hit=destroy)
    remaining = sum(_scan_subsets(n, ell, edge_set)
                    for ell in range(4, min(cap, n) + 1))
    if remaining:
        raise AssertionError("deletion pass left a short surface cycle")
    return ThreeGraphResult(
        rgraph=RGraph(3, sorted(edge_set)),
        deletion_log=tuple(log),
        p=p,
        expected_edges=p * math.comb(n, 3),
        sampled_edges=sampled,
        scan_max_vertices=cap,
        certified=True,
    )


def deletion_log_to_document(log: Sequence[Mapping], kind: str,
                             params: Mapping) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": f"{kind}_deletion_log",
        "params": dict(sorted(params.items())),
        "deletions": [dict(entry) for entry in log],
    }


# ---------------------------------------------------------------------------
# hypercube embedding of 3-uniform face cycles
# ---------------------------------------------------------------------------

def _chi(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def embed_cycle_in_hypercube(cert: FaceCycleCert,
                             m: int | None = None) -> list[tuple[int, int]]:
    """Embed a 3-uniform face cycle of length ell as a 2*ell-cycle in the
    hypercube on m coordinates: alternate the characteristic vectors of the
    faces (weight 2) and of the edges (weight 3).  Consecutive vectors
    differ in one bit because each face is contained in its neighboring
    edges; every hypercube edge's {0,1,*} support is an edge of the cycle."""
    walk = cert.walk
    if walk.r != 3:
        raise InputError("embedding requires a 3-uniform cycle")
    if classify_walk(walk).kind != "cycle":
        raise InputError("certificate does not hold a valid cycle")
    union = sorted(walk.vertex_union())
    needed = max(union) + 1
    if m is None:
        m = needed
    if m < needed:
        raise InputError(f"m={m} too small for vertices up to {needed - 1}")
    vectors: list[int] = []
    for fa, fb in zip(walk.faces, walk.faces[1:]):
        vectors.append(_chi(fa))
        vectors.append(_chi(set(fa) | set(fb)))
    if len(set(vectors)) != len(vectors):
        raise InputError("cycle repeats a face or an edge; embedding "
                         "would not be a simple cycle")
    edges = []
    for k, x in enumerate(vectors):
        y = vectors[(k + 1) % len(vectors)]
        if bin(x ^ y).count("1") != 1:
            raise InputError("face/edge alternation broken (invalid cycle)")
        edges.append((x, y))
    return edges


def validate_hypercube_embedding(edges: Sequence[tuple[int, int]],
                                 cert: FaceCycleCert,
                                 m: int | None = None) -> bool:
    """Simple closed cycle in Q_m, vertices alternating weight 2 and 3,
    consecutive Hamming distance 1, every edge support an edge of the
    cycle certificate."""
    if not edges:
        return False
    walk = cert.walk
    hyperedges = {frozenset(set(a) | set(b))
                  for a, b in zip(walk.faces, walk.faces[1:])}
    seq = [e[0] for e in edges]
    if len(set(seq)) != len(seq) or len(seq) != 2 * walk.length:
        return False
    cap = (1 << m) if m is not None else None
    for k, (x, y) in enumerate(edges):
        if x != seq[k] or y != seq[(k + 1) % len(seq)]:
            return False
        if cap is not None and not (0 <= x < cap and 0 <= y < cap):
            return False
        if bin(x ^ y).count("1") != 1:
            return False
        wx, wy = bin(x).count("1"), bin(y).count("1")
        if {wx, wy} != {2, 3}:
            return False
        support = frozenset(i for i in range((x | y).bit_length())
                            if (x | y) >> i & 1)
        if support not in hyperedges:
            return False
    return True
