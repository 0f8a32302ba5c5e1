"""Higher-order walks, paths, and cycles in r-uniform hypergraphs.

A walk of length l is a sequence of (r-1)-faces f_0, ..., f_l whose
consecutive unions f_{i-1} ∪ f_i are edges.  It is a path when the faces
cover exactly l + r - 1 vertices (one new vertex per step), proper when
additionally f_0 ∩ f_l = ∅, and a cycle when it is closed (f_0 = f_l), covers
exactly l vertices, and some two faces among f_1..f_l are disjoint.  Every
cycle splits at a disjoint face pair into two proper, internally disjoint
paths.

For r = 3 the complex of a cycle triangulates either a cylinder or a Mobius
strip, distinguishable by orientation propagation across shared 1-faces; both
have Euler characteristic 0.  Degenerate length-4 cycles (tetrahedron
boundary and the three-triangle book) break that expectation, which is why
pipeline search rejects lengths below r + 2 and the generators start at 5.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Collection, Iterable, Mapping, Sequence

from .graphs import InputError
from .hypergraphs import (Face, RGraph, alpha_max_rgraph, conditional_neighborhood,
                          rgraph_digest)

__all__ = [
    "FaceWalk",
    "FacePathCert",
    "FaceCycleCert",
    "WalkClass",
    "classify_walk",
    "walk_in_host",
    "vertex_order",
    "split_cycle",
    "euler_characteristic",
    "classify_surface",
    "is_three_partite",
    "tight_path_greedy",
    "fan_paths",
    "FanResult",
    "path_between_face_set",
    "PathSearchResult",
    "sampled_reach_faces",
    "FaceReach",
    "find_face_cycle",
    "CycleSearchResult",
    "canonical_cycle_faces",
    "cycle_to_document",
    "cycle_from_document",
]


def _canon_face(f: Collection[int]) -> Face:
    return tuple(sorted(f))


@dataclass(frozen=True)
class FaceWalk:
    """Validated face sequence: |f_i| = r-1 and |f_{i-1} ∪ f_i| = r."""

    r: int
    faces: tuple[Face, ...]

    def __post_init__(self):
        if self.r < 2:
            raise InputError("r must be >= 2")
        if len(self.faces) < 2:
            raise InputError("a walk needs at least two faces")
        canon = tuple(_canon_face(f) for f in self.faces)
        object.__setattr__(self, "faces", canon)
        for f in canon:
            if len(f) != self.r - 1 or len(set(f)) != self.r - 1:
                raise InputError(f"face {f} is not an (r-1)-set")
        for a, b in zip(canon, canon[1:]):
            if len(set(a) | set(b)) != self.r:
                raise InputError(f"consecutive faces {a}, {b} do not span an edge")

    @property
    def length(self) -> int:
        return len(self.faces) - 1

    def edges(self) -> tuple[Face, ...]:
        return tuple(_canon_face(set(a) | set(b))
                     for a, b in zip(self.faces, self.faces[1:]))

    def vertex_union(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.faces:
            out.update(f)
        return frozenset(out)

    def is_closed(self) -> bool:
        return self.faces[0] == self.faces[-1]

    def reversed(self) -> "FaceWalk":
        return FaceWalk(self.r, tuple(reversed(self.faces)))


@dataclass(frozen=True)
class WalkClass:
    kind: str                       # walk | path | cycle | closed-walk
    proper: bool | None = None      # for paths
    disjoint_pair: tuple[int, int] | None = None  # for cycles


def classify_walk(walk: FaceWalk) -> WalkClass:
    """Decide walk / path(proper?) / cycle / closed-walk per the definitions."""
    union = walk.vertex_union()
    ell = walk.length
    if walk.is_closed():
        if len(union) == ell:
            # indices 1..ell (with f_ell = f_0) are eligible for the pair
            cyc = walk.faces[1:]
            for i, j in itertools.combinations(range(len(cyc)), 2):
                if not set(cyc[i]) & set(cyc[j]):
                    return WalkClass("cycle", None, (i + 1, j + 1))
        return WalkClass("closed-walk")
    if len(union) == ell + walk.r - 1:
        proper = not (set(walk.faces[0]) & set(walk.faces[-1]))
        return WalkClass("path", proper)
    return WalkClass("walk")


def walk_in_host(g: RGraph, walk: FaceWalk) -> bool:
    """Every consecutive union is an edge of g."""
    if g.r != walk.r:
        return False
    edge_set = set(g.edges)
    return all(e in edge_set for e in walk.edges())


@dataclass(frozen=True)
class FacePathCert:
    """A walk certified as a path (proper or not)."""

    walk: FaceWalk
    proper: bool

    @staticmethod
    def from_walk(walk: FaceWalk) -> "FacePathCert":
        cls = classify_walk(walk)
        if cls.kind != "path":
            raise InputError(f"walk classifies as {cls.kind}, not path")
        return FacePathCert(walk, bool(cls.proper))

    @property
    def faces(self) -> tuple[Face, ...]:
        return self.walk.faces

    @property
    def length(self) -> int:
        return self.walk.length

    def endpoints(self) -> tuple[Face, Face]:
        return self.walk.faces[0], self.walk.faces[-1]

    def internal_vertices(self) -> frozenset[int]:
        ends = set(self.walk.faces[0]) | set(self.walk.faces[-1])
        return frozenset(self.walk.vertex_union() - ends)


@dataclass(frozen=True)
class FaceCycleCert:
    """A closed walk certified as a cycle."""

    walk: FaceWalk
    disjoint_pair: tuple[int, int]

    @staticmethod
    def from_walk(walk: FaceWalk) -> "FaceCycleCert":
        cls = classify_walk(walk)
        if cls.kind != "cycle":
            raise InputError(f"walk classifies as {cls.kind}, not cycle")
        return FaceCycleCert(walk, cls.disjoint_pair)

    @property
    def length(self) -> int:
        return self.walk.length

    @property
    def faces(self) -> tuple[Face, ...]:
        return self.walk.faces


def vertex_order(path: FacePathCert | FaceWalk) -> tuple[int, ...]:
    """Canonical vertex order of a proper path.

    f_0's vertices come first, ordered by when they disappear from the face
    sequence; the remaining vertices follow in order of first appearance.
    Exactly one vertex leaves and one enters per step, so both orders are
    strict.
    """
    walk = path.walk if isinstance(path, FacePathCert) else path
    cls = classify_walk(walk)
    if cls.kind != "path" or not cls.proper:
        raise InputError("vertex_order requires a proper path")
    faces = walk.faces
    last: dict[int, int] = {}
    first: dict[int, int] = {}
    for i, f in enumerate(faces):
        for v in f:
            last[v] = i
            first.setdefault(v, i)
    start = sorted(faces[0], key=lambda v: last[v])
    rest = sorted((v for v in walk.vertex_union() if v not in set(faces[0])),
                  key=lambda v: first[v])
    return tuple(start + rest)


def split_cycle(cycle: FaceCycleCert | FaceWalk
                ) -> tuple[FacePathCert, FacePathCert]:
    """Split a cycle at its first disjoint face pair into two proper paths.

    The two arcs share only the vertices of the two split faces; this is
    asserted, not assumed.
    """
    cert = cycle if isinstance(cycle, FaceCycleCert) else FaceCycleCert.from_walk(cycle)
    faces = cert.walk.faces           # f_0 .. f_l with f_l = f_0
    ell = cert.walk.length
    cyc = faces[1:]                   # f_1 .. f_l, cyclic order
    pair = None
    for i, j in itertools.combinations(range(ell), 2):
        if not set(cyc[i]) & set(cyc[j]):
            pair = (i, j)
            break
    if pair is None:
        raise InputError("cycle has no disjoint face pair")
    i, j = pair
    arc1 = cyc[i:j + 1]
    arc2 = cyc[j:] + cyc[:i + 1]
    p1 = FacePathCert.from_walk(FaceWalk(cert.walk.r, tuple(arc1)))
    p2 = FacePathCert.from_walk(FaceWalk(cert.walk.r, tuple(arc2)))
    if not (p1.proper and p2.proper):
        raise AssertionError("split arcs are not proper paths")
    shared = p1.walk.vertex_union() & p2.walk.vertex_union()
    endpoints = set(cyc[i]) | set(cyc[j])
    if shared != frozenset(endpoints):
        raise AssertionError("split arcs share internal vertices")
    return p1, p2


# ---------------------------------------------------------------------------
# topology of 3-uniform cycle complexes
# ---------------------------------------------------------------------------

def _complex_triangles(obj: RGraph | FaceWalk | FaceCycleCert | Iterable) -> list[Face]:
    if isinstance(obj, FaceCycleCert):
        obj = obj.walk
    if isinstance(obj, FaceWalk):
        if obj.r != 3:
            raise InputError("surface classification is for r = 3 only")
        return sorted(set(obj.edges()))
    if isinstance(obj, RGraph):
        if obj.r != 3:
            raise InputError("surface classification is for r = 3 only")
        return list(obj.edges)
    tris = sorted({_canon_face(t) for t in obj})
    if any(len(t) != 3 for t in tris):
        raise InputError("triangles must be 3-sets")
    return tris


def euler_characteristic(obj) -> int:
    """e - p + v of the downward closure of a 3-uniform edge set."""
    tris = _complex_triangles(obj)
    pairs: set[Face] = set()
    verts: set[int] = set()
    for t in tris:
        verts.update(t)
        pairs.update(itertools.combinations(t, 2))
    return len(tris) - len(pairs) + len(verts)


def classify_surface(obj) -> str:
    """'cylinder' (orientable) or 'mobius' (non-orientable) for a valid
    3-uniform cycle complex, by orientation propagation across shared pairs.

    Raises on pairs shared by three or more triangles (not a surface).
    """
    tris = _complex_triangles(obj)
    by_pair: dict[Face, list[int]] = {}
    for idx, t in enumerate(tris):
        for pr in itertools.combinations(t, 2):
            by_pair.setdefault(pr, []).append(idx)
    for pr, owners in by_pair.items():
        if len(owners) > 2:
            raise InputError(f"1-face {pr} lies in {len(owners)} triangles")

    def direction(tri: Face, pair: Face, sign: int) -> int:
        # orientation +1 = cyclic (t0,t1,t2); the pair is traversed forward
        # (+1) or backward (-1) within that cyclic order.
        i, j = tri.index(pair[0]), tri.index(pair[1])
        forward = (j - i) % 3 == 1
        return sign if forward else -sign

    orient = {}
    for root in range(len(tris)):
        if root in orient:
            continue
        orient[root] = 1
        stack = [root]
        while stack:
            cur = stack.pop()
            for pr in itertools.combinations(tris[cur], 2):
                for other in by_pair[pr]:
                    if other == cur:
                        continue
                    # consistent orientations traverse the shared pair in
                    # opposite directions
                    need = -direction(tris[cur], pr, orient[cur])
                    implied = 1 if direction(tris[other], pr, 1) == need else -1
                    if other not in orient:
                        orient[other] = implied
                        stack.append(other)
                    elif orient[other] != implied:
                        return "mobius"
    return "cylinder"


def is_three_partite(obj) -> tuple[frozenset[int], ...] | None:
    """Exact search for a vertex 3-partition making every edge rainbow."""
    if isinstance(obj, (FaceWalk, FaceCycleCert)):
        walk = obj.walk if isinstance(obj, FaceCycleCert) else obj
        edges = sorted(set(walk.edges()))
        r = walk.r
    else:
        edges = list(obj.edges)
        r = obj.r
    if r != 3:
        raise InputError("three-partiteness check is for r = 3")
    verts = sorted({v for e in edges for v in e})
    incident: dict[int, list[Face]] = {v: [] for v in verts}
    for e in edges:
        for v in e:
            incident[v].append(e)
    color: dict[int, int] = {}

    def ok(v: int) -> bool:
        for e in incident[v]:
            assigned = [color[w] for w in e if w in color]
            if len(assigned) != len(set(assigned)):
                return False
        return True

    def solve(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        for cls in range(min(used + 1, 3)):
            color[v] = cls
            if ok(v) and solve(i + 1, max(used, cls + 1)):
                return True
            del color[v]
        return False

    if not solve(0, 0):
        return None
    parts = [set(), set(), set()]
    for v, cls in color.items():
        parts[cls].add(v)
    return tuple(frozenset(p) for p in parts)


# ---------------------------------------------------------------------------
# greedy tight paths and fan paths
# ---------------------------------------------------------------------------

def tight_path_greedy(g: RGraph, start: Sequence[int], length: int,
                      rng: random.Random | None = None) -> tuple[int, ...] | None:
    """Greedy tight path of ``length`` steps from an ordered starting face.

    Extends by the lowest-id admissible fresh vertex (or a random one when an
    rng is supplied, for randomized restarts).  Returns the vertex sequence of
    length ``length + r - 1`` or None when the greedy choice dead-ends.
    """
    if g.face_degree(start) == 0:
        raise InputError(f"start {tuple(start)} is not a face of the host")
    verts = list(start)
    used = set(verts)
    for _ in range(length):
        window = verts[-(g.r - 1):]
        cands = sorted(v for e in g.edges_containing_face(window)
                       for v in e if v not in used)
        if not cands:
            return None
        v = cands[0] if rng is None else rng.choice(cands)
        verts.append(v)
        used.add(v)
    return tuple(verts)


def _tight_faces(r: int, verts: Sequence[int]) -> list[Face]:
    return [_canon_face(verts[i:i + r - 1]) for i in range(len(verts) - r + 2)]


@dataclass(frozen=True)
class FanResult:
    faces: tuple[Face, ...]
    paths: dict[Face, FacePathCert] = field(repr=False)
    count_bound: int
    count_ok: bool
    degree_bound: float
    degree_ok: bool


def fan_paths(g: RGraph, f0: Collection[int], d: int) -> FanResult:
    """Fan of proper paths of length r-1 out of f0.

    Requires every face degree >= d > r.  Orders f0 as v_1 < ... < v_{r-1} and
    grows sequences y_1, ..., y_{r-1} where step i extends the face
    {v_{i+1},...,v_{r-1}, y_1,...,y_i}; exactly d - i fresh extensions (lowest
    ids) are kept per node, giving at least ceil((d/r)^(r-1)) distinct
    endpoint faces, each carrying one path, with no vertex lying in more than
    r * d^(r-2) of them.
    """
    r = g.r
    if d <= r:
        raise InputError(f"fan requires d > r, got d={d}, r={r}")
    if g.min_face_degree() < d:
        raise InputError(f"minimum face degree {g.min_face_degree()} below d={d}")
    base = _canon_face(f0)
    if g.face_degree(base) == 0:
        raise InputError(f"{base} is not a face of the host")

    sequences: list[tuple[int, ...]] = [()]
    for i in range(r - 1):
        nxt: list[tuple[int, ...]] = []
        for seq in sequences:
            face = base[i:] + seq        # {v_{i+1},..,v_{r-1}, y_1..y_i}
            banned = set(base[:i]) | set(seq) | set(face)
            cands = sorted(v for e in g.edges_containing_face(face)
                           for v in e if v not in banned)
            picked = []
            for v in cands:
                if v not in picked:
                    picked.append(v)
                if len(picked) == d - i:
                    break
            if len(picked) < d - i:
                raise AssertionError("fan ran out of extensions despite degree bound")
            nxt.extend(seq + (v,) for v in picked)
        sequences = nxt

    paths: dict[Face, FacePathCert] = {}
    for seq in sequences:
        endpoint = _canon_face(seq)
        if endpoint in paths:
            continue
        faces = [base[i:] + seq[:i] for i in range(r)]
        walk = FaceWalk(r, tuple(_canon_face(f) for f in faces))
        paths[endpoint] = FacePathCert.from_walk(walk)
    for cert in paths.values():
        if not cert.proper:
            raise AssertionError("fan produced a non-proper path")

    count_bound = -(-int((d / r) ** (r - 1) * 2 ** 52) // 2 ** 52)  # ceil, float-safe
    count_bound = max(count_bound, 1)
    deg_bound = r * d ** (r - 2)
    by_vertex: dict[int, int] = {}
    for f in paths:
        for v in f:
            by_vertex[v] = by_vertex.get(v, 0) + 1
    degree_ok = all(cnt <= deg_bound for cnt in by_vertex.values())
    return FanResult(
        faces=tuple(sorted(paths)),
        paths=paths,
        count_bound=count_bound,
        count_ok=len(paths) >= count_bound,
        degree_bound=deg_bound,
        degree_ok=degree_ok,
    )


# ---------------------------------------------------------------------------
# proper path with both endpoints in a face set
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathSearchResult:
    cert: FacePathCert | None
    case: str | None              # "single-face" or "double-face" edge pool
    hypothesis_ok: bool
    notes: tuple[str, ...] = ()


def _peel_to_face_degree(g: RGraph, threshold: float) -> RGraph | None:
    """Largest edge subset with every face degree >= threshold, or None."""
    current = g
    while current.num_edges():
        bad = {f for f in current.faces() if current.face_degree(f) < threshold}
        if not bad:
            return current
        kept = [e for e in current.edges
                if all(f not in bad
                       for f in itertools.combinations(e, g.r - 1))]
        if len(kept) == current.num_edges():
            return current
        current = RGraph(g.r, kept)
    return None


def path_between_face_set(g: RGraph, fs: Iterable[Collection[int]], ell: int,
                          seed: int = 0, retries: int = 32,
                          allow_short: bool = False) -> PathSearchResult:
    """Proper path of length ``ell`` with both endpoints in F.

    Splits the edges meeting F into those with exactly one face in F and
    those with at least two, works inside the larger pool after peeling it to
    minimum face degree ell, and converts a greedy tight path into the wanted
    path (single-face pool: walk out of an F-face and re-enter F on the last
    edge; double-face pool: reroot the first and last edges at F-faces).
    Requires ell > r; ``allow_short`` downgrades that to a flagged best-effort
    search (used by the cycle pipeline for its shortest middles).  The success
    guarantee additionally needs |F| >= 2 r ell p(G)/d.
    """
    fset = {_canon_face(f) for f in fs}
    if not fset:
        raise InputError("F is empty")
    if ell <= g.r and not allow_short:
        raise InputError(f"ell must exceed r (got ell={ell}, r={g.r})")
    notes: list[str] = []
    d_min = g.min_face_degree()
    hyp = d_min > 0 and len(fset) >= 2 * g.r * ell * g.num_faces() / d_min
    if ell <= g.r:
        hyp = False
        notes.append(f"ell={ell} <= r={g.r}: outside guarantee")

    e1 = [e for e in g.edges
          if sum(f in fset for f in itertools.combinations(e, g.r - 1)) == 1]
    e2 = [e for e in g.edges
          if sum(f in fset for f in itertools.combinations(e, g.r - 1)) >= 2]
    pools = sorted([("single-face", e1), ("double-face", e2)],
                   key=lambda t: len(t[1]), reverse=True)
    rng = random.Random(seed)
    for case, pool in pools:
        if not pool:
            continue
        h = _peel_to_face_degree(RGraph(g.r, pool), float(ell))
        if h is None or h.num_edges() == 0:
            notes.append(f"{case}: pool peeled away")
            continue
        cert = (_path_case_single(g, h, fset, ell, rng, retries)
                if case == "single-face"
                else _path_case_double(h, fset, ell, rng, retries))
        if cert is not None:
            ends = cert.endpoints()
            if not (ends[0] in fset and ends[1] in fset and cert.proper
                    and cert.length == ell and walk_in_host(g, cert.walk)):
                raise AssertionError("path construction produced bad certificate")
            return PathSearchResult(cert, case, hyp, tuple(notes))
        notes.append(f"{case}: greedy attempts failed")
    return PathSearchResult(None, None, hyp, tuple(notes))


def _path_case_single(g: RGraph, h: RGraph, fset: set[Face], ell: int,
                      rng: random.Random, retries: int) -> FacePathCert | None:
    """Pool edges have exactly one face in F.  Tight path of length ell-1
    from an F-face, then step off-F and re-enter F through the last edge."""
    starts = sorted(f for f in h.faces() if f in fset)
    for attempt in range(retries):
        use_rng = rng if attempt else None
        for f0 in starts:
            order = list(f0) if attempt == 0 else rng.sample(list(f0), len(f0))
            verts = tight_path_greedy(h, order, ell - 1,
                                      rng=use_rng)
            if verts is None:
                continue
            faces = _tight_faces(h.r, verts)
            last_edge = _canon_face(verts[-h.r:])
            f_pen = None
            for f in itertools.combinations(last_edge, h.r - 1):
                f = _canon_face(f)
                if f != faces[-2] and f not in fset:
                    f_pen = f
                    break
            if f_pen is None:
                continue
            used = set(verts)
            for e in sorted(h.edges_containing_face(f_pen)):
                w = next(iter(set(e) - set(f_pen)))
                if w in used:
                    continue
                f_last = next((x for x in
                               (_canon_face(c) for c in
                                itertools.combinations(e, h.r - 1))
                               if x in fset), None)
                if f_last is None or f_last == f_pen:
                    continue
                try:
                    walk = FaceWalk(h.r, tuple(faces[:-1] + [f_pen, f_last]))
                except InputError:
                    continue
                cls = classify_walk(walk)
                if cls.kind == "path" and cls.proper and walk.faces[0] in fset:
                    return FacePathCert(walk, True)
    return None


def _path_case_double(h: RGraph, fset: set[Face], ell: int,
                      rng: random.Random, retries: int) -> FacePathCert | None:
    """Pool edges have two or more faces in F.  Tight path of length ell,
    then replace the first and last faces by F-faces of the end edges."""
    starts = sorted(h.faces())
    for attempt in range(retries):
        use_rng = rng if attempt else None
        for f0 in starts:
            order = list(f0) if attempt == 0 else rng.sample(list(f0), len(f0))
            verts = tight_path_greedy(h, order, ell, rng=use_rng)
            if verts is None:
                continue
            faces = _tight_faces(h.r, verts)
            e_first = _canon_face(verts[:h.r])
            e_last = _canon_face(verts[-h.r:])
            first_opts = [f for f in
                          (_canon_face(c) for c in
                           itertools.combinations(e_first, h.r - 1))
                          if f in fset and f != faces[1]]
            last_opts = [f for f in
                         (_canon_face(c) for c in
                          itertools.combinations(e_last, h.r - 1))
                         if f in fset and f != faces[-2]]
            for fa in first_opts:
                for fb in last_opts:
                    try:
                        walk = FaceWalk(h.r, tuple([fa] + faces[1:-1] + [fb]))
                    except InputError:
                        continue
                    cls = classify_walk(walk)
                    if cls.kind == "path" and cls.proper:
                        return FacePathCert(walk, True)
    return None


# ---------------------------------------------------------------------------
# sampled face reach
# ---------------------------------------------------------------------------

@dataclass
class FaceReach:
    """Reach levels out of a root face.

    ``levels[i]`` maps each face first witnessed by a proper path of length
    exactly r-1+i (internals confined round-by-round to the sampled vertex
    sets) to one such witness.  ``cumulative(i)`` unions levels 0..i, so the
    sets grow monotonically; with empty rounds everything stays at level 0.
    """

    root: Face
    levels: list[dict[Face, FacePathCert]]

    def cumulative(self, i: int | None = None) -> set[Face]:
        hi = len(self.levels) if i is None else i + 1
        out: set[Face] = set()
        for lvl in self.levels[:hi]:
            out.update(lvl)
        return out


def sampled_reach_faces(g: RGraph, f0: Collection[int],
                        u_rounds: Sequence[Collection[int]], ell: int,
                        d: int | None = None) -> FaceReach:
    """Grow proper paths from f0: a fan to length r-1, then one conditional-
    neighborhood step per round, the step-i drop confined to u_rounds[i].

    ``ell`` is the target final path length (>= r-1); level i holds faces at
    length r-1+i.  Witness bookkeeping keeps every stored path proper and
    self-avoiding, mirroring the restricted neighborhood's forbidden map.
    """
    r = g.r
    if ell < r - 1:
        raise InputError(f"ell must be >= r-1 = {r - 1}")
    steps = ell - (r - 1)
    if len(u_rounds) < steps:
        raise InputError(f"need {steps} vertex rounds, got {len(u_rounds)}")
    if d is None:
        d = g.min_face_degree()
    fan = fan_paths(g, f0, d)
    levels: list[dict[Face, FacePathCert]] = [dict(fan.paths)]
    seen: set[Face] = set(fan.paths) | {_canon_face(f0)}
    for i in range(steps):
        uset = set(u_rounds[i])
        nxt: dict[Face, FacePathCert] = {}
        for face, cert in sorted(levels[-1].items()):
            path_vertices = cert.walk.vertex_union()
            for e in g.edges_containing_face(face):
                for f in itertools.combinations(e, r - 1):
                    f = _canon_face(f)
                    if f in seen or f in nxt:
                        continue
                    dropped = set(face) - set(f)
                    gained = set(f) - set(face)
                    if not dropped <= uset:
                        continue
                    if gained & path_vertices:
                        continue
                    walk = FaceWalk(r, cert.walk.faces + (f,))
                    cls = classify_walk(walk)
                    if cls.kind == "path" and cls.proper:
                        nxt[f] = FacePathCert(walk, True)
        seen.update(nxt)
        levels.append(nxt)
    return FaceReach(root=_canon_face(f0), levels=levels)


# ---------------------------------------------------------------------------
# cycle search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleSearchResult:
    status: str                   # found | none | indeterminate
    cert: FaceCycleCert | None
    mode: str
    notes: tuple[str, ...] = ()


def canonical_cycle_faces(faces: Sequence[Face]) -> tuple[Face, ...]:
    """Lexicographically minimal rotation/reflection of a closed face
    sequence f_0..f_l (= f_0); returned with the closure repeated."""
    cyc = [
        _canon_face(f) for f in
        (faces[:-1] if faces[0] == faces[-1] else faces)
    ]
    best = None
    for seq in (cyc, cyc[::-1]):
        for k in range(len(seq)):
            rot = tuple(seq[k:] + seq[:k])
            if best is None or rot < best:
                best = rot
    return best + (best[0],)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def find_face_cycle(g: RGraph, ell: int, mode: str = "exact", *,
                    alpha: float = 0.3, s: int = 3, threshold: int = 2,
                    retries: int = 32, seed: int = 0,
                    budget: int = 2_000_000,
                    extract: bool = True) -> CycleSearchResult:
    """Search for a cycle of length exactly ``ell``.

    Exact mode is a complete backtracking search (subset-restricted when the
    vertex count allows, global otherwise); exhausting ``budget`` yields an
    indeterminate result.  Pipeline mode mirrors the sampling proof: extract a
    density-maximal core, pick a root face, grow per-part arcs, find a middle
    path between well-connected partner faces, and assemble; it rejects
    ell < r + 2, where the assembly has no room.
    """
    if ell < 2:
        raise InputError("cycle length must be at least 2")
    if mode == "exact":
        return _find_cycle_exact(g, ell, budget)
    if mode == "pipeline":
        if ell < g.r + 2:
            raise InputError(f"pipeline mode needs ell >= r+2 = {g.r + 2}")
        return _find_cycle_pipeline(g, ell, alpha=alpha, s=s,
                                    threshold=threshold, retries=retries,
                                    seed=seed, extract=extract)
    raise InputError(f"unknown mode {mode!r}")


def _find_cycle_exact(g: RGraph, ell: int, budget: int) -> CycleSearchResult:
    if g.num_edges() == 0 or ell > g.num_vertices():
        return CycleSearchResult("none", None, "exact")
    nverts = g.num_vertices()
    try:
        if _comb_le(nverts, ell, 200_000):
            cert = _cycle_by_subsets(g, ell, _Budget(budget))
        else:
            cert = _cycle_by_dfs(g, ell, _Budget(budget))
    except _BudgetExceeded:
        return CycleSearchResult("indeterminate", None, "exact",
                                 ("node budget exhausted",))
    if cert is None:
        return CycleSearchResult("none", None, "exact")
    return CycleSearchResult("found", cert, "exact")


def _comb_le(n: int, k: int, limit: int) -> bool:
    import math
    if k > n:
        return True
    return math.comb(n, k) <= limit


class _BudgetExceeded(Exception):
    pass


def _cycle_by_subsets(g: RGraph, ell: int, budget: _Budget) -> FaceCycleCert | None:
    verts = sorted(g.vertices())
    edge_set = set(g.edges)
    for subset in itertools.combinations(verts, ell):
        if not budget.spend():
            raise _BudgetExceeded
        sset = set(subset)
        local_edges = [e for e in edge_set if set(e) <= sset]
        # two edges glued along a face already carry a length-4 cycle
        # (f, a, f', b, f with {f, a} and {f, b} the two edges), so the
        # cheapest viable subset has two local edges, not three
        if len(local_edges) < 2:
            continue
        sub = RGraph(g.r, local_edges)
        cert = _cycle_dfs_within(sub, ell, budget, require_union=sset)
        if cert is not None:
            return cert
    return None


def _cycle_by_dfs(g: RGraph, ell: int, budget: _Budget) -> FaceCycleCert | None:
    return _cycle_dfs_within(g, ell, budget, require_union=None)


def _cycle_dfs_within(g: RGraph, ell: int, budget: _Budget,
                      require_union: set[int] | None) -> FaceCycleCert | None:
    faces = sorted(g.faces())
    adjacency: dict[Face, list[Face]] = {f: [] for f in faces}
    for e in g.edges:
        fs = [_canon_face(c) for c in itertools.combinations(e, g.r - 1)]
        for a in fs:
            for b in fs:
                if a != b:
                    adjacency[a].append(b)
    for f in adjacency:
        adjacency[f] = sorted(set(adjacency[f]))

    for f0 in faces:
        # canonical form: f0 is the lexicographically least face of the cycle
        path = [f0]
        union = set(f0)

        def rec() -> FaceCycleCert | None:
            if not budget.spend():
                raise _BudgetExceeded
            depth = len(path)
            cur = path[-1]
            if depth == ell:
                if f0 not in adjacency[cur]:
                    return None
                if len(union) != ell:
                    return None
                if require_union is not None and union != require_union:
                    return None
                walk = FaceWalk(g.r, tuple(path + [f0]))
                cls = classify_walk(walk)
                if cls.kind == "cycle":
                    canon = canonical_cycle_faces(walk.faces)
                    return FaceCycleCert.from_walk(FaceWalk(g.r, canon))
                return None
            for nxt in adjacency[cur]:
                if nxt < f0 or nxt == cur:
                    continue
                new = set(nxt) - union
                if len(union) + len(new) > ell:
                    continue
                path.append(nxt)
                union.update(new)
                got = rec()
                if got is not None:
                    return got
                path.pop()
                for v in new:
                    union.discard(v)
            return None

        got = rec()
        if got is not None:
            return got
    return None


def _find_cycle_pipeline(g: RGraph, ell: int, *, alpha: float, s: int,
                         threshold: int, retries: int, seed: int,
                         extract: bool) -> CycleSearchResult:
    notes: list[str] = []
    host = g
    if extract:
        try:
            host, _score = alpha_max_rgraph(g, alpha, mode="auto")
        except InputError as exc:
            notes.append(f"extraction skipped: {exc}")
            host = g
    if host.num_edges() == 0:
        return CycleSearchResult("none", None, "pipeline", tuple(notes))
    r = host.r
    # Arc endpoints must avoid the root face's vertices (the middle path is
    # found in the host minus those), and each walk step swaps exactly one
    # vertex, so arcs need length at least r-1.
    ell0 = max(r - 1, (ell - r - 1) // 2)
    middle = ell - 2 * ell0
    if middle < 1:
        notes.append(f"no room: two arcs of length r-1 = {r - 1} need "
                     f"ell >= {2 * r - 1}")
        return CycleSearchResult("none", None, "pipeline", tuple(notes))
    if middle <= r:
        notes.append(f"middle length {middle} <= r: outside guarantee, "
                     "using direct search")
    verts = sorted(host.vertices())
    all_faces = sorted(host.faces())

    for attempt in range(retries):
        rng = random.Random((seed * 1_000_003 + attempt) & 0xFFFFFFFF)
        parts: list[set[int]] = [set() for _ in range(s)]
        for v in verts:
            parts[rng.randrange(s)].add(v)
        # mirror the proof: root faces are picked at random, a bounded
        # number per attempt, rather than sweeping every face of big hosts
        roots = (all_faces if len(all_faces) <= 16
                 else rng.sample(all_faces, 16))
        for f0 in roots:
            arcs = _collect_arcs(host, f0, ell0, parts, rng)
            good = {f: lst for f, lst in arcs.items()
                    if len({part for part, _ in lst}) >= min(threshold, s)
                    or ell0 <= r - 1}
            if len(good) < 2:
                continue
            rest = host.restrict_to_vertices(set(verts) - set(f0))
            fset = {f for f in good if rest.face_degree(f) > 0}
            if len(fset) < 2:
                continue
            for _mid_try in range(3):
                if middle > r:
                    found = path_between_face_set(rest, fset, middle,
                                                  seed=rng.randrange(2 ** 30),
                                                  retries=4, allow_short=True)
                    mid_cert = found.cert
                else:
                    mid_cert = _short_middle_path(rest, fset, middle, rng)
                if mid_cert is None:
                    break
                fa, fb = mid_cert.endpoints()
                cert = _assemble_cycle(host, f0, good[fa], mid_cert, good[fb])
                if cert is not None:
                    return CycleSearchResult("found", cert, "pipeline",
                                             tuple(notes))
    return CycleSearchResult("none", None, "pipeline", tuple(notes))


def _collect_arcs(host: RGraph, f0: Face, ell0: int, parts: list[set[int]],
                  rng: random.Random | None = None
                  ) -> dict[Face, list[tuple[int, FacePathCert]]]:
    """Arcs (proper paths) of length exactly ell0 out of f0, tagged by the
    vertex part that confined their internal drops."""
    r = host.r
    arcs: dict[Face, list[tuple[int, FacePathCert]]] = {}
    if ell0 == 1:
        for e in host.edges_containing_face(f0):
            for f in itertools.combinations(e, r - 1):
                f = _canon_face(f)
                if f == f0:
                    continue
                walk = FaceWalk(r, (f0, f))
                arcs.setdefault(f, []).append(
                    (0, FacePathCert(walk, not (set(f0) & set(f)))))
        return arcs
    steps = ell0 - (r - 1)
    if steps <= 0:
        # length r-1 arcs have no internals: part tag irrelevant.  Keep
        # several arcs per endpoint so assembly can dodge vertex clashes.
        for f, certs in _enumerate_arcs(host, f0, ell0).items():
            for cert in certs:
                arcs.setdefault(f, []).append((0, cert))
        return arcs
    for idx, part in enumerate(parts):
        for f, certs in _arc_dfs(host, f0, ell0, part, rng).items():
            for cert in certs:
                arcs.setdefault(f, []).append((idx, cert))
    return arcs


def _arc_dfs(host: RGraph, f0: Face, length: int, confine: set[int],
             rng: random.Random | None = None, cap_per_face: int = 8,
             budget: int = 6_000) -> dict[Face, list[FacePathCert]]:
    """Proper paths of length exactly ``length`` out of f0 by bounded
    depth-first search, grouped by endpoint face.  Steps past the first r-1
    may only drop vertices inside ``confine`` (the sampled part), mirroring
    the round-confined growth of the sampled reach.  Shuffled child order
    (when an rng is given) spreads the stored arcs over the host so the
    final assembly, which needs vertex-disjoint pieces, has real choices."""
    r = host.r
    out: dict[Face, list[FacePathCert]] = {}
    counter = [budget]

    def extend(faces: tuple[Face, ...], used: frozenset[int]) -> None:
        if counter[0] <= 0:
            return
        depth = len(faces) - 1
        if depth == length:
            walk = FaceWalk(r, faces)
            cls = classify_walk(walk)
            if cls.kind == "path" and cls.proper:
                lst = out.setdefault(faces[-1], [])
                if len(lst) < cap_per_face:
                    lst.append(FacePathCert(walk, True))
            return
        last = faces[-1]
        children = []
        for e in sorted(host.edges_containing_face(last)):
            for f in sorted(_canon_face(c)
                            for c in itertools.combinations(e, r - 1)):
                if f == last or f in faces:
                    continue
                gained = set(f) - set(last)
                if gained & used:
                    continue
                if depth >= r - 1:
                    dropped = set(last) - set(f)
                    if not dropped <= confine:
                        continue
                children.append((f, gained))
        if rng is not None:
            rng.shuffle(children)
        for f, gained in children:
            counter[0] -= 1
            if counter[0] <= 0:
                return
            extend(faces + (f,), used | gained)

    f0 = _canon_face(f0)
    extend((f0,), frozenset(f0))
    return out


def _enumerate_arcs(host: RGraph, f0: Face, length: int,
                    cap_per_face: int = 8,
                    budget: int = 200_000) -> dict[Face, list[FacePathCert]]:
    """Every proper path of length exactly ``length`` out of f0, grouped by
    endpoint face; capped per endpoint and by total expansions."""
    r = host.r
    out: dict[Face, list[FacePathCert]] = {}
    counter = [budget]

    def extend(faces: tuple[Face, ...]) -> None:
        if counter[0] <= 0:
            return
        if len(faces) == length + 1:
            walk = FaceWalk(r, faces)
            cls = classify_walk(walk)
            if cls.kind == "path" and cls.proper:
                lst = out.setdefault(faces[-1], [])
                if len(lst) < cap_per_face:
                    lst.append(FacePathCert(walk, True))
            return
        last = faces[-1]
        for e in sorted(host.edges_containing_face(last)):
            for f in sorted(_canon_face(c)
                            for c in itertools.combinations(e, r - 1)):
                if f == last or f in faces:
                    continue
                counter[0] -= 1
                if counter[0] <= 0:
                    return
                extend(faces + (f,))

    extend((_canon_face(f0),))
    return out


def _short_middle_path(h: RGraph, fset: set[Face], ell: int,
                       rng: random.Random,
                       budget: int = 100_000) -> FacePathCert | None:
    """Bounded depth-first search for a path of length ``ell`` with both
    endpoints in F; used for middles at or below r, where the tight-path
    machinery has no guarantee.  Endpoints of a path shorter than r-1
    necessarily intersect, so properness is only required above that; the
    assembled cycle's span check does the final validation either way."""
    counter = [budget]

    def extend(faces: tuple[Face, ...]) -> FacePathCert | None:
        if counter[0] <= 0:
            return None
        if len(faces) == ell + 1:
            if faces[-1] not in fset:
                return None
            walk = FaceWalk(h.r, faces)
            cls = classify_walk(walk)
            if cls.kind == "path" and (cls.proper or ell < h.r - 1):
                return FacePathCert(walk, bool(cls.proper))
            return None
        last = faces[-1]
        for e in sorted(h.edges_containing_face(last)):
            for f in sorted(_canon_face(c)
                            for c in itertools.combinations(e, h.r - 1)):
                if f == last or f in faces:
                    continue
                counter[0] -= 1
                if counter[0] <= 0:
                    return None
                got = extend(faces + (f,))
                if got is not None:
                    return got
        return None

    starts = sorted(fset)
    rng.shuffle(starts)
    for fa in starts:
        found = extend((fa,))
        if found is not None:
            return found
        if counter[0] <= 0:
            break
    return None


def _assemble_cycle(host: RGraph, f0: Face,
                    arcs_a: list[tuple[int, FacePathCert]],
                    middle: FacePathCert,
                    arcs_b: list[tuple[int, FacePathCert]]
                    ) -> FaceCycleCert | None:
    mid_faces = middle.faces
    for part_a, wa in sorted(arcs_a, key=lambda t: (t[0], t[1].faces)):
        for part_b, wb in sorted(arcs_b, key=lambda t: (t[0], t[1].faces)):
            if wa.faces[-1] != mid_faces[0] or wb.faces[-1] != mid_faces[-1]:
                continue
            faces = (list(wa.faces) + list(mid_faces[1:])
                     + list(reversed(wb.faces))[1:])
            try:
                walk = FaceWalk(host.r, tuple(faces))
            except InputError:
                continue
            cls = classify_walk(walk)
            if cls.kind != "cycle" or not walk_in_host(host, walk):
                continue
            canon = canonical_cycle_faces(walk.faces)
            return FaceCycleCert.from_walk(FaceWalk(host.r, canon))
    return None


# ---------------------------------------------------------------------------
# certificate documents
# ---------------------------------------------------------------------------

FORMAT_VERSION = 1


def cycle_to_document(cert: FaceCycleCert, host: RGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "face_cycle",
        "r": cert.walk.r,
        "faces": [list(f) for f in cert.walk.faces],
        "host_digest": rgraph_digest(host),
    }


def cycle_from_document(doc: Mapping, host: RGraph | None = None) -> FaceCycleCert:
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {doc.get('format_version')!r}")
    if doc.get("kind") != "face_cycle":
        raise InputError(f"expected face_cycle document, got {doc.get('kind')!r}")
    walk = FaceWalk(int(doc["r"]), tuple(tuple(f) for f in doc["faces"]))
    cert = FaceCycleCert.from_walk(walk)
    if host is not None:
        if doc.get("host_digest") != rgraph_digest(host):
            raise InputError("certificate host digest mismatch")
        if not walk_in_host(host, walk):
            raise InputError("certificate walk not contained in host")
    return cert
