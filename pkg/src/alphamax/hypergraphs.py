"""r-uniform hypergraphs viewed through their (r-1)-faces.

For an r-graph G, P(G) is the set of (r-1)-subsets of edges ("faces"),
p(G) = |P(G)|, and d(G) = r * e(G) / p(G) is the average face degree.
Subhypergraph means edge subset.  For 0 < alpha < 1/(r-1), G is alpha-maximal
when d(G)/p(G)^alpha >= d(H)/p(H)^alpha for every nonempty edge subset H.

Nonempty alpha-maximal r-graphs satisfy

  (i)   c = d(G)/p(G)^alpha >= r^(-alpha) > 1/2,
  (ii)  every face has degree >= d(G)/r,
  (iii) face sets X with |X| <= (1/2r)^((1+alpha)/alpha) * p(G) expand:
        |N(X)| >= (|X|/2r) * (p(G)/|X|)^(alpha/(1+alpha)).

Faces are canonicalized as sorted vertex tuples throughout.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Collection, Iterable, Mapping

from .graphs import InputError

__all__ = [
    "RGraph",
    "Face",
    "face_neighborhood",
    "conditional_neighborhood",
    "mindeg_subhypergraph",
    "vertex_face_degree_check",
    "shadow_bound_check",
    "alpha_max_rgraph",
    "verify_hypmax",
    "EXACT_EDGE_CAP",
    "load_hyperedge_list",
    "save_hyperedge_list",
    "rgraph_to_document",
    "rgraph_from_document",
    "rgraph_digest",
    "HypmaxVerdict",
    "ShadowReport",
    "real_binomial",
]

Face = tuple[int, ...]

EXACT_EDGE_CAP = 20


def _canon_face(vs: Iterable[int]) -> Face:
    return tuple(sorted(vs))


class RGraph:
    """Uniform hypergraph; edges are r-sets of nonnegative vertex ids."""

    __slots__ = ("r", "edges", "_faces", "_face_deg", "_vertices")

    def __init__(self, r: int, edges: Iterable[Collection[int]]):
        if r < 2:
            raise InputError(f"uniformity r must be >= 2, got {r}")
        self.r = r
        canon: set[Face] = set()
        for e in edges:
            t = _canon_face(e)
            if len(set(t)) != r:
                raise InputError(f"edge {t} is not an r-set for r={r}")
            if any(v < 0 for v in t):
                raise InputError(f"negative vertex id in edge {t}")
            canon.add(t)
        self.edges: tuple[Face, ...] = tuple(sorted(canon))
        face_deg: dict[Face, int] = {}
        for e in self.edges:
            for f in itertools.combinations(e, r - 1):
                face_deg[f] = face_deg.get(f, 0) + 1
        self._face_deg = face_deg
        self._faces: tuple[Face, ...] = tuple(sorted(face_deg))
        vs: set[int] = set()
        for e in self.edges:
            vs.update(e)
        self._vertices = frozenset(vs)

    # -- counts ------------------------------------------------------------

    def num_edges(self) -> int:
        return len(self.edges)

    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def num_faces(self) -> int:
        return len(self._faces)

    def vertices(self) -> frozenset[int]:
        return self._vertices

    def num_vertices(self) -> int:
        return len(self._vertices)

    def average_face_degree(self) -> float:
        """d(G) = r e(G) / p(G)."""
        if not self._faces:
            return 0.0
        return self.r * len(self.edges) / len(self._faces)

    def face_degree(self, f: Collection[int]) -> int:
        return self._face_deg.get(_canon_face(f), 0)

    def min_face_degree(self) -> int:
        return min(self._face_deg.values()) if self._face_deg else 0

    def vertex_face_degree(self, v: int) -> int:
        """Number of faces of P(G) containing v."""
        return sum(1 for f in self._faces if v in f)

    def has_edge(self, e: Collection[int]) -> bool:
        return _canon_face(e) in set(self.edges) if len(set(e)) == self.r else False

    def edges_containing_face(self, f: Collection[int]) -> list[Face]:
        fc = set(f)
        return [e for e in self.edges if fc <= set(e)]

    def restrict_to_vertices(self, vs: Iterable[int]) -> "RGraph":
        """Edge subset induced by a vertex set (edges fully inside vs)."""
        keep = set(vs)
        return RGraph(self.r, [e for e in self.edges if set(e) <= keep])

    def induced_on_faces(self, xs: Iterable[Collection[int]]) -> "RGraph":
        """G[X]: edges whose every (r-1)-subset lies in the face set X."""
        xset = {_canon_face(f) for f in xs}
        kept = [e for e in self.edges
                if all(f in xset for f in itertools.combinations(e, self.r - 1))]
        return RGraph(self.r, kept)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RGraph)
                and self.r == other.r and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.r, self.edges))

    def __repr__(self) -> str:
        return (f"RGraph(r={self.r}, e={len(self.edges)}, "
                f"p={len(self._faces)})")


# ---------------------------------------------------------------------------
# neighborhoods
# ---------------------------------------------------------------------------

def face_neighborhood(g: RGraph, xs: Iterable[Collection[int]]) -> set[Face]:
    """N(X): faces f outside X with f ∪ f' an edge for some f' in X."""
    xset = {_canon_face(f) for f in xs}
    out: set[Face] = set()
    for fp in xset:
        for e in g.edges_containing_face(fp):
            for f in itertools.combinations(e, g.r - 1):
                if f != fp and f not in xset:
                    out.add(f)
    return out


def conditional_neighborhood(g: RGraph, xs: Iterable[Collection[int]],
                             us: Iterable[int],
                             phi: Mapping[Face, Collection[int]] | None = None
                             ) -> set[Face]:
    """N_phi(X, U): like N(X) but the vertex dropped from f' must lie in U,
    and the vertex gained must avoid phi(f').

    With U = all vertices and phi empty this equals ``face_neighborhood``.
    """
    xset = {_canon_face(f) for f in xs}
    uset = set(us)
    out: set[Face] = set()
    for fp in xset:
        forb = set(phi.get(fp, ())) if phi is not None else set()
        fp_set = set(fp)
        for e in g.edges_containing_face(fp):
            for f in itertools.combinations(e, g.r - 1):
                if f == fp or f in xset or f in out:
                    continue
                dropped = fp_set - set(f)     # exactly one vertex
                gained = set(f) - fp_set      # exactly one vertex
                if dropped <= uset and not (gained & forb):
                    out.add(f)
    return out


# ---------------------------------------------------------------------------
# cleaning and degree lemmas
# ---------------------------------------------------------------------------

def mindeg_subhypergraph(g: RGraph) -> RGraph:
    """Largest edge subset whose every face has degree >= d(G)/r.

    Peels edges through under-threshold faces; the fixpoint is nonempty
    whenever G is (a denser subhypergraph always survives the peel).
    """
    if not g.edges:
        return g
    threshold = g.average_face_degree() / g.r
    current = g
    while True:
        bad = [f for f in current.faces() if current.face_degree(f) < threshold]
        if not bad:
            break
        badset = set(bad)
        kept = [e for e in current.edges
                if all(f not in badset
                       for f in itertools.combinations(e, g.r - 1))]
        nxt = RGraph(g.r, kept)
        if nxt.num_edges() == current.num_edges():
            break
        current = nxt
    assert current.num_edges() > 0, "mindeg peel emptied the hypergraph"
    return current


@dataclass(frozen=True)
class DegreeCheckReport:
    ok: bool
    bound: float
    worst_vertex: int | None
    worst_value: int
    precondition_ok: bool


def vertex_face_degree_check(g: RGraph, d: float) -> DegreeCheckReport:
    """If every face degree >= d, then no vertex lies in more than
    r * p(G) / d faces.  Reports the worst vertex and slack."""
    if d <= 0:
        raise InputError("d must be positive")
    pre = all(g.face_degree(f) >= d for f in g.faces())
    bound = g.r * g.num_faces() / d
    worst_v, worst = None, 0
    for v in sorted(g.vertices()):
        fd = g.vertex_face_degree(v)
        if fd > worst:
            worst_v, worst = v, fd
    ok = (worst <= bound + 1e-9) if pre else True
    return DegreeCheckReport(ok=ok, bound=bound, worst_vertex=worst_v,
                             worst_value=worst, precondition_ok=pre)


def real_binomial(x: float, r: int) -> float:
    """binom(x, r) = x (x-1) ... (x-r+1) / r! for real x."""
    num = 1.0
    for i in range(r):
        num *= (x - i)
    return num / math.factorial(r)


@dataclass(frozen=True)
class ShadowReport:
    ok: bool
    x: float
    degree_bound: float
    average_degree: float


def shadow_bound_check(g: RGraph, tol: float = 1e-6) -> ShadowReport:
    """Shadow bound: writing e(G) = binom(x, r) with real x >= r, the number
    of faces is at least binom(x, r-1), hence d(G) <= x - r + 1.

    x is found by bisection to 1e-9 and the final comparison allows ``tol``.
    """
    e = g.num_edges()
    if e == 0:
        return ShadowReport(True, float(g.r), 1.0, 0.0)
    r = g.r
    lo, hi = float(r), float(r)
    while real_binomial(hi, r) < e:
        hi *= 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if real_binomial(mid, r) < e:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-9:
            break
    x = (lo + hi) / 2.0
    bound = x - r + 1.0
    d = g.average_face_degree()
    return ShadowReport(ok=d <= bound + tol, x=x, degree_bound=bound,
                        average_degree=d)


# ---------------------------------------------------------------------------
# alpha-maximal extraction over edge subsets
# ---------------------------------------------------------------------------

def _check_alpha_r(alpha: float, r: int) -> None:
    if not (0.0 < alpha < 1.0 / (r - 1)):
        raise InputError(f"alpha must lie in (0, 1/(r-1)) = (0, {1.0/(r-1):.4g}) "
                         f"for r={r}, got {alpha}")


def _score(r: int, ne: int, np_: int, alpha: float) -> float:
    """d(H)/p(H)^alpha = r * e / p^(1+alpha)."""
    if ne == 0 or np_ == 0:
        return 0.0
    return r * ne / np_ ** (1.0 + alpha)


def alpha_max_rgraph(g: RGraph, alpha: float, mode: str = "auto",
                     cap: int = EXACT_EDGE_CAP) -> tuple[RGraph, float]:
    """Edge subset maximizing d(H)/p(H)^alpha.

    Exact mode walks all subsets in Gray-code order, maintaining face
    multiplicities incrementally (cap ``cap`` edges).  Peel mode greedily
    removes the edge whose removal best improves the score, tracking the best
    prefix.  Ties prefer fewer edges, then the lexicographically least edge
    set.  Returns (subhypergraph, score).
    """
    _check_alpha_r(alpha, g.r)
    m = g.num_edges()
    if m == 0:
        return g, 0.0
    if mode == "auto":
        mode = "exact" if m <= cap else "peel"
    if mode == "exact":
        if m > cap:
            raise InputError(f"{m} edges exceeds exact cap {cap}; use peel mode")
        return _alpha_max_rgraph_exact(g, alpha)
    if mode == "peel":
        return _alpha_max_rgraph_peel(g, alpha)
    raise InputError(f"unknown mode {mode!r}")


def _alpha_max_rgraph_exact(g: RGraph, alpha: float) -> tuple[RGraph, float]:
    m = g.num_edges()
    edge_faces = [tuple(itertools.combinations(e, g.r - 1)) for e in g.edges]
    face_count: dict[Face, int] = {}
    nfaces = 0
    in_set = [False] * m
    nedges = 0
    best_score = -1.0
    best_mask = 0
    best_key: tuple[int, tuple[int, ...]] | None = None
    mask = 0
    # Gray-code walk: subset k is k ^ (k >> 1); step k toggles one edge.
    for k in range(1, 1 << m):
        bit = ((k ^ (k >> 1)) ^ ((k - 1) ^ ((k - 1) >> 1))).bit_length() - 1
        mask ^= 1 << bit
        if in_set[bit]:
            in_set[bit] = False
            nedges -= 1
            for f in edge_faces[bit]:
                face_count[f] -= 1
                if face_count[f] == 0:
                    nfaces -= 1
        else:
            in_set[bit] = True
            nedges += 1
            for f in edge_faces[bit]:
                c = face_count.get(f, 0)
                face_count[f] = c + 1
                if c == 0:
                    nfaces += 1
        if nedges == 0:
            continue
        sc = _score(g.r, nedges, nfaces, alpha)
        if sc > best_score:
            best_score, best_mask, best_key = sc, mask, None
        elif sc == best_score:
            if best_key is None:
                best_key = (best_mask.bit_count(),
                            tuple(i for i in range(m) if best_mask >> i & 1))
            key = (nedges, tuple(i for i in range(m) if mask >> i & 1))
            if key < best_key:
                best_mask, best_key = mask, key
    chosen = [g.edges[i] for i in range(m) if best_mask >> i & 1]
    return RGraph(g.r, chosen), best_score


def _alpha_max_rgraph_peel(g: RGraph, alpha: float) -> tuple[RGraph, float]:
    edges = list(g.edges)                    # canonical sorted order
    m = len(edges)
    edge_faces = [tuple(itertools.combinations(e, g.r - 1)) for e in edges]
    face_count: dict[Face, int] = {}
    owners: dict[Face, set[int]] = {}
    for i, fs in enumerate(edge_faces):
        for f in fs:
            face_count[f] = face_count.get(f, 0) + 1
            owners.setdefault(f, set()).add(i)
    nfaces = len(face_count)
    alive = set(range(m))
    # uniq[i] = faces only edge i still covers; removing i loses exactly them
    uniq = [sum(1 for f in edge_faces[i] if face_count[f] == 1)
            for i in range(m)]

    best_live = frozenset(alive)
    best_score = _score(g.r, m, nfaces, alpha)
    best_key = (m, tuple(range(m)))
    while len(alive) > 1:
        pick = -1
        pick_sc = -1.0
        for i in sorted(alive):              # lowest edge wins score ties
            sc = _score(g.r, len(alive) - 1, nfaces - uniq[i], alpha)
            if sc > pick_sc:
                pick, pick_sc = i, sc
        alive.remove(pick)
        for f in edge_faces[pick]:
            owners[f].discard(pick)
            face_count[f] -= 1
            if face_count[f] == 0:
                nfaces -= 1
            elif face_count[f] == 1:
                (j,) = owners[f]
                uniq[j] += 1
        key = (len(alive), tuple(sorted(alive)))
        if pick_sc > best_score or (pick_sc == best_score and key < best_key):
            best_score, best_key = pick_sc, key
            best_live = frozenset(alive)
    chosen = [edges[i] for i in sorted(best_live)]
    return RGraph(g.r, chosen), best_score


@dataclass(frozen=True)
class HypmaxVerdict:
    ok: bool
    c_ok: bool
    degree_ok: bool
    expansion_ok: bool
    c: float
    expansion_threshold: float
    checked_sets: int
    failures: tuple[str, ...]


def verify_hypmax(g: RGraph, alpha: float, mode: str = "auto",
                  samples: int = 200, seed: int = 0) -> HypmaxVerdict:
    """Check properties (i)-(iii) of a (presumed alpha-maximal) r-graph.

    The expansion clause (iii) only constrains face sets below the tiny
    threshold (1/2r)^((1+alpha)/alpha) * p(G); these are enumerated when p(G)
    allows, sampled otherwise, and the clause passes vacuously when the
    threshold sits below 1.
    """
    _check_alpha_r(alpha, g.r)
    failures: list[str] = []
    if g.num_edges() == 0:
        return HypmaxVerdict(True, True, True, True, 0.0, 0.0, 0, ())
    p = g.num_faces()
    d = g.average_face_degree()
    c = d / p ** alpha
    c_ok = c > 0.5
    if not c_ok:
        failures.append(f"c={c:.6f} <= 1/2")
    thresh_deg = d / g.r
    degree_ok = all(g.face_degree(f) >= thresh_deg - 1e-12 for f in g.faces())
    if not degree_ok:
        failures.append("face below d(G)/r")

    limit = (1.0 / (2 * g.r)) ** ((1 + alpha) / alpha) * p
    expansion_ok = True
    checked = 0
    max_size = int(math.floor(limit + 1e-12))
    if max_size >= 1:
        faces = g.faces()
        def check(xs: tuple[Face, ...]) -> bool:
            nx = face_neighborhood(g, xs)
            need = (len(xs) / (2 * g.r)) * (p / len(xs)) ** (alpha / (1 + alpha))
            return len(nx) >= need - 1e-9
        if mode in ("auto", "exact") and sum(
                math.comb(p, k) for k in range(1, max_size + 1)) <= 200000:
            for k in range(1, max_size + 1):
                for xs in itertools.combinations(faces, k):
                    checked += 1
                    if not check(xs):
                        expansion_ok = False
                        failures.append(f"expansion fails at X={xs}")
                        break
                if not expansion_ok:
                    break
        else:
            rng = random.Random(seed)
            for _ in range(samples):
                k = rng.randint(1, max_size)
                xs = tuple(sorted(rng.sample(faces, k)))
                checked += 1
                if not check(xs):
                    expansion_ok = False
                    failures.append(f"expansion fails at X={xs}")
                    break
    ok = c_ok and degree_ok and expansion_ok
    return HypmaxVerdict(ok, c_ok, degree_ok, expansion_ok, c, limit,
                         checked, tuple(failures))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

FORMAT_VERSION = 1


def load_hyperedge_list(text: str) -> tuple[RGraph, dict[str, int]]:
    """One edge per line, space-separated vertex labels; '#' comments.

    Labels remap to dense ids (numeric labels sort numerically); the mapping
    is returned.  All lines must have the same arity.
    """
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise InputError(f"line {lineno}: edge needs >= 2 vertices")
        rows.append(parts)
    if not rows:
        raise InputError("no edges in hyperedge list")
    arities = {len(r) for r in rows}
    if len(arities) != 1:
        raise InputError(f"mixed edge arities {sorted(arities)}")
    r = arities.pop()
    labels = sorted({tok for row in rows for tok in row}, key=_label_key)
    mapping = {lab: i for i, lab in enumerate(labels)}
    return RGraph(r, [[mapping[t] for t in row] for row in rows]), mapping


def _label_key(tok: str):
    try:
        return (0, int(tok), "")
    except ValueError:
        return (1, 0, tok)


def save_hyperedge_list(g: RGraph) -> str:
    lines = [f"# r: {g.r}"]
    lines += [" ".join(str(v) for v in e) for e in g.edges]
    return "\n".join(lines) + "\n"


def rgraph_to_document(g: RGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "rgraph",
        "r": g.r,
        "edges": [list(e) for e in g.edges],
    }


def rgraph_from_document(doc: Mapping) -> RGraph:
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {doc.get('format_version')!r}")
    if doc.get("kind") != "rgraph":
        raise InputError(f"expected rgraph document, got {doc.get('kind')!r}")
    return RGraph(int(doc["r"]), [tuple(e) for e in doc["edges"]])


def rgraph_digest(g: RGraph) -> str:
    import hashlib
    import json
    blob = json.dumps(rgraph_to_document(g), sort_keys=True,
                      separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()
