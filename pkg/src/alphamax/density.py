"""Density-maximal subgraph extraction.

For 0 < alpha < 1 a graph H is scored by e(H) / v(H)^(1+alpha); equivalently
by c where d(H) = c * v(H)^alpha (so c = 2 * score).  A graph is alpha-maximal
when no subgraph beats its score.  Since adding edges on a fixed vertex set
only helps, the maximizer over vertex subsets is always induced, so subset
enumeration over vertex sets is exhaustive verification.

Nonempty alpha-maximal graphs enjoy, for 0 < alpha < 1/2 and any X with
|X| <= n/2 (Y = V minus X):

  (i)   c >= 2^(-alpha) > 1/2,
  (ii)  min degree >= d(G)/2,
  (iii) e(X, N(X)) >= (c/4) n^alpha |X| (1 + alpha - (|X|/|Y|)^alpha),
  (iv)  |N(X)| >  |X| ((1 + alpha/2) (|Y|/|X|)^(alpha/(1+alpha)) - 1).

``check_expansion_bounds`` evaluates (iii) and (iv) with slacks; the
acceptance suite sweeps them exhaustively over small graphs.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass

from .graphs import InputError, SimpleGraph

__all__ = [
    "DensityScore",
    "SizeCapExceeded",
    "EXACT_VERTEX_CAP",
    "SCORE_REL_TOL",
    "alpha_max_subgraph_exact",
    "alpha_max_subgraph_peel",
    "verify_alpha_maximal",
    "check_expansion_bounds",
    "MaximalityVerdict",
    "ExpansionReport",
]

EXACT_VERTEX_CAP = 24

# Relative tolerance for float score comparisons.  Scores of different
# (e, v) pairs can coincide mathematically while their float evaluations
# differ in the last ulp; comparisons that decide pass/fail allow this slack.
SCORE_REL_TOL = 1e-9


class SizeCapExceeded(InputError):
    """Exact enumeration refused; use peel mode instead."""


def _check_alpha(alpha: float) -> None:
    if not (0.0 < alpha < 1.0):
        raise InputError(f"alpha must lie in (0,1), got {alpha}")


@dataclass(frozen=True)
class DensityScore:
    """Score record for a vertex set: score = e/v^(1+alpha), c = d/v^alpha."""

    alpha: float
    nvertices: int
    nedges: int

    @property
    def score(self) -> float:
        if self.nvertices == 0:
            return 0.0
        return self.nedges / self.nvertices ** (1.0 + self.alpha)

    @property
    def c(self) -> float:
        # d(H) = c * v^alpha  and  d = 2e/v  give  c = 2 * score.
        return 2.0 * self.score

    @property
    def average_degree(self) -> float:
        return 2.0 * self.nedges / self.nvertices if self.nvertices else 0.0


def _subset_edge_counts(g: SimpleGraph) -> array:
    """e(S) for every subset mask S, by one-bit dynamic programming.

    e(S) = e(S without its lowest vertex v) + |N(v) & (S minus v)|.
    """
    n = g.n
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    counts = array("i", bytes(4 * (1 << n)))
    for s in range(1, 1 << n):
        v = (s & -s).bit_length() - 1
        rest = s ^ (1 << v)
        counts[s] = counts[rest] + (masks[v] & rest).bit_count()
    return counts


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _better(score_a: float, key_a, score_b: float, key_b) -> bool:
    """True if (score_a, key_a) beats (score_b, key_b) under the tie rules:
    higher score, then fewer vertices, then lexicographically least set."""
    if score_a != score_b:
        return score_a > score_b
    return key_a < key_b


def alpha_max_subgraph_exact(g: SimpleGraph, alpha: float,
                             cap: int = EXACT_VERTEX_CAP
                             ) -> tuple[frozenset[int], DensityScore]:
    """Best-scoring nonempty vertex subset by full enumeration.

    Ties break toward the smallest subset, then lexicographically least.
    Refuses graphs above ``cap`` vertices (peel mode handles those).
    """
    _check_alpha(alpha)
    if g.n == 0:
        return frozenset(), DensityScore(alpha, 0, 0)
    if g.n > cap:
        raise SizeCapExceeded(
            f"{g.n} vertices exceeds exact cap {cap}; use alpha_max_subgraph_peel")
    counts = _subset_edge_counts(g)
    best_mask = 1
    best_score = 0.0
    best_key = (1, (0,))
    pow_cache = [0.0] + [k ** (1.0 + alpha) for k in range(1, g.n + 1)]
    for s in range(1, 1 << g.n):
        k = s.bit_count()
        sc = counts[s] / pow_cache[k]
        if sc > best_score:
            best_mask, best_score, best_key = s, sc, None
        elif sc == best_score:
            if best_key is None:
                best_key = (best_mask.bit_count(), _mask_vertices(best_mask))
            key = (k, _mask_vertices(s))
            if key < best_key:
                best_mask, best_key = s, key
    vs = _mask_vertices(best_mask)
    return frozenset(vs), DensityScore(alpha, len(vs), counts[best_mask])


PEEL_LOAD_ROUNDS = 32
PEEL_SWAP_CAP = 512          # full swap polish only below this vertex count
PEEL_POLISH_TOP = 6          # candidates that get the expensive swap polish


def _peel_records(g: SimpleGraph, alpha: float,
                  key) -> tuple[list[tuple[frozenset[int], int]], list[int]]:
    """One peeling pass: repeatedly delete the vertex minimizing ``key(v,
    degree)``.  Returns every record-breaking suffix of the deletion order
    (score strictly above all larger suffixes) plus each vertex's degree at
    the moment it was removed."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    edges_left = g.num_edges()
    records = [(frozenset(alive), edges_left)]
    best_score = DensityScore(alpha, g.n, edges_left).score
    removal = [0] * g.n
    while alive:
        v = min(alive, key=lambda u: key(u, deg[u]))
        removal[v] = deg[v]
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                edges_left -= 1
        if alive:
            sc = DensityScore(alpha, len(alive), edges_left).score
            if sc > best_score:
                best_score = sc
                records.append((frozenset(alive), edges_left))
    return records, removal


def _polish(g: SimpleGraph, alpha: float, start: frozenset[int],
            start_e: int, swaps: bool) -> tuple[frozenset[int], int]:
    """Hill-climb with single-vertex additions/removals plus optional
    add+remove swaps; strict improvements only, so it terminates."""
    cur = set(start)
    cur_e = start_e
    while True:
        cur_score = DensityScore(alpha, len(cur), cur_e).score
        in_deg = {v: sum(1 for w in g.neighbors(v) if w in cur)
                  for v in range(g.n)}
        best_move = None   # (score, new_set_size_change, payload)
        if len(cur) > 1:
            for v in sorted(cur):
                ne = cur_e - in_deg[v]
                sc = DensityScore(alpha, len(cur) - 1, ne).score
                if sc > cur_score and (best_move is None
                                       or sc > best_move[0]):
                    best_move = (sc, ("del", v), ne)
        for v in sorted(set(range(g.n)) - cur):
            ne = cur_e + in_deg[v]
            sc = DensityScore(alpha, len(cur) + 1, ne).score
            if sc > cur_score and (best_move is None or sc > best_move[0]):
                best_move = (sc, ("add", v), ne)
        if swaps and len(cur) > 1:
            outside = sorted(set(range(g.n)) - cur)
            for v in sorted(cur):
                base_e = cur_e - in_deg[v]
                for u in outside:
                    ne = base_e + in_deg[u] - (1 if g.has_edge(u, v) else 0)
                    sc = DensityScore(alpha, len(cur), ne).score
                    if sc > cur_score and (best_move is None
                                           or sc > best_move[0]):
                        best_move = (sc, ("swap", v, u), ne)
        if best_move is None:
            return frozenset(cur), cur_e
        _, move, cur_e = best_move
        if move[0] == "del":
            cur.remove(move[1])
        elif move[0] == "add":
            cur.add(move[1])
        else:
            cur.remove(move[1])
            cur.add(move[2])


def alpha_max_subgraph_peel(g: SimpleGraph, alpha: float
                            ) -> tuple[frozenset[int], DensityScore]:
    """Heuristic extractor: several peeling strategies plus local search.

    Candidate sets come from (a) a min-degree peel, (b) a score-greedy peel
    (delete the vertex whose removal leaves the best score), and (c)
    load-augmented repeated peels in which each pass penalizes vertices by
    the degrees they had when earlier passes removed them.  Every candidate
    is polished by a hill-climb over single-vertex moves and (on small
    graphs) swaps.  Ties break as in exact mode: fewer vertices, then
    lexicographically least.  The returned score is never below score(G);
    the empty graph yields an empty set with score 0.
    """
    _check_alpha(alpha)
    if g.n == 0 or g.num_edges() == 0:
        if g.n == 0:
            return frozenset(), DensityScore(alpha, 0, 0)
        # Edgeless: every subset scores 0; smallest-then-lex rule gives {0},
        # matching exact mode.
        return frozenset({0}), DensityScore(alpha, 1, 0)

    candidates: list[tuple[frozenset[int], int]] = [
        (frozenset(range(g.n)), g.num_edges()),
    ]
    recs, _ = _peel_records(g, alpha, lambda v, d: (d, v))
    candidates += recs

    # Greedy growth from high-degree seeds: repeatedly add the outside
    # vertex with the most neighbors inside, keeping every record-breaking
    # prefix.  Growth complements peeling -- it walks straight into small
    # dense cores that a global peel can destroy early.
    seeds = sorted(range(g.n), key=lambda v: (-g.degree(v), v))[:3]
    for seed in seeds:
        inside = {seed}
        in_deg = [0] * g.n
        for w in g.neighbors(seed):
            in_deg[w] += 1
        cur_e = 0
        grow_score = DensityScore(alpha, 1, 0).score
        while len(inside) < g.n:
            v = min((u for u in range(g.n) if u not in inside),
                    key=lambda u: (-in_deg[u], u))
            inside.add(v)
            cur_e += in_deg[v]
            for w in g.neighbors(v):
                in_deg[w] += 1
            sc = DensityScore(alpha, len(inside), cur_e).score
            if sc > grow_score:
                grow_score = sc
                candidates.append((frozenset(inside), cur_e))

    # Load-augmented repeated peels: each pass penalizes vertices by the
    # degrees they had when earlier passes removed them, so persistent
    # cores drift toward the end of the deletion order.
    loads = [0.0] * g.n
    for _ in range(PEEL_LOAD_ROUNDS):
        recs, removal = _peel_records(
            g, alpha, lambda v, d: (loads[v] + d, v))
        candidates += recs
        for v in range(g.n):
            loads[v] += removal[v]

    def better(a: tuple[frozenset[int], int],
               b: tuple[frozenset[int], int]) -> bool:
        return _better(DensityScore(alpha, len(a[0]), a[1]).score,
                       (len(a[0]), tuple(sorted(a[0]))),
                       DensityScore(alpha, len(b[0]), b[1]).score,
                       (len(b[0]), tuple(sorted(b[0]))))

    # Stage 1: cheap add/remove polish for every distinct candidate.
    stage1: list[tuple[frozenset[int], int]] = []
    seen: set[frozenset[int]] = set()
    for cand, cand_e in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        stage1.append(_polish(g, alpha, cand, cand_e, swaps=False))

    # Stage 2: swap polish for the leading few only (it scans all
    # inside/outside pairs, so it is the expensive step).
    stage1.sort(key=lambda se: (-DensityScore(alpha, len(se[0]),
                                              se[1]).score,
                                len(se[0]), tuple(sorted(se[0]))))
    best_set, best_e = stage1[0]
    if g.n <= PEEL_SWAP_CAP:
        seen = set()
        for cand, cand_e in stage1[:PEEL_POLISH_TOP]:
            if cand in seen:
                continue
            seen.add(cand)
            polished = _polish(g, alpha, cand, cand_e, swaps=True)
            if better(polished, (best_set, best_e)):
                best_set, best_e = polished
    return frozenset(best_set), DensityScore(alpha, len(best_set), best_e)


@dataclass(frozen=True)
class MaximalityVerdict:
    maximal: bool
    counterexample: frozenset[int] | None
    counterexample_score: float | None
    mode: str


def verify_alpha_maximal(g: SimpleGraph, alpha: float, mode: str = "exact",
                         samples: int = 1000, seed: int = 0,
                         cap: int = EXACT_VERTEX_CAP) -> MaximalityVerdict:
    """Check that no vertex subset beats score(G).

    Exact mode enumerates every subset (argmax returned as counterexample when
    violated); sampled mode tries ``samples`` random subsets plus every
    single-vertex deletion.
    """
    _check_alpha(alpha)
    if g.n == 0:
        return MaximalityVerdict(True, None, None, mode)
    base = DensityScore(alpha, g.n, g.num_edges()).score
    tol = SCORE_REL_TOL * max(base, 1.0)

    if mode == "exact":
        if g.n > cap:
            raise SizeCapExceeded(f"{g.n} vertices exceeds exact cap {cap}")
        counts = _subset_edge_counts(g)
        pow_cache = [0.0] + [k ** (1.0 + alpha) for k in range(1, g.n + 1)]
        worst_mask, worst = 0, base + tol
        for s in range(1, 1 << g.n):
            sc = counts[s] / pow_cache[s.bit_count()]
            if sc > worst:
                worst_mask, worst = s, sc
        if worst_mask:
            return MaximalityVerdict(False, frozenset(_mask_vertices(worst_mask)),
                                     worst, mode)
        return MaximalityVerdict(True, None, None, mode)

    if mode == "sampled":
        rng = random.Random(seed)
        subsets: list[frozenset[int]] = []
        for v in range(g.n):
            if g.n > 1:
                subsets.append(frozenset(range(g.n)) - {v})
        for _ in range(samples):
            k = rng.randint(1, g.n)
            subsets.append(frozenset(rng.sample(range(g.n), k)))
        for vs in subsets:
            sub, _ = g.induced_subgraph(vs)
            sc = DensityScore(alpha, sub.n, sub.num_edges()).score
            if sc > base + tol:
                return MaximalityVerdict(False, vs, sc, mode)
        return MaximalityVerdict(True, None, None, mode)

    raise InputError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ExpansionReport:
    """Outcome of the two expansion bounds for one X."""

    edge_bound_ok: bool
    vertex_bound_ok: bool
    edge_lhs: float
    edge_rhs: float
    vertex_lhs: float
    vertex_rhs: float

    @property
    def edge_slack(self) -> float:
        return self.edge_lhs - self.edge_rhs

    @property
    def vertex_slack(self) -> float:
        return self.vertex_lhs - self.vertex_rhs


def check_expansion_bounds(g: SimpleGraph, alpha: float, xs) -> ExpansionReport:
    """Evaluate the edge- and vertex-expansion bounds for X (|X| <= n/2).

    The caller is responsible for g being alpha-maximal; the bounds are
    theorems under that hypothesis, so a failure indicates either a
    non-maximal input or a bug.  The vertex bound is strict.
    """
    _check_alpha(alpha)
    xset = frozenset(xs)
    if not xset:
        return ExpansionReport(True, True, 0.0, 0.0, 0.0, 0.0)
    if any(not 0 <= v < g.n for v in xset):
        raise InputError("X contains out-of-range vertices")
    if 2 * len(xset) > g.n:
        raise InputError(f"|X|={len(xset)} exceeds n/2={g.n / 2}")
    yset = frozenset(range(g.n)) - xset
    n_alpha = g.n ** alpha
    c = g.average_degree() / n_alpha

    nx = g.neighborhood(xset)
    e_xn = sum(1 for u, v in g.edges if (u in xset) != (v in xset))
    ratio = (len(xset) / len(yset)) ** alpha
    edge_rhs = (c / 4.0) * n_alpha * len(xset) * (1.0 + alpha - ratio)

    vr = (len(yset) / len(xset)) ** (alpha / (1.0 + alpha))
    vertex_rhs = len(xset) * ((1.0 + alpha / 2.0) * vr - 1.0)

    return ExpansionReport(
        edge_bound_ok=e_xn >= edge_rhs - 1e-9,
        vertex_bound_ok=len(nx) > vertex_rhs,
        edge_lhs=float(e_xn),
        edge_rhs=edge_rhs,
        vertex_lhs=float(len(nx)),
        vertex_rhs=vertex_rhs,
    )
