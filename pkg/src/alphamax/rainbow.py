"""Rainbow cycles and rainbow subdivisions in properly colored graphs.

A rainbow subgraph uses pairwise distinct edge colors.  A (U, Q)-path is a
rainbow path whose internal vertices lie in U and whose edge colors lie in Q.
The finders here keep per-vertex witnesses: every reached vertex carries one
self-avoiding rainbow path from the root, grown level by level, with the new
edge's color drawn from that level's color round and (from the second step
on) the extended endpoint gated by the previous vertex round.

The cycle finder partitions colors into four classes and grows one witness
tree per class from each root; two trees meeting away from the root close a
circuit with pairwise distinct colors, and any such circuit contains a
rainbow cycle (cut at the first repeated vertex).  The subdivision finders
work over vertex-and-color partitions: pairs connected by witness paths in
many parts form an auxiliary graph, a one-step subdivision is found there,
and each auxiliary edge is realized by a witness path from its own part so
the whole certificate stays rainbow.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Collection, Iterable, Mapping, Sequence

from .density import alpha_max_subgraph_exact, alpha_max_subgraph_peel
from .graphs import ColoredGraph, InputError, SimpleGraph, graph_digest

__all__ = [
    "SampleConfig",
    "per_round_rate",
    "sprinkle",
    "ReachSet",
    "uq_reach",
    "exact_length_reach",
    "extract_cycle_from_circuit",
    "RainbowCycleResult",
    "find_rainbow_cycle",
    "find_rainbow_cycle_exact",
    "validate_rainbow_cycle",
    "SubdivisionCert",
    "validate_subdivision",
    "find_one_subdivision",
    "find_rainbow_subdivision",
    "find_large_subdivision",
    "subdivision_to_document",
    "subdivision_from_document",
    "cycle_to_document",
    "cycle_from_document",
]

FORMAT_VERSION = 1

EXACT_CORE_CAP = 16         # exact density extraction up to this many vertices


@dataclass(frozen=True)
class SampleConfig:
    """Sampling knobs shared by the randomized finders and estimators.

    ``p``/``pc`` are total vertex/color sample probabilities, split across
    ``ell - 1`` vertex rounds and ``ell`` color rounds when sprinkling;
    ``lam`` is the tail parameter, ``tau`` the reach-target exponent, and
    ``rounds`` a generic round count for direct sprinkle calls.
    """

    p: float = 1.0
    pc: float = 1.0
    lam: float = 2.0
    ell: int = 3
    tau: float = 0.25
    rounds: int = 1
    seed: int = 0

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0 and 0.0 <= self.pc <= 1.0):
            raise InputError("probabilities must lie in [0, 1]")
        if not self.lam >= 1.0:
            raise InputError("lam must be at least 1")
        if self.ell < 1:
            raise InputError("ell must be >= 1")
        if not (0.0 < self.tau < 0.5):
            raise InputError("tau must lie in (0, 1/2)")
        if self.rounds < 1:
            raise InputError("rounds must be >= 1")


def per_round_rate(total_prob: float, rounds: int) -> float:
    """Rate q with 1-(1-q)^rounds = total_prob."""
    if rounds < 1:
        raise InputError("rounds must be >= 1")
    if not (0.0 <= total_prob <= 1.0):
        raise InputError("total_prob must lie in [0, 1]")
    return 1.0 - (1.0 - total_prob) ** (1.0 / rounds)


def sprinkle(universe: int, rounds: int, per_round_prob: float,
             seed: int | random.Random) -> list[set[int]]:
    """``rounds`` independent Bernoulli(per_round_prob) samples of
    {0..universe-1}; their union is distributed as one sample with
    probability 1-(1-q)^rounds."""
    if rounds < 1:
        raise InputError("rounds must be >= 1")
    if not (0.0 <= per_round_prob <= 1.0):
        raise InputError("per_round_prob must lie in [0, 1]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return [{x for x in range(universe) if rng.random() < per_round_prob}
            for _ in range(rounds)]


@dataclass(frozen=True)
class ReachSet:
    """Cumulative reach levels B_0 ⊆ B_1 ⊆ ... with one rainbow witness path
    per reached vertex (vertex sequence plus the colors used, in step order)."""

    root: int
    levels: tuple[frozenset[int], ...]
    witnesses: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(repr=False)

    @property
    def final(self) -> frozenset[int]:
        return self.levels[-1]

    def level_of(self, v: int) -> int:
        for i, lvl in enumerate(self.levels):
            if v in lvl:
                return i
        raise KeyError(v)


def uq_reach(cg: ColoredGraph, root: int,
             u_rounds: Sequence[Collection[int]],
             q_rounds: Sequence[Collection[int]],
             max_len: int | None = None) -> ReachSet:
    """Round-gated rainbow reach from ``root``.

    Step i (1-based) adds vertices w joined to some already-reached u by an
    edge whose color lies in q_rounds[i-1]; for every step after the first, u
    must additionally lie in u_rounds[i-2].  A vertex is added only if its
    witness path stays self-avoiding and rainbow, so every witness is a
    (U, Q)-path for the union rounds.
    """
    steps = len(q_rounds) if max_len is None else max_len
    if steps < 1:
        raise InputError("need at least one reach step")
    if len(q_rounds) < steps:
        raise InputError(f"need {steps} color rounds, got {len(q_rounds)}")
    if len(u_rounds) < steps - 1:
        raise InputError(f"need {steps - 1} vertex rounds for {steps} steps, "
                         f"got {len(u_rounds)}")
    g = cg.graph
    if not 0 <= root < g.n:
        raise InputError(f"root {root} out of range")
    witnesses: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
        root: ((root,), ())}
    levels = [frozenset([root])]
    reached = {root}
    for i in range(1, steps + 1):
        allowed_colors = set(q_rounds[i - 1])
        gate = None if i == 1 else set(u_rounds[i - 2])
        new: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
        for u in sorted(reached):
            if gate is not None and u != root and u not in gate:
                continue
            path, used_colors = witnesses[u]
            color_set = set(used_colors)
            for w in g.neighbors(u):
                if w in reached or w in new:
                    continue
                c = cg.color_of(u, w)
                if c not in allowed_colors or c in color_set:
                    continue
                if w in path:
                    continue
                new[w] = (path + (w,), used_colors + (c,))
        witnesses.update(new)
        reached.update(new)
        levels.append(frozenset(reached))
    return ReachSet(root=root, levels=tuple(levels), witnesses=witnesses)


def exact_length_reach(cg: ColoredGraph, root: int, length: int,
                       colors: Collection[int] | None = None,
                       vertices: Collection[int] | None = None
                       ) -> list[dict[int, tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Per-length witness layers: layer q maps each vertex first seen at
    rainbow self-avoiding distance exactly q to one witness path.

    Edge colors may be restricted to ``colors`` and internal vertices to
    ``vertices`` (endpoints are exempt).  A vertex can appear in several
    layers via different routes; duplicates are suppressed per layer only.
    """
    g = cg.graph
    allowed_c = None if colors is None else set(colors)
    allowed_v = None if vertices is None else set(vertices)
    layers: list[dict[int, tuple[tuple[int, ...], tuple[int, ...]]]] = [
        {root: ((root,), ())}]
    for _ in range(length):
        nxt: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
        for u, (path, used) in sorted(layers[-1].items()):
            if allowed_v is not None and u != root and u not in allowed_v:
                continue          # u would become an internal vertex
            color_set = set(used)
            for w in g.neighbors(u):
                if w in nxt or w in path:
                    continue
                c = cg.color_of(u, w)
                if c in color_set:
                    continue
                if allowed_c is not None and c not in allowed_c:
                    continue
                nxt[w] = (path + (w,), used + (c,))
        layers.append(nxt)
    return layers


def extract_cycle_from_circuit(cg: ColoredGraph,
                               circuit: Sequence[int]) -> tuple[int, ...]:
    """First simple cycle inside a closed walk with pairwise distinct edge
    colors: scan for the first repeated vertex and return the enclosed
    segment (endpoints equal).  The segment's edges are a subset of the
    circuit's, hence rainbow."""
    if len(circuit) < 3 or circuit[0] != circuit[-1]:
        raise InputError("input must be a closed walk of length >= 2")
    colors = []
    for u, w in zip(circuit, circuit[1:]):
        if not cg.graph.has_edge(u, w):
            raise InputError(f"walk step {u}-{w} is not an edge")
        colors.append(cg.color_of(u, w))
    if len(set(colors)) != len(colors):
        raise InputError("circuit repeats an edge color")
    seen: dict[int, int] = {}
    for pos, v in enumerate(circuit):
        if v in seen:
            return tuple(circuit[seen[v]:pos + 1])
        seen[v] = pos
    raise AssertionError("closed walk without repeated vertex")


# ---------------------------------------------------------------------------
# rainbow cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RainbowCycleResult:
    status: str                       # found | none | indeterminate
    cycle: tuple[int, ...] | None     # closed vertex sequence
    colors: tuple[int, ...] | None
    notes: tuple[str, ...] = ()


def validate_rainbow_cycle(cg: ColoredGraph, cycle: Sequence[int]) -> bool:
    """Closed, simple, every consecutive pair an edge, all colors distinct."""
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        return False
    body = cycle[:-1]
    if len(set(body)) != len(body):
        return False
    colors = []
    for u, w in zip(cycle, cycle[1:]):
        if not cg.graph.has_edge(u, w):
            return False
        colors.append(cg.color_of(u, w))
    return len(set(colors)) == len(colors)


def _cycle_colors(cg: ColoredGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    return tuple(cg.color_of(u, w) for u, w in zip(cycle, cycle[1:]))


def _extract_core(cg: ColoredGraph) -> tuple[ColoredGraph, list[int], str]:
    """Density-maximal core at exponent 1/log2(n); tiny hosts are kept whole
    (the exponent would leave the admissible range)."""
    n = cg.graph.n
    if n <= 4:
        return cg, list(range(n)), "host kept whole (too small to extract)"
    alpha = 1.0 / math.log2(n)
    if n <= EXACT_CORE_CAP:
        core_set, _ = alpha_max_subgraph_exact(cg.graph, alpha)
    else:
        core_set, _ = alpha_max_subgraph_peel(cg.graph, alpha)
    core, mapping = cg.induced_subgraph(sorted(core_set))
    return core, mapping, f"core: {core.graph.n} of {n} vertices"


def find_rainbow_cycle(cg: ColoredGraph, config: SampleConfig | None = None,
                       retries: int = 32) -> RainbowCycleResult:
    """Sampling-based rainbow cycle finder.

    Extracts a density-maximal core, splits its colors into four random
    classes, and grows one witness tree per class from each root.  Any
    non-root vertex reached by two trees closes a circuit with colors from
    two disjoint classes — a rainbow circuit — from which a rainbow cycle is
    cut.  Exhausting the retry budget means none found, not absence.
    """
    if config is None:
        config = SampleConfig()
    if cg.graph.num_edges() == 0:
        return RainbowCycleResult("none", None, None, ("empty graph",))
    core, mapping, core_note = _extract_core(cg)
    colors = sorted(core.color_set())
    notes = [core_note]
    rng = random.Random(config.seed)
    ell = config.ell
    nv = core.graph.n
    for _attempt in range(retries):
        classes: list[set[int]] = [set(), set(), set(), set()]
        for c in colors:
            classes[rng.randrange(4)].add(c)
        qc = per_round_rate(config.pc, ell)
        qv = per_round_rate(config.p, ell - 1) if ell > 1 else 1.0
        trees_rounds = []
        for k in range(4):
            q_rounds = [{c for c in classes[k] if rng.random() < qc}
                        for _ in range(ell)] if config.pc < 1.0 else [classes[k]] * ell
            u_rounds = [{v for v in range(nv) if rng.random() < qv}
                        for _ in range(ell - 1)] if config.p < 1.0 else [set(range(nv))] * (ell - 1)
            trees_rounds.append((u_rounds, q_rounds))
        for root in range(nv):
            trees = [uq_reach(core, root, ur, qr)
                     for ur, qr in trees_rounds]
            for i, j in itertools.combinations(range(4), 2):
                meet = sorted((trees[i].final & trees[j].final) - {root})
                for w in meet:
                    path_a, colors_a = trees[i].witnesses[w]
                    path_b, colors_b = trees[j].witnesses[w]
                    if set(colors_a) & set(colors_b):
                        continue
                    circuit = path_a + tuple(reversed(path_b))[1:]
                    cycle = extract_cycle_from_circuit(core, circuit)
                    if validate_rainbow_cycle(core, cycle):
                        lifted = tuple(mapping[v] for v in cycle)
                        return RainbowCycleResult("found", lifted,
                                                  _cycle_colors(cg, lifted),
                                                  tuple(notes))
    return RainbowCycleResult("none", None, None, tuple(notes))


class _SearchBudget(Exception):
    pass


def find_rainbow_cycle_exact(cg: ColoredGraph, max_len: int | None = None,
                             budget: int = 1_000_000) -> RainbowCycleResult:
    """Complete backtracking search for a rainbow cycle of length <= max_len.

    Canonical form prunes duplicates: the start is the least vertex of the
    cycle and the second vertex is smaller than the last.  A "none" verdict
    is a proof of absence unless the node budget was exhausted, which yields
    an indeterminate verdict instead.
    """
    g = cg.graph
    cap = g.n if max_len is None else max_len
    left = budget

    for start in range(g.n):
        path = [start]
        on_path = {start}
        used_colors: set[int] = set()

        def rec() -> tuple[int, ...] | None:
            nonlocal left
            left -= 1
            if left < 0:
                raise _SearchBudget
            u = path[-1]
            for w in g.neighbors(u):
                if w < start:
                    continue
                c = cg.color_of(u, w)
                if c in used_colors:
                    continue
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        return tuple(path) + (start,)
                    continue
                if w in on_path or len(path) >= cap:
                    continue
                path.append(w)
                on_path.add(w)
                used_colors.add(c)
                got = rec()
                if got is not None:
                    return got
                path.pop()
                on_path.discard(w)
                used_colors.discard(c)
            return None

        try:
            cycle = rec()
        except _SearchBudget:
            return RainbowCycleResult("indeterminate", None, None,
                                      ("node budget exhausted",))
        if cycle is not None:
            return RainbowCycleResult("found", cycle, _cycle_colors(cg, cycle))
    return RainbowCycleResult("none", None, None)


# ---------------------------------------------------------------------------
# subdivisions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubdivisionCert:
    """Topological clique certificate: t branch vertices and one path per
    pair.  ``uniform_length`` is declared when every path has that many
    edges (so a declared length L is an (L-1)-subdivision); None leaves
    lengths free, as in the rainbow pipeline whose witness paths vary."""

    t: int
    branches: tuple[int, ...]
    paths: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)
    uniform_length: int | None = None

    def all_path_vertices(self) -> frozenset[int]:
        out: set[int] = set(self.branches)
        for p in self.paths.values():
            out.update(p)
        return frozenset(out)


def validate_subdivision(host: SimpleGraph | ColoredGraph,
                         cert: SubdivisionCert,
                         rainbow: bool = False) -> bool:
    """Branch distinctness, path endpoints, adjacency of consecutive
    vertices, global internal disjointness, declared uniform length, and
    (with ``rainbow``) global color distinctness."""
    cg = host if isinstance(host, ColoredGraph) else None
    g = host.graph if isinstance(host, ColoredGraph) else host
    b = cert.branches
    if len(b) != cert.t or len(set(b)) != cert.t:
        return False
    if any(not 0 <= v < g.n for v in b):
        return False
    want_pairs = {(i, j) for i, j in itertools.combinations(range(cert.t), 2)}
    if set(cert.paths) != want_pairs:
        return False
    internals_seen: set[int] = set()
    colors_seen: list[int] = []
    for (i, j), path in sorted(cert.paths.items()):
        if len(path) < 2 or path[0] != b[i] or path[-1] != b[j]:
            return False
        if cert.uniform_length is not None and len(path) - 1 != cert.uniform_length:
            return False
        if len(set(path)) != len(path):
            return False
        for u, w in zip(path, path[1:]):
            if not g.has_edge(u, w):
                return False
            if cg is not None:
                colors_seen.append(cg.color_of(u, w))
        internal = set(path[1:-1])
        if internal & set(b) or internal & internals_seen:
            return False
        internals_seen |= internal
    if rainbow:
        if cg is None:
            raise InputError("rainbow validation needs a colored host")
        if len(set(colors_seen)) != len(colors_seen):
            return False
    return True


def _trivial_cert(g: SimpleGraph, t: int) -> SubdivisionCert | None:
    """t <= 1 has no pairs to route; any t distinct vertices suffice."""
    if g.n < t:
        return None
    return SubdivisionCert(t=t, branches=tuple(range(t)), paths={},
                           uniform_length=None)


def _match_pairs(candidates: dict[tuple[int, int], list[int]]
                 ) -> dict[tuple[int, int], int] | None:
    """Perfect matching of pairs to distinct middles (Kuhn's augmenting
    paths); None when some pair cannot be served."""
    owner: dict[int, tuple[int, int]] = {}
    assign: dict[tuple[int, int], int] = {}

    def try_assign(pair: tuple[int, int], visited: set[int]) -> bool:
        for m in candidates[pair]:
            if m in visited:
                continue
            visited.add(m)
            if m not in owner or try_assign(owner[m], visited):
                owner[m] = pair
                assign[pair] = m
                return True
        return False

    for pair in sorted(candidates):
        if not try_assign(pair, set()):
            return None
    return assign


def find_one_subdivision(host: SimpleGraph | ColoredGraph, t: int,
                         seed: int = 0, retries: int = 64,
                         subset_budget: int = 20_000
                         ) -> SubdivisionCert | None:
    """One-step subdivision of the complete graph on t branches: every pair
    routed through its own middle vertex (paths of length 2).

    Branch t-sets are scanned in degree order; per set, middles are matched
    to pairs exactly with Kuhn's algorithm, so the search is complete while
    the subset budget covers all t-sets.  Larger hosts fall back to the
    budgeted scan plus randomized retries.
    """
    g = host.graph if isinstance(host, ColoredGraph) else host
    if t <= 1:
        return _trivial_cert(g, t)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    tried = 0
    for branches in itertools.combinations(order, t):
        tried += 1
        if tried > subset_budget:
            break
        cert = _one_subdivision_at(g, tuple(branches))
        if cert is not None:
            return cert
    rng = random.Random(seed)
    pool = [v for v in order if g.degree(v) >= t - 1]
    for _ in range(retries):
        if len(pool) < t or tried <= subset_budget:
            break
        branches = tuple(sorted(rng.sample(pool, t)))
        cert = _one_subdivision_at(g, branches)
        if cert is not None:
            return cert
    return None


def _one_subdivision_at(g: SimpleGraph, branches: tuple[int, ...]
                        ) -> SubdivisionCert | None:
    bset = set(branches)
    candidates: dict[tuple[int, int], list[int]] = {}
    for i, j in itertools.combinations(range(len(branches)), 2):
        common = sorted((g.neighbors(branches[i]) & g.neighbors(branches[j]))
                        - bset)
        if not common:
            return None
        candidates[(i, j)] = common
    assign = _match_pairs(candidates)
    if assign is None:
        return None
    paths = {pair: (branches[pair[0]], m, branches[pair[1]])
             for pair, m in assign.items()}
    cert = SubdivisionCert(t=len(branches), branches=branches, paths=paths,
                           uniform_length=2)
    if not validate_subdivision(g, cert):
        raise AssertionError("matched subdivision failed validation")
    return cert


# -- rainbow subdivision pipeline -------------------------------------------

def find_rainbow_subdivision(cg: ColoredGraph, t: int,
                             config: SampleConfig | None = None,
                             s: int | None = None,
                             retries: int = 8) -> SubdivisionCert | None:
    """Rainbow subdivision of the complete graph on t branches.

    Pipeline: extract a density-maximal core; partition its vertices and
    colors into s aligned parts; from every vertex grow a witness tree per
    part (internals in the part's vertices, colors in its colors); call a
    pair good when witnessed in at least s/6 parts; find a one-step
    subdivision in the graph of good pairs; realize each of its edges by a
    witness path from a part no other edge uses — distinct parts make the
    union rainbow and internally disjoint, which the validator re-checks.
    """
    if config is None:
        config = SampleConfig()
    g = cg.graph
    if t <= 1:
        return _trivial_cert(g, t)
    core, mapping, _note = _extract_core(cg)
    nv = core.graph.n
    colors = sorted(core.color_set())
    if s is None:
        s = 6
    need = max(1, math.ceil(s / 6))
    rng = random.Random(config.seed)
    ell = config.ell
    for _attempt in range(retries):
        vparts: list[set[int]] = [set() for _ in range(s)]
        for v in range(nv):
            if config.p < 1.0 and rng.random() >= config.p:
                continue
            vparts[rng.randrange(s)].add(v)
        cparts: list[set[int]] = [set() for _ in range(s)]
        for c in colors:
            if config.pc < 1.0 and rng.random() >= config.pc:
                continue
            cparts[rng.randrange(s)].add(c)
        # witness[(u, w)] = list of (part, path u->w)
        witness: dict[tuple[int, int], list[tuple[int, tuple[int, ...]]]] = {}
        for i in range(s):
            for u in range(nv):
                tree = uq_reach(core, u, [vparts[i]] * (ell - 1),
                                [cparts[i]] * ell)
                for w in tree.final:
                    if w == u:
                        continue
                    key = (min(u, w), max(u, w))
                    path = tree.witnesses[w][0]
                    if path[0] != key[0]:
                        path = tuple(reversed(path))
                    lst = witness.setdefault(key, [])
                    if all(prt != i for prt, _ in lst):
                        lst.append((i, path))
        good_edges = sorted(k for k, lst in witness.items() if len(lst) >= need)
        if not good_edges:
            continue
        j_graph = SimpleGraph(nv, good_edges)
        skeleton = find_one_subdivision(j_graph, t)
        if skeleton is None:
            continue
        cert = _substitute_witnesses(core, skeleton, witness)
        if cert is not None:
            lifted = _lift_cert(cert, mapping)
            if validate_subdivision(cg, lifted, rainbow=True):
                return lifted
    return None


def _substitute_witnesses(core: ColoredGraph, skeleton: SubdivisionCert,
                          witness: dict[tuple[int, int],
                                        list[tuple[int, tuple[int, ...]]]]
                          ) -> SubdivisionCert | None:
    """Assign a distinct part to every skeleton edge and splice the witness
    paths; backtracks over part choices, rejecting vertex collisions."""
    legs: list[tuple[int, int]] = []      # oriented (x, y) per skeleton edge
    for (i, j), p3 in sorted(skeleton.paths.items()):
        legs.append((p3[0], p3[1]))
        legs.append((p3[1], p3[2]))
    anchors = set(skeleton.branches)
    for p3 in skeleton.paths.values():
        anchors.add(p3[1])
    chosen: list[tuple[int, ...]] = []
    used_parts: set[int] = set()
    used_internals: set[int] = set()

    def rec(k: int) -> bool:
        if k == len(legs):
            return True
        x, y = legs[k]
        key = (min(x, y), max(x, y))
        for part, path in witness.get(key, []):
            if part in used_parts:
                continue
            oriented = path if path[0] == x else tuple(reversed(path))
            inner = set(oriented[1:-1])
            if inner & anchors or inner & used_internals:
                continue
            used_parts.add(part)
            used_internals.update(inner)
            chosen.append(oriented)
            if rec(k + 1):
                return True
            chosen.pop()
            used_parts.discard(part)
            used_internals.difference_update(inner)
        return False

    if not rec(0):
        return None
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for idx, (pair, _p3) in enumerate(sorted(skeleton.paths.items())):
        first, second = chosen[2 * idx], chosen[2 * idx + 1]
        paths[pair] = first + second[1:]
    return SubdivisionCert(t=skeleton.t, branches=skeleton.branches,
                           paths=paths, uniform_length=None)


def _lift_cert(cert: SubdivisionCert, mapping: Sequence[int]) -> SubdivisionCert:
    return SubdivisionCert(
        t=cert.t,
        branches=tuple(mapping[v] for v in cert.branches),
        paths={pair: tuple(mapping[v] for v in path)
               for pair, path in cert.paths.items()},
        uniform_length=cert.uniform_length,
    )


# -- balanced (large) subdivision pipeline -----------------------------------

def find_large_subdivision(cg: ColoredGraph, alpha: float, ell: int, t: int,
                           config: SampleConfig | None = None,
                           s: int | None = None, retries: int = 8,
                           use_partitions: bool = True,
                           direct_fallback: bool = True
                           ) -> SubdivisionCert | None:
    """Balanced rainbow subdivision: every branch pair joined by a path of
    length exactly ``ell`` (an (ell-1)-subdivision of the complete graph).

    Partition mode mirrors the sampling argument: vertices and colors are
    split into s aligned parts; a pair enters the auxiliary multigraph with
    part index i when one endpoint reaches the other by an exact-length
    (U_i, Q_i)-path for both half lengths floor/ceil(ell/2); pairs witnessed
    in enough parts form the graph L, a one-step subdivision is found in L,
    and every L-edge is realized from its own part, joined at hub middles.

    The direct fallback ignores partitions and backtracks over hub middles
    with explicit global vertex- and color-disjointness checks; it rescues
    desk-scale instances where random partitions are too thin to witness
    anything (the asymptotic parameter choices are degenerate here).
    """
    if config is None:
        config = SampleConfig()
    if ell < 3:
        raise InputError("ell must be >= 3")
    g = cg.graph
    if t <= 1:
        return _trivial_cert(g, t)
    if g.n <= 4 or g.num_edges() == 0:
        core, mapping = cg, list(range(g.n))
    else:
        if g.n <= EXACT_CORE_CAP:
            core_set, _ = alpha_max_subgraph_exact(g, alpha)
        else:
            core_set, _ = alpha_max_subgraph_peel(g, alpha)
        core, mapping = cg.induced_subgraph(sorted(core_set))
    half_a, half_b = ell // 2, ell - ell // 2
    n_legs = t * (t - 1)
    if s is None:
        s = max(4, n_legs)
    tau_need = max(1, math.ceil(config.tau * s))
    rng = random.Random(config.seed)

    if use_partitions:
        for _attempt in range(retries):
            cert = _large_partition_attempt(core, t, half_a, half_b, s,
                                            tau_need, config, rng)
            if cert is not None:
                lifted = _lift_cert(cert, mapping)
                if validate_subdivision(cg, lifted, rainbow=True):
                    return lifted
    if direct_fallback:
        cert = _large_direct_attempt(core, t, half_a, half_b, rng)
        if cert is not None:
            lifted = _lift_cert(cert, mapping)
            if validate_subdivision(cg, lifted, rainbow=True):
                return lifted
    return None


def _large_partition_attempt(core: ColoredGraph, t: int, half_a: int,
                             half_b: int, s: int, tau_need: int,
                             config: SampleConfig, rng: random.Random
                             ) -> SubdivisionCert | None:
    nv = core.graph.n
    colors = sorted(core.color_set())
    vparts: list[set[int]] = [set() for _ in range(s)]
    for v in range(nv):
        if config.p < 1.0 and rng.random() >= config.p:
            continue
        vparts[rng.randrange(s)].add(v)
    cparts: list[set[int]] = [set() for _ in range(s)]
    for c in colors:
        if config.pc < 1.0 and rng.random() >= config.pc:
            continue
        cparts[rng.randrange(s)].add(c)
    # reach[i][v] = exact-length layers within part i from v
    reach = [
        {v: exact_length_reach(core, v, half_b, cparts[i], vparts[i])
         for v in range(nv)}
        for i in range(s)
    ]

    def leg_parts(x: int, y: int, length: int) -> list[int]:
        return [i for i in range(s) if y in reach[i][x][length]]

    # L-edge (x, y): x a potential branch, y a potential hub middle; the
    # branch-side half has length half_a, the hub side half_b
    good: dict[tuple[int, int], bool] = {}

    def is_good(x: int, y: int) -> bool:
        key = (x, y)
        if key not in good:
            good[key] = (len(leg_parts(x, y, half_a)) >= tau_need
                         and len(leg_parts(x, y, half_b)) >= tau_need)
        return good[key]

    order = sorted(range(nv),
                   key=lambda v: (-core.graph.degree(v), v))
    for branches in itertools.combinations(order, t):
        pairs = list(itertools.combinations(range(t), 2))
        mids: dict[tuple[int, int], int] = {}
        used_m: set[int] = set(branches)
        used_parts: set[int] = set()
        used_verts: set[int] = set(branches)
        paths: dict[tuple[int, int], tuple[int, ...]] = {}

        def rec(k: int) -> bool:
            if k == len(pairs):
                return True
            i, j = pairs[k]
            u, w = branches[i], branches[j]
            for m in range(nv):
                if m in used_m or not (is_good(u, m) and is_good(w, m)):
                    continue
                for pa in leg_parts(u, m, half_a):
                    if pa in used_parts:
                        continue
                    path_a = reach[pa][u][half_a][m][0]
                    inner_a = set(path_a) - {u, m}
                    if inner_a & used_verts or m in used_verts:
                        continue
                    for pb in leg_parts(w, m, half_b):
                        if pb in used_parts or pb == pa:
                            continue
                        path_b = reach[pb][w][half_b][m][0]
                        inner_b = set(path_b) - {w, m}
                        if inner_b & used_verts or inner_b & inner_a:
                            continue
                        mids[(i, j)] = m
                        used_m.add(m)
                        used_parts.update((pa, pb))
                        news = inner_a | inner_b | {m}
                        used_verts.update(news)
                        paths[(i, j)] = path_a + tuple(reversed(path_b))[1:]
                        if rec(k + 1):
                            return True
                        del mids[(i, j)], paths[(i, j)]
                        used_m.discard(m)
                        used_parts.difference_update((pa, pb))
                        used_verts.difference_update(news)
            return False

        if rec(0):
            return SubdivisionCert(t=t, branches=branches, paths=dict(paths),
                                   uniform_length=half_a + half_b)
    return None


def _large_direct_attempt(core: ColoredGraph, t: int, half_a: int,
                          half_b: int, rng: random.Random
                          ) -> SubdivisionCert | None:
    """Partition-free search: exact-length witness layers without vertex or
    color restriction, hub middles per pair, explicit global disjointness."""
    nv = core.graph.n
    layers = {v: exact_length_reach(core, v, half_b) for v in range(nv)}
    order = sorted(range(nv), key=lambda v: (-core.graph.degree(v), v))
    for branches in itertools.combinations(order, t):
        pairs = list(itertools.combinations(range(t), 2))
        used_verts: set[int] = set(branches)
        used_colors: set[int] = set()
        paths: dict[tuple[int, int], tuple[int, ...]] = {}

        def path_colors(path: tuple[int, ...]) -> set[int]:
            return {core.color_of(a, b) for a, b in zip(path, path[1:])}

        def rec(k: int) -> bool:
            if k == len(pairs):
                return True
            i, j = pairs[k]
            u, w = branches[i], branches[j]
            for m in sorted(set(layers[u][half_a]) & set(layers[w][half_b])):
                if m in used_verts:
                    continue
                path_a = layers[u][half_a][m][0]
                path_b = layers[w][half_b][m][0]
                inner = (set(path_a) | set(path_b)) - {u, w}
                if inner & used_verts or set(path_a[1:-1]) & set(path_b[1:-1]):
                    continue
                cols = path_colors(path_a) | path_colors(path_b)
                if (len(cols) != len(path_a) + len(path_b) - 2
                        or cols & used_colors):
                    continue
                paths[(i, j)] = path_a + tuple(reversed(path_b))[1:]
                used_verts.update(inner)
                used_colors.update(cols)
                if rec(k + 1):
                    return True
                del paths[(i, j)]
                used_verts.difference_update(inner)
                used_colors.difference_update(cols)
            return False

        if rec(0):
            return SubdivisionCert(t=t, branches=branches, paths=dict(paths),
                                   uniform_length=half_a + half_b)
    return None


# ---------------------------------------------------------------------------
# certificate documents
# ---------------------------------------------------------------------------

def subdivision_to_document(cert: SubdivisionCert,
                            host: SimpleGraph | ColoredGraph) -> dict:
    g = host.graph if isinstance(host, ColoredGraph) else host
    return {
        "format_version": FORMAT_VERSION,
        "kind": "subdivision",
        "t": cert.t,
        "branches": list(cert.branches),
        "paths": {f"{i}-{j}": list(p) for (i, j), p in sorted(cert.paths.items())},
        "uniform_length": cert.uniform_length,
        "host_digest": graph_digest(g),
    }


def subdivision_from_document(doc: Mapping) -> SubdivisionCert:
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {doc.get('format_version')!r}")
    if doc.get("kind") != "subdivision":
        raise InputError(f"expected subdivision document, got {doc.get('kind')!r}")
    paths = {}
    for key, p in doc["paths"].items():
        i, j = key.split("-")
        paths[(int(i), int(j))] = tuple(int(v) for v in p)
    return SubdivisionCert(
        t=int(doc["t"]),
        branches=tuple(int(v) for v in doc["branches"]),
        paths=paths,
        uniform_length=(None if doc.get("uniform_length") is None
                        else int(doc["uniform_length"])),
    )


def cycle_to_document(cycle: Sequence[int], cg: ColoredGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "rainbow_cycle",
        "vertices": list(cycle),
        "colors": list(_cycle_colors(cg, cycle)),
        "host_digest": graph_digest(cg.graph),
    }


def cycle_from_document(doc: Mapping) -> tuple[int, ...]:
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {doc.get('format_version')!r}")
    if doc.get("kind") != "rainbow_cycle":
        raise InputError(f"expected rainbow_cycle document, got {doc.get('kind')!r}")
    return tuple(int(v) for v in doc["vertices"])
