"""Monte Carlo verification of the concentration statements and the numeric
inequality suite.

Estimators never abort on unmet hypotheses: the lemmas' hypotheses are
rarely satisfiable at desk scale, so runs are annotated (``hypothesis_ok``)
and callers filter on the annotation before asserting the failure-rate
bound.  Expectations (mu) are computed in closed form, never sampled.
Bound formulas use base-2 logarithms.

Trials are vectorized with numpy where the per-trial work is a bipartite
neighborhood count; the generator is seeded from (seed, stream) so reports
are exactly reproducible for fixed (seed, trials).  Wall time is recorded
on the report but excluded from serialized documents and comparisons.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .graphs import ColoredGraph, ForbiddenMap, InputError
from .hypergraphs import RGraph
from .rainbow import SampleConfig, per_round_rate, uq_reach
from .simplicial import sampled_reach_faces

__all__ = [
    "TrialReport",
    "ChernoffBounds",
    "chernoff_bounds",
    "estimate_chernoff_lower",
    "InequalityResult",
    "numeric_inequality_suite",
    "BipartiteInstance",
    "ColoredBipartiteInstance",
    "matching_instance",
    "disjoint_stars_instance",
    "bounded_bipartite_instance",
    "star_heavy_instance",
    "complete_bipartite_instance",
    "colored_matching_instance",
    "colored_stars_instance",
    "estimate_neighborhood_sampling",
    "estimate_colored_sampling",
    "estimate_master",
    "estimate_reach",
    "CSV_COLUMNS",
    "reports_to_csv",
    "reports_to_document",
]

FORMAT_VERSION = 1
MIN_ASSERT_TRIALS = 1000


@dataclass(frozen=True)
class TrialReport:
    """One estimator run: counts, the theoretical bound it is compared
    against, and the hypothesis annotation."""

    name: str
    trials: int
    successes: int
    failure_rate: float
    bound: float
    lam: float
    seed: int
    hypothesis_ok: bool
    notes: tuple[str, ...] = ()
    mu: float | None = None
    threshold: float | None = None
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise InputError("successes must lie in 0..trials")
        if not 0.0 <= self.bound <= 1.0:
            raise InputError("bound must be clamped to [0, 1]")

    def slack(self) -> float:
        """3-sigma sampling slack plus a fixed epsilon."""
        var = self.bound * (1.0 - self.bound) / max(1, self.trials)
        return 3.0 * math.sqrt(var) + 1e-3

    def within_bound(self) -> bool:
        return self.failure_rate <= self.bound + self.slack()

    def assert_within_bound(self) -> None:
        """Raises unless the run is assertable (hypotheses met, enough
        trials) and the empirical rate is within bound + slack."""
        if self.trials < MIN_ASSERT_TRIALS:
            raise InputError(f"need >= {MIN_ASSERT_TRIALS} trials to assert")
        if not self.hypothesis_ok:
            raise InputError(f"hypotheses unmet for {self.name}: {self.notes}")
        if not self.within_bound():
            raise AssertionError(
                f"{self.name}: failure rate {self.failure_rate:.6f} exceeds "
                f"{self.bound:.6f} + {self.slack():.6f}")

    def to_document(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "name": self.name,
            "trials": self.trials,
            "successes": self.successes,
            "failure_rate": self.failure_rate,
            "bound": self.bound,
            "lam": self.lam,
            "seed": self.seed,
            "hypothesis_ok": self.hypothesis_ok,
            "notes": list(self.notes),
            "mu": self.mu,
            "threshold": self.threshold,
        }


def _mk_report(name: str, trials: int, failures: int, bound: float,
               lam: float, seed: int, hypothesis_ok: bool,
               notes: Sequence[str], mu: float | None,
               threshold: float | None, t0: float) -> TrialReport:
    return TrialReport(
        name=name,
        trials=trials,
        successes=trials - failures,
        failure_rate=failures / trials if trials else 0.0,
        bound=max(0.0, min(1.0, bound)),
        lam=lam,
        seed=seed,
        hypothesis_ok=hypothesis_ok,
        notes=tuple(notes),
        mu=mu,
        threshold=threshold,
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# Chernoff bounds
# ---------------------------------------------------------------------------

class ChernoffBounds(NamedTuple):
    lower: float          # P(X <= mu/2) <= exp(-mu/8)
    upper: float | None   # P(X >= t) <= exp(-t/6), only when t > 2 mu


def chernoff_bounds(mu: float, t: float | None = None) -> ChernoffBounds:
    """Multiplicative Chernoff bounds, clamped to [0, 1]; the upper-tail
    bound applies only for t > 2*mu and is None otherwise."""
    if mu < 0:
        raise InputError("mu must be nonnegative")
    lower = min(1.0, math.exp(-mu / 8.0))
    upper = None
    if t is not None and t > 2 * mu:
        upper = min(1.0, math.exp(-t / 6.0))
    return ChernoffBounds(lower, upper)


def estimate_chernoff_lower(mu: int, trials: int, seed: int) -> TrialReport:
    """Empirical check of the lower-tail bound on a sum of 2*mu fair coins
    (mean mu): frequency of X <= mu/2 vs exp(-mu/8)."""
    if mu <= 0 or mu % 2:
        raise InputError("mu must be a positive even integer (2*mu coins)")
    t0 = time.perf_counter()
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0xC0]))
    xs = rng.binomial(2 * mu, 0.5, size=trials)
    failures = int((xs <= mu / 2).sum())
    return _mk_report(f"chernoff-lower:mu={mu}", trials, failures,
                      math.exp(-mu / 8.0), 0.0, seed, True, (),
                      float(mu), mu / 2.0, t0)


# ---------------------------------------------------------------------------
# numeric inequality suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityResult:
    name: str
    checked: int
    skipped: int
    violations: tuple[tuple[float, float], ...]   # sample (a, b) points

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.violations


def _log_spaced(lo: float, hi: float, count: int) -> list[float]:
    return list(np.logspace(math.log10(lo), math.log10(hi), count))


def numeric_inequality_suite(a_count: int = 100, b_count: int = 100
                             ) -> tuple[InequalityResult, ...]:
    """Four inequalities on a log-spaced grid, skipping (and counting)
    points outside each one's hypotheses:

    * chain:       (1-a)^b <= e^(-ab) <= 1 - ab/2      for a,b>0, ab<1
    * lower:       1 - 2ab < (1-a)^b                    additionally a <= 1/2
    * ratio-one:   (1+a)^(1/(1+a)) > 1 + a/2            for a in (0, 1/2)
    * ratio-half:  (1+a/2)^(1/(1+a)) >= 1 + a/4         for a in (0, 1/2)

    Comparisons run in log space (log1p/expm1) so the tiny-argument corner
    of the grid is decided by mathematics, not rounding.
    """
    a_grid = _log_spaced(1e-6, 0.99, a_count)
    b_grid = _log_spaced(1e-2, 1e4, b_count)
    chain_checked = chain_skipped = 0
    chain_bad: list[tuple[float, float]] = []
    lower_checked = lower_skipped = 0
    lower_bad: list[tuple[float, float]] = []
    for a, b in itertools.product(a_grid, b_grid):
        if a * b >= 1.0 or a >= 1.0:
            chain_skipped += 1
            lower_skipped += 1
            continue
        chain_checked += 1
        left_ok = b * (math.log1p(-a) + a) <= 0.0
        right_ok = math.expm1(-a * b) + a * b / 2.0 <= 0.0
        if not (left_ok and right_ok):
            chain_bad.append((a, b))
        if a > 0.5:
            lower_skipped += 1
            continue
        lower_checked += 1
        if not math.expm1(b * math.log1p(-a)) + 2.0 * a * b > 0.0:
            lower_bad.append((a, b))
    one_checked = one_skipped = 0
    one_bad: list[tuple[float, float]] = []
    half_checked = half_skipped = 0
    half_bad: list[tuple[float, float]] = []
    for a in a_grid:
        if not 0.0 < a < 0.5:
            one_skipped += 1
            half_skipped += 1
            continue
        one_checked += 1
        if not math.log1p(a) / (1.0 + a) > math.log1p(a / 2.0):
            one_bad.append((a, 0.0))
        half_checked += 1
        if not math.log1p(a / 2.0) / (1.0 + a) >= math.log1p(a / 4.0):
            half_bad.append((a, 0.0))
    return (
        InequalityResult("chain", chain_checked, chain_skipped,
                         tuple(chain_bad[:10])),
        InequalityResult("lower", lower_checked, lower_skipped,
                         tuple(lower_bad[:10])),
        InequalityResult("ratio-one", one_checked, one_skipped,
                         tuple(one_bad[:10])),
        InequalityResult("ratio-half", half_checked, half_skipped,
                         tuple(half_bad[:10])),
    )


# ---------------------------------------------------------------------------
# bipartite instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteInstance:
    """Bipartite graph A (left, sampled side) against B (right, counted
    side), stored as sorted neighbor tuples per left vertex."""

    name: str
    a: int
    b: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.a:
            raise InputError("adjacency must list every left vertex")
        for nb in self.adj:
            if any(not 0 <= v < self.b for v in nb):
                raise InputError("right-vertex id out of range")
            if len(set(nb)) != len(nb):
                raise InputError("duplicate edge")

    def k_max(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def right_degrees(self) -> list[int]:
        deg = [0] * self.b
        for nb in self.adj:
            for v in nb:
                deg[v] += 1
        return deg

    def mu(self, p: float) -> float:
        """E|N(U)| = sum over right vertices of 1-(1-p)^deg, exact."""
        return sum(1.0 - (1.0 - p) ** d for d in self.right_degrees() if d)


@dataclass(frozen=True)
class ColoredBipartiteInstance:
    """Properly edge-colored bipartite instance: edges (left, right, color)
    with colors pairwise distinct at every vertex."""

    name: str
    a: int
    b: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen_left: set[tuple[int, int]] = set()
        seen_right: set[tuple[int, int]] = set()
        for u, v, c in self.edges:
            if not (0 <= u < self.a and 0 <= v < self.b and c >= 0):
                raise InputError(f"bad edge {(u, v, c)}")
            if (u, c) in seen_left or (v, c) in seen_right:
                raise InputError(f"color {c} repeats at a vertex")
            seen_left.add((u, c))
            seen_right.add((v, c))

    def num_colors(self) -> int:
        return 1 + max((c for _, _, c in self.edges), default=-1)

    def k_max(self) -> int:
        deg = [0] * self.a
        for u, _, _ in self.edges:
            deg[u] += 1
        return max(deg, default=0)

    def right_degrees(self) -> list[int]:
        deg = [0] * self.b
        for _, v, _ in self.edges:
            deg[v] += 1
        return deg

    def mu(self, q: float) -> float:
        """E|N_Q(U)| = sum of 1-(1-p*pc)^deg; exact because a right vertex's
        edges carry distinct left endpoints and distinct colors, making the
        per-edge survival events independent."""
        return sum(1.0 - (1.0 - q) ** d for d in self.right_degrees() if d)


def matching_instance(m: int) -> BipartiteInstance:
    return BipartiteInstance(f"matching-{m}", m, m,
                             tuple((i,) for i in range(m)))


def disjoint_stars_instance(hubs: int, k: int) -> BipartiteInstance:
    adj = tuple(tuple(range(i * k, (i + 1) * k)) for i in range(hubs))
    return BipartiteInstance(f"stars-{hubs}x{k}", hubs, hubs * k, adj)


def bounded_bipartite_instance(a: int, b: int, d: int,
                               seed: int) -> BipartiteInstance:
    if d > b:
        raise InputError("left degree cannot exceed |B|")
    rng = random.Random(seed)
    adj = tuple(tuple(sorted(rng.sample(range(b), d))) for _ in range(a))
    return BipartiteInstance(f"bounded-{a}x{b}-d{d}-s{seed}", a, b, adj)


def star_heavy_instance(a: int, b: int) -> BipartiteInstance:
    """One hub adjacent to all of B plus degree-1 fillers: max left degree
    equals |B|, violating the degree-cap hypothesis by construction."""
    adj = [tuple(range(b))]
    adj += [(i % b,) for i in range(1, a)]
    return BipartiteInstance(f"star-heavy-{a}x{b}", a, b, tuple(adj))


def complete_bipartite_instance(a: int, b: int) -> BipartiteInstance:
    return BipartiteInstance(f"complete-{a}x{b}", a, b,
                             tuple(tuple(range(b)) for _ in range(a)))


def colored_matching_instance(m: int) -> ColoredBipartiteInstance:
    return ColoredBipartiteInstance(f"colored-matching-{m}", m, m,
                                    tuple((i, i, i) for i in range(m)))


def colored_stars_instance(hubs: int, k: int) -> ColoredBipartiteInstance:
    """Disjoint stars with leaf j of every hub colored j: proper (leaves
    have degree one, hubs see each color once) with k colors total."""
    edges = tuple((i, i * k + j, j) for i in range(hubs) for j in range(k))
    return ColoredBipartiteInstance(f"colored-stars-{hubs}x{k}",
                                    hubs, hubs * k, edges)


# ---------------------------------------------------------------------------
# neighborhood-sampling estimators
# ---------------------------------------------------------------------------

def _pad_gather(groups: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
    """Pad ragged index groups to a rectangle plus validity mask."""
    width = max((len(g) for g in groups), default=0)
    idx = np.zeros((len(groups), max(1, width)), dtype=np.int64)
    ok = np.zeros_like(idx, dtype=bool)
    for row, g in enumerate(groups):
        for col, x in enumerate(g):
            idx[row, col] = x
            ok[row, col] = True
    return idx, ok


def _count_chunks(total: int, per_trial_cells: int,
                  cell_budget: int = 40_000_000) -> int:
    return max(1, min(total, cell_budget // max(1, per_trial_cells)))


def estimate_neighborhood_sampling(inst: BipartiteInstance, p: float,
                                   lam: float, trials: int,
                                   seed: int) -> TrialReport:
    """Sample U from A at rate p; count trials with |N(U)| at or below
    mu/(64*lam*log2(lam/p)) against the 2e^(-lam) bound.  The degree-cap
    hypothesis K <= mu/(32*lam*log2(lam/p)) is annotated, not enforced."""
    if not 0.0 < p <= 1.0:
        raise InputError("p must lie in (0, 1]")
    if lam <= 1.0:
        raise InputError("lam must exceed 1")
    if trials < 1:
        raise InputError("trials must be positive")
    t0 = time.perf_counter()
    mu = inst.mu(p)
    k = inst.k_max()
    ell2 = math.log2(lam / p)
    notes: list[str] = []
    hyp = mu > 0 and k <= mu / (32.0 * lam * ell2)
    if not hyp:
        notes.append(f"degree cap violated: K={k} > mu/(32 lam log2) "
                     f"= {mu / (32.0 * lam * ell2):.4f}")
    threshold = mu / (64.0 * lam * ell2)
    # count via the right side: reached[v] = any left neighbor sampled
    groups: list[list[int]] = [[] for _ in range(inst.b)]
    for u, nb in enumerate(inst.adj):
        for v in nb:
            groups[v].append(u)
    r_idx, r_ok = _pad_gather(groups)
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0xA1]))
    failures = 0
    chunk = _count_chunks(trials, inst.b * r_idx.shape[1])
    done = 0
    while done < trials:
        t = min(chunk, trials - done)
        u_mask = rng.random((t, inst.a)) < p
        reached = (u_mask[:, r_idx] & r_ok[None, :, :]).any(axis=2)
        counts = reached.sum(axis=1)
        failures += int((counts <= threshold).sum())
        done += t
    return _mk_report(f"neighborhood:{inst.name}:p={p}:lam={lam}",
                      trials, failures, 2.0 * math.exp(-lam), lam, seed,
                      hyp, notes, mu, threshold, t0)


def estimate_colored_sampling(inst: ColoredBipartiteInstance, p: float,
                              pc: float, lam: float, trials: int,
                              seed: int) -> TrialReport:
    """Sample U from A at p and colors Q at pc; count trials with |N_Q(U)|
    at or below mu/(64*lam*log2(lam/(p*pc))).  Hypothesis annotated:
    K + |A| <= mu/(128*lam*log2(lam/(p*pc)))."""
    if not (0.0 < p <= 1.0 and 0.0 < pc <= 1.0):
        raise InputError("p and pc must lie in (0, 1]")
    if lam <= 1.0:
        raise InputError("lam must exceed 1")
    if trials < 1:
        raise InputError("trials must be positive")
    t0 = time.perf_counter()
    q = p * pc
    mu = inst.mu(q)
    k = inst.k_max()
    ell2 = math.log2(lam / q)
    notes: list[str] = []
    cap = mu / (128.0 * lam * ell2) if ell2 > 0 else 0.0
    hyp = ell2 > 0 and mu > 0 and (k + inst.a) <= cap
    if not hyp:
        notes.append(f"hypothesis violated: K+|A|={k + inst.a} > {cap:.4f}")
    threshold = mu / (64.0 * lam * ell2) if ell2 > 0 else 0.0
    name = f"colored:{inst.name}:p={p}:pc={pc}:lam={lam}"
    nc = inst.num_colors()
    if p == 1.0 and pc == 1.0:
        reached = {v for _, v, _ in inst.edges}
        failures = trials if len(reached) <= threshold else 0
        notes.append("deterministic (p=pc=1): single evaluation")
        return _mk_report(name, trials, failures, 2.0 * math.exp(-lam),
                          lam, seed, hyp, notes, mu, threshold, t0)
    groups: list[list[tuple[int, int]]] = [[] for _ in range(inst.b)]
    for u, v, c in inst.edges:
        groups[v].append((u, c))
    u_grp = [[u for u, _ in g] for g in groups]
    c_grp = [[c for _, c in g] for g in groups]
    u_idx, ok = _pad_gather(u_grp)
    c_idx, _ = _pad_gather(c_grp)
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0xA2]))
    failures = 0
    chunk = _count_chunks(trials, inst.b * u_idx.shape[1])
    done = 0
    while done < trials:
        t = min(chunk, trials - done)
        u_mask = rng.random((t, inst.a)) < p
        q_mask = rng.random((t, nc)) < pc
        active = (u_mask[:, u_idx] & q_mask[:, c_idx] & ok[None, :, :])
        counts = active.any(axis=2).sum(axis=1)
        failures += int((counts <= threshold).sum())
        done += t
    return _mk_report(name, trials, failures, 2.0 * math.exp(-lam),
                      lam, seed, hyp, notes, mu, threshold, t0)


def estimate_master(cg: ColoredGraph, b_set, alpha: float,
                    config: SampleConfig, trials: int,
                    phi: ForbiddenMap | None = None) -> TrialReport:
    """Restricted-neighborhood expansion of a sampled subset of B.

    Per trial: U = p-sample of B, Q = pc-sample of the colors; success when
    |N_{Q,phi}(U) \\ B| reaches (|B|/4) * min(d*p*pc*alpha/(64*lam^5),
    (n/(2|B|))^(alpha/(1+alpha)) - 1) with d the average degree.  The
    hypothesis bullets are evaluated and annotated; the caller vouches for
    alpha-maximality of the host."""
    if trials < 1:
        raise InputError("trials must be positive")
    t0 = time.perf_counter()
    g = cg.graph
    n = g.n
    bs = sorted(set(b_set))
    if not bs or any(not 0 <= v < n for v in bs):
        raise InputError("B must be a nonempty subset of the vertices")
    p, pc, lam = config.p, config.pc, config.lam
    d_avg = 2.0 * g.num_edges() / n if n else 0.0
    notes: list[str] = []
    hyp = True
    if p * pc <= 0:
        hyp = False
        notes.append("p*pc = 0")
    else:
        if d_avg < lam ** 3 / (alpha * p * pc):
            hyp = False
            notes.append(f"degree too small: d={d_avg:.3f} < "
                         f"{lam ** 3 / (alpha * p * pc):.3f}")
        if not (2 * lam ** 6 / (p * pc) < len(bs) < n / 2):
            hyp = False
            notes.append(f"|B|={len(bs)} outside "
                         f"({2 * lam ** 6 / (p * pc):.3f}, {n / 2})")
    if phi is not None:
        worst = max((len(phi.colors_of(v)) + len(phi.vertices_of(v))
                     for v in range(n)), default=0)
        if worst > d_avg * alpha / 32.0:
            hyp = False
            notes.append(f"forbidden lists too large: {worst}")
    ratio = (n / (2.0 * len(bs))) ** (alpha / (1.0 + alpha)) - 1.0
    threshold = (len(bs) / 4.0) * min(
        d_avg * p * pc * alpha / (64.0 * lam ** 5), ratio)
    colors = sorted(cg.color_set())
    rng = random.Random((config.seed * 0x9E3779B1 + 17) & 0xFFFFFFFF)
    failures = 0
    for _ in range(trials):
        u = [v for v in bs if rng.random() < p]
        qs = [c for c in colors if rng.random() < pc]
        reach = cg.restricted_neighborhood(u, qs, phi)
        count = len(reach - set(bs))
        if count < threshold:
            failures += 1
    return _mk_report(f"master:n={n}:B={len(bs)}:lam={lam}", trials,
                      failures, 2.0 * math.exp(-lam), lam, config.seed,
                      hyp, notes, None, threshold, t0)


def estimate_reach(obj: ColoredGraph | RGraph, config: SampleConfig,
                   trials: int) -> TrialReport:
    """Frequency of reaching the n^(1-tau) target from a random source.

    Colored graphs: sprinkled vertex and color rounds feed the round-gated
    reach; the target counts vertices.  Hypergraphs: one vertex sample U per
    trial, the target counts faces reached by proper U-paths of length ell.
    p = 0 disables expansion entirely (the reach stays at the source), so
    the target is met only when it is at most 1.
    """
    if trials < 1:
        raise InputError("trials must be positive")
    t0 = time.perf_counter()
    ell, tau, p, pc = config.ell, config.tau, config.p, config.pc
    rng = random.Random((config.seed * 0x9E3779B1 + 29) & 0xFFFFFFFF)
    if isinstance(obj, RGraph):
        verts = sorted(obj.vertices())
        faces = obj.faces()
        if not faces:
            raise InputError("hypergraph has no faces")
        target = obj.num_faces() ** (1.0 - tau)
        steps = max(0, ell - (obj.r - 1))
        notes = ["hypothesis bullets asymptotic; reported only"]
        can_fan = obj.min_face_degree() > obj.r and ell >= obj.r - 1
        if not can_fan:
            notes.append("min face degree too small for the fan step; "
                         "reach counted as empty")
        failures = 0
        for _ in range(trials):
            root = faces[rng.randrange(len(faces))]
            if not can_fan:
                count = 0
            else:
                u = {v for v in verts if rng.random() < p} if p > 0 else set()
                reach = sampled_reach_faces(obj, root, [u] * steps, ell)
                count = len(reach.cumulative())
            if count < target:
                failures += 1
        return _mk_report(
            f"reach-faces:n={len(verts)}:ell={ell}:p={p}", trials, failures,
            2.0 * math.exp(-config.lam), config.lam, config.seed, False,
            tuple(notes), None, target, t0)
    g = obj.graph
    n = g.n
    colors = sorted(obj.color_set())
    target = n ** (1.0 - tau)
    qv = per_round_rate(p, max(1, ell - 1))
    qc = per_round_rate(pc, ell)
    failures = 0
    for _ in range(trials):
        root = rng.randrange(n)
        if p == 0.0:
            count = 1
        else:
            u_rounds = [{v for v in range(n) if rng.random() < qv}
                        for _ in range(ell - 1)]
            q_rounds = [{c for c in colors if rng.random() < qc}
                        for _ in range(ell)]
            reach = uq_reach(obj, root, u_rounds, q_rounds)
            count = len(reach.final)
        if count < target:
            failures += 1
    return _mk_report(
        f"reach:n={n}:ell={ell}:p={p}:pc={pc}", trials, failures,
        2.0 * math.exp(-config.lam), config.lam, config.seed, False,
        ("hypothesis bullets asymptotic; reported only",),
        None, target, t0)


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

CSV_COLUMNS = ("name", "trials", "successes", "failure_rate", "bound",
               "lam", "seed", "hypothesis_ok", "notes")


def reports_to_csv(reports: Sequence[TrialReport]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in reports:
        notes = ";".join(r.notes).replace(",", ";")
        lines.append(
            f"{r.name},{r.trials},{r.successes},{r.failure_rate:.8f},"
            f"{r.bound:.8f},{r.lam},{r.seed},{int(r.hypothesis_ok)},{notes}")
    return "\n".join(lines) + "\n"


def reports_to_document(reports: Sequence[TrialReport], suite: str,
                        seed: int) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "mc_summary",
        "suite": suite,
        "seed": seed,
        "reports": [r.to_document() for r in reports],
    }
