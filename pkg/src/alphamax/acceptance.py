"""End-to-end acceptance suites.

Each criterion function runs one self-contained suite and returns a
``CriterionResult`` whose ``details`` string is deterministic (no wall
times), so the emitted CSV is byte-identical across runs.  Elapsed time
is kept on the result object for runtime-budget assertions only.

``run_acceptance`` executes the ten primary criteria; ``mc_trends`` is a
smaller companion suite of Monte Carlo trend checks (monotonicity and
reduction sanity rather than bounds).
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .constructions import (
    _scan_subsets,
    embed_cycle_in_hypercube,
    hypercube_colored,
    random_short_cycle_free_3graph,
    validate_hypercube_embedding,
)
from .density import (
    alpha_max_subgraph_exact,
    alpha_max_subgraph_peel,
    check_expansion_bounds,
)
from .graphs import InputError, SimpleGraph, round_robin_coloring
from .hypergraphs import (
    RGraph,
    alpha_max_rgraph,
    mindeg_subhypergraph,
    verify_hypmax,
    vertex_face_degree_check,
)
from .montecarlo import (
    TrialReport,
    bounded_bipartite_instance,
    colored_matching_instance,
    estimate_chernoff_lower,
    estimate_colored_sampling,
    estimate_master,
    estimate_neighborhood_sampling,
    estimate_reach,
    disjoint_stars_instance,
    matching_instance,
    numeric_inequality_suite,
    reports_to_csv,
)
from .rainbow import (
    SampleConfig,
    find_one_subdivision,
    find_rainbow_cycle,
    find_rainbow_cycle_exact,
)
from .simplicial import (
    FaceCycleCert,
    FaceWalk,
    classify_surface,
    classify_walk,
    euler_characteristic,
    find_face_cycle,
    is_three_partite,
    path_between_face_set,
    split_cycle,
    walk_in_host,
)

__all__ = [
    "CriterionResult",
    "ACCEPTANCE_CRITERIA",
    "run_acceptance",
    "acceptance_csv",
    "mc_trends",
    "tight_cycle_cert",
    "random_cycle_corpus",
    "random_strip_cycle",
]

ALPHAS_GRAPH = (0.1, 0.25, 0.5)
ALPHAS_3GRAPH = (0.1, 0.25, 0.4)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: str
    elapsed: float = field(default=0.0, compare=False)


def _result(number: int, name: str, passed: bool, details: str,
            t0: float) -> CriterionResult:
    return CriterionResult(number, name, passed, details,
                           time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# shared generators
# ---------------------------------------------------------------------------

def _random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if rng.random() < p]
    return SimpleGraph(n, edges)


def _random_rgraph(n: int, r: int, p: float, seed: int) -> RGraph:
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), r)
             if rng.random() < p]
    return RGraph(r, edges)


def _near_complete_3graph(n: int, deletions: int, seed: int) -> RGraph:
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(n), 3))
    for _ in range(deletions):
        edges.pop(rng.randrange(len(edges)))
    return RGraph(3, edges)


def tight_cycle_cert(ell: int) -> FaceCycleCert:
    """Tight 3-uniform cycle of length ell on vertex set 0..ell-1."""
    faces = tuple(tuple(sorted((i % ell, (i + 1) % ell)))
                  for i in range(ell + 1))
    return FaceCycleCert.from_walk(FaceWalk(3, faces))


def _clean_strip(walk: FaceWalk) -> bool:
    """The ell triangles are distinct and share pairs only along the walk:
    consecutive triangles share exactly their common face, non-consecutive
    ones share no pair.  Exactly these cycles triangulate a cylinder or a
    Möbius strip; the definition also admits collapsed complexes."""
    tris = walk.edges()
    ell = len(tris)
    if len(set(tris)) != ell:
        return False
    share: dict[tuple[int, int], list[int]] = {}
    for i, t in enumerate(tris):
        for pr in itertools.combinations(t, 2):
            share.setdefault(pr, []).append(i)
    for pr, owners in share.items():
        if len(owners) > 2:
            return False
        if len(owners) == 2:
            i, j = owners
            if (j - i) % ell == 1:
                k = j
            elif (i - j) % ell == 1:
                k = i
            else:
                return False
            if pr != walk.faces[k]:
                return False
    return True


def random_strip_cycle(ell: int, rng: random.Random) -> FaceCycleCert:
    """Random cycle built the way the topology argument builds them: draw a
    random proper path of length ell, identify its end faces (in a random
    orientation), reject identifications that break the strip structure,
    and shuffle the labels."""
    while True:
        faces = [(0, 1)]
        cur = (0, 1)
        for step in range(ell):
            cur = (cur[rng.randrange(2)], step + 2)
            faces.append(tuple(sorted(cur)))
        cls = classify_walk(FaceWalk(3, tuple(faces)))
        if cls.kind != "path" or not cls.proper:
            continue
        newest = ell + 1
        kept = (set(faces[-1]) - {newest}).pop()
        options = [{kept: 0, newest: 1}, {kept: 1, newest: 0}]
        rng.shuffle(options)
        for ren in options:
            glued = [tuple(sorted(ren.get(v, v) for v in f))
                     for f in faces[:-1]]
            glued.append(glued[0])
            try:
                walk = FaceWalk(3, tuple(glued))
            except InputError:
                continue
            if classify_walk(walk).kind != "cycle" or not _clean_strip(walk):
                continue
            perm = list(range(ell))
            rng.shuffle(perm)
            lab = {v: perm[i]
                   for i, v in enumerate(sorted(walk.vertex_union()))}
            final = tuple(tuple(sorted(lab[v] for v in f))
                          for f in walk.faces)
            return FaceCycleCert.from_walk(FaceWalk(3, final))


def random_cycle_corpus(count: int, base_seed: int = 202,
                        distinct_edges: bool = False) -> list[
        tuple[FaceCycleCert, RGraph]]:
    """Valid random face cycles found by the exact searcher on small random
    hosts; deterministic for a fixed base seed.  ``distinct_edges`` keeps
    only cycles whose consecutive unions are pairwise distinct (a repeated
    union is legal for a cycle but rules out a simple hypercube embedding).
    """
    out: list[tuple[FaceCycleCert, RGraph]] = []
    seed = base_seed
    while len(out) < count:
        seed += 1
        rng = random.Random(seed)
        n = rng.randint(7, 10)
        host = _random_rgraph(n, 3, rng.uniform(0.35, 0.65), seed * 31 + 7)
        ell = rng.randint(5, 7)
        found = find_face_cycle(host, ell, mode="exact", budget=400_000)
        if found.status == "found" and found.cert is not None:
            edges = found.cert.walk.edges()
            if distinct_edges and len(set(edges)) != len(edges):
                continue
            out.append((found.cert, host))
    return out


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    """Exhaustive graph-maximality suite over the small-graph atlas."""
    t0 = time.perf_counter()
    from networkx.generators.atlas import graph_atlas_g
    atlas = graph_atlas_g()[1:]          # drop the empty placeholder
    graphs = 0
    checks = 0
    bad: list[str] = []
    for ag in atlas:
        nodes = sorted(ag.nodes())
        if len(nodes) > 7:
            continue
        relabel = {v: i for i, v in enumerate(nodes)}
        g = SimpleGraph(len(nodes),
                        [(relabel[u], relabel[v]) for u, v in ag.edges()])
        graphs += 1
        for alpha in ALPHAS_GRAPH:
            core_set, score = alpha_max_subgraph_exact(g, alpha)
            sub, _ = g.induced_subgraph(sorted(core_set))
            checks += 1
            if sub.num_edges() > 0 and score.c < 0.5 - 1e-12:
                bad.append(f"(i) c={score.c:.4f} graph#{graphs} a={alpha}")
                continue
            d_half = score.c * sub.n ** alpha / 2.0 if sub.n else 0.0
            if any(sub.degree(v) < d_half - 1e-9 for v in range(sub.n)):
                bad.append(f"(ii) graph#{graphs} a={alpha}")
                continue
            for size in range(1, sub.n // 2 + 1):
                for xs in itertools.combinations(range(sub.n), size):
                    rep = check_expansion_bounds(sub, alpha, xs)
                    if not rep.edge_bound_ok:
                        bad.append(f"(iii) graph#{graphs} a={alpha} X={xs}")
                    if not rep.vertex_bound_ok:
                        bad.append(f"(iv) graph#{graphs} a={alpha} X={xs}")
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    details = (f"{graphs} graphs x {len(ALPHAS_GRAPH)} alphas, "
               f"{checks} extractions, violations={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(1, "graph-maximality-suite", not bad, details, t0)


def criterion_2() -> CriterionResult:
    """Hypergraph-maximality suite on 200 random sparse 3-graphs."""
    t0 = time.perf_counter()
    bad: list[str] = []
    checks = 0
    for idx in range(200):
        rng = random.Random(1000 + idx)
        n = rng.randint(6, 9)
        k = rng.randint(3, 12)
        triples = list(itertools.combinations(range(n), 3))
        g = RGraph(3, rng.sample(triples, min(k, len(triples))))
        for alpha in ALPHAS_3GRAPH:
            sub, _score = alpha_max_rgraph(g, alpha, mode="exact")
            verdict = verify_hypmax(sub, alpha, mode="exact")
            checks += 1
            if not verdict.ok:
                bad.append(f"inst#{idx} a={alpha}: {verdict.failures[:1]}")
                break
        if bad:
            break
    details = (f"200 hosts x {len(ALPHAS_3GRAPH)} alphas, {checks} verdicts, "
               f"violations={len(bad)}" + (f" first={bad[0]}" if bad else ""))
    return _result(2, "hypergraph-maximality-suite", not bad, details, t0)


def criterion_3() -> CriterionResult:
    """Coordinate-colored hypercubes admit no rainbow cycle."""
    t0 = time.perf_counter()
    bad: list[str] = []
    for m in (2, 3, 4):
        q = hypercube_colored(m)
        exact = find_rainbow_cycle_exact(q)
        if exact.status != "none":
            bad.append(f"exact m={m}: {exact.status}")
        heur = find_rainbow_cycle(q, retries=32)
        if heur.status != "none":
            bad.append(f"heuristic m={m}: {heur.status}")
    details = f"m in {{2,3,4}}, false positives={len(bad)}" + (
        f" {bad}" if bad else "")
    return _result(3, "rainbow-free-hypercube", not bad, details, t0)


def criterion_4() -> CriterionResult:
    """Topology of generated cycles: Euler characteristic, splitting,
    surface parity on 3-partite instances."""
    t0 = time.perf_counter()
    rng = random.Random(404)
    suite: list[FaceCycleCert] = [tight_cycle_cert(ell)
                                  for ell in range(5, 15)]
    suite += [random_strip_cycle(rng.randint(5, 14), rng)
              for _ in range(50)]
    bad: list[str] = []
    partite_checked = 0
    for k, cert in enumerate(suite):
        walk = cert.walk
        ell = walk.length
        if euler_characteristic(cert) != 0:
            bad.append(f"#{k}: euler != 0")
            continue
        p1, p2 = split_cycle(cert)
        for p in (p1, p2):
            if classify_walk(p.walk).kind != "path" or not p.proper:
                bad.append(f"#{k}: split arc not a proper path")
        if p1.internal_vertices() & p2.internal_vertices():
            bad.append(f"#{k}: split arcs share internal vertices")
        if is_three_partite(cert) is not None:
            partite_checked += 1
            want = "cylinder" if ell % 2 == 0 else "mobius"
            got = classify_surface(cert)
            if got != want:
                bad.append(f"#{k}: ell={ell} classified {got}, want {want}")
        if bad:
            break
    details = (f"{len(suite)} cycles (10 tight + 50 random), "
               f"{partite_checked} three-partite classified, "
               f"mismatches={len(bad)}" + (f" first={bad[0]}" if bad else ""))
    return _result(4, "cycle-topology", not bad, details, t0)


def criterion_5() -> CriterionResult:
    """Cleaning: min face degree and vertex face-degree cap on 200 random
    hosts of uniformity 3 and 4."""
    t0 = time.perf_counter()
    bad: list[str] = []
    done = 0
    for idx in range(200):
        rng = random.Random(5000 + idx)
        r = 3 if idx % 2 == 0 else 4
        n = rng.randint(8, 14) if r == 3 else rng.randint(8, 12)
        p = rng.uniform(0.08, 0.5)
        g = _random_rgraph(n, r, p, 5100 + idx)
        if g.num_edges() == 0:
            continue
        done += 1
        cleaned = mindeg_subhypergraph(g)
        need = g.average_face_degree() / r
        if cleaned.num_edges() == 0:
            bad.append(f"inst#{idx}: cleaned to empty")
            break
        if cleaned.min_face_degree() < need - 1e-12:
            bad.append(f"inst#{idx}: min face degree "
                       f"{cleaned.min_face_degree()} < {need:.4f}")
            break
        rep = vertex_face_degree_check(cleaned, need)
        if not rep.ok:
            bad.append(f"inst#{idx}: vertex degree cap fails")
            break
    details = (f"{done} nonempty hosts cleaned, violations={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(5, "cleaning-degree-bounds", not bad, details, t0)


def _c6_instances() -> list[tuple[RGraph, int]]:
    out: list[tuple[RGraph, int]] = []
    out.append((_near_complete_3graph(26, 0, 0), 4))
    for s in range(12):
        out.append((_near_complete_3graph(27, 1, 600 + s), 4))
    for s in range(12):
        out.append((_near_complete_3graph(28, 2, 640 + s), 4))
    out.append((_near_complete_3graph(32, 0, 0), 5))
    for s in range(12):
        out.append((_near_complete_3graph(33, 1, 680 + s), 5))
    for s in range(12):
        out.append((_near_complete_3graph(34, 2, 720 + s), 5))
    return out


def criterion_6() -> CriterionResult:
    """Fixed-length paths between face-set members succeed on every host
    meeting the |F| >= 2 r ell p/d hypothesis."""
    t0 = time.perf_counter()
    bad: list[str] = []
    ran = 0
    for k, (g, ell) in enumerate(_c6_instances()):
        cleaned = mindeg_subhypergraph(g)
        d = cleaned.min_face_degree()
        fs = cleaned.faces()
        if len(fs) < 2 * cleaned.r * ell * cleaned.num_faces() / d:
            bad.append(f"inst#{k}: hypothesis not met (construction bug)")
            break
        ran += 1
        res = path_between_face_set(cleaned, fs, ell, seed=k)
        if res.cert is None:
            bad.append(f"inst#{k}: no path (ell={ell})")
            break
        if not res.hypothesis_ok:
            bad.append(f"inst#{k}: hypothesis flag off")
            break
        ends = res.cert.endpoints()
        if not (ends[0] in fs and ends[1] in fs and res.cert.proper
                and res.cert.length == ell
                and walk_in_host(cleaned, res.cert.walk)):
            bad.append(f"inst#{k}: certificate invalid")
            break
    details = (f"{ran} of 50 hosts searched, failures={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(6, "face-set-paths", not bad, details, t0)


def _c7_bipartite_instances():
    insts = [matching_instance(m) for m in (600, 900, 1200, 1500)]
    insts += [disjoint_stars_instance(600, k) for k in (2, 4, 8)]
    insts += [bounded_bipartite_instance(1200, 1200, 2, 71),
              bounded_bipartite_instance(1200, 1200, 3, 72),
              bounded_bipartite_instance(1400, 1400, 3, 73)]
    return insts


def criterion_7() -> CriterionResult:
    """Monte Carlo bounds: sampled-neighborhood failure rates within
    2e^-lam + 3 sigma on hypothesis-satisfying instances; Chernoff
    lower-tail; the numeric inequality grid."""
    t0 = time.perf_counter()
    bad: list[str] = []
    p = 0.5
    trials = 10_000
    ran = 0
    for inst in _c7_bipartite_instances():
        for lam in (2.0, 3.0):
            rep = estimate_neighborhood_sampling(inst, p, lam, trials,
                                                 seed=4242)
            if not rep.hypothesis_ok:
                bad.append(f"{inst.name} lam={lam}: hypothesis unmet "
                           "(instance construction bug)")
                break
            ran += 1
            if not rep.within_bound():
                bad.append(f"{inst.name} lam={lam}: rate "
                           f"{rep.failure_rate:.5f} > bound+slack")
                break
        if bad:
            break
    for mu in (4, 8, 16):
        rep = estimate_chernoff_lower(mu, 100_000, seed=777)
        if not rep.within_bound():
            bad.append(f"chernoff mu={mu}: {rep.failure_rate:.5f}")
    ineq = numeric_inequality_suite()
    for res in ineq:
        if not res.passed:
            bad.append(f"inequality {res.name}: "
                       f"{len(res.violations)} violations")
    details = (f"{ran} instance/lam runs at 1e4 trials, chernoff mu in "
               f"{{4,8,16}}, grid "
               + ";".join(f"{r.name}:{r.checked}ok/{r.skipped}skip"
                          for r in ineq)
               + f", failures={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(7, "monte-carlo-bounds", not bad, details, t0)


def criterion_8() -> CriterionResult:
    """Constructions certify: deletion 3-graphs re-scan clean; hypercube
    embeddings are valid."""
    t0 = time.perf_counter()
    bad: list[str] = []
    scans = 0
    for n, alpha in ((30, 0.34), (40, 0.25)):
        cap = int(1.0 / alpha)
        for seed in range(10):
            res = random_short_cycle_free_3graph(n, alpha, seed)
            scans += 1
            if not res.certified:
                bad.append(f"(n={n},a={alpha},s={seed}) not certified")
                break
            edge_set = set(res.rgraph.edges)
            found = sum(_scan_subsets(n, ell, edge_set)
                        for ell in range(4, cap + 1))
            if found:
                bad.append(f"(n={n},a={alpha},s={seed}) re-scan found "
                           f"{found} short cycles")
                break
        if bad:
            break
    rng = random.Random(808)
    cycles = [tight_cycle_cert(ell) for ell in range(5, 15)]
    cycles += [random_strip_cycle(rng.randint(5, 10), rng)
               for _ in range(10)]
    embedded = 0
    for k, cert in enumerate(cycles):
        try:
            edges = embed_cycle_in_hypercube(cert)
        except Exception as exc:            # embedding must not reject valid cycles
            bad.append(f"embedding #{k}: {exc}")
            break
        m = max(cert.walk.vertex_union()) + 1
        if not validate_hypercube_embedding(edges, cert, m):
            bad.append(f"embedding #{k}: invalid")
            break
        embedded += 1
    details = (f"{scans} deletion re-scans clean, {embedded}/20 embeddings "
               f"valid, failures={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(8, "construction-certification", not bad, details, t0)


def _subdivision_oracle(g: SimpleGraph) -> bool:
    """Independent exhaustive search for a one-step subdivision on three
    branches: six distinct vertices a,m1,b,m2,c,m3 in cyclic adjacency."""
    n = g.n
    for a, b, c in itertools.combinations(range(n), 3):
        rest = [v for v in range(n) if v not in (a, b, c)]
        for m1, m2, m3 in itertools.permutations(rest, 3):
            if (g.has_edge(a, m1) and g.has_edge(m1, b)
                    and g.has_edge(b, m2) and g.has_edge(m2, c)
                    and g.has_edge(c, m3) and g.has_edge(m3, a)):
                return True
    return False


def criterion_9() -> CriterionResult:
    """Heuristics never contradict exact oracles."""
    t0 = time.perf_counter()
    bad: list[str] = []
    # (a) one-step subdivision finder vs brute force, n <= 9, t = 3
    sub_cases = 0
    for idx in range(60):
        rng = random.Random(9000 + idx)
        n = rng.randint(5, 9)
        g = _random_graph(n, rng.uniform(0.2, 0.75), 9100 + idx)
        want = _subdivision_oracle(g)
        cert = find_one_subdivision(g, 3)
        sub_cases += 1
        if (cert is not None) != want:
            bad.append(f"subdivision inst#{idx}: finder="
                       f"{cert is not None} oracle={want}")
            break
        if cert is not None and not _validate_sub3(g, cert):
            bad.append(f"subdivision inst#{idx}: invalid certificate")
            break
    # (b) pipeline cycle certificates re-validate
    pipe_found = 0
    if not bad:
        for idx in range(12):
            rng = random.Random(9500 + idx)
            n = rng.randint(12, 16)
            host = _random_rgraph(n, 3, rng.uniform(0.5, 0.8), 9600 + idx)
            ell = rng.choice((5, 6))
            found = find_face_cycle(host, ell, mode="pipeline", seed=idx,
                                    retries=8)
            if found.status == "found" and found.cert is not None:
                pipe_found += 1
                walk = found.cert.walk
                if (classify_walk(walk).kind != "cycle"
                        or walk.length != ell
                        or not walk_in_host(host, walk)):
                    bad.append(f"pipeline inst#{idx}: certificate invalid")
                    break
            else:
                bad.append(f"pipeline inst#{idx}: no certificate "
                           f"(status {found.status})")
                break
    # (c) peel score equals exact score, n <= 14
    peel_cases = 0
    if not bad:
        corpora: list[SimpleGraph] = []
        for idx in range(60):
            rng = random.Random(9800 + idx)
            n = rng.randint(4, 14)
            corpora.append(_random_graph(n, rng.uniform(0.15, 0.9),
                                         9900 + idx))
        for g in corpora:
            for alpha in ALPHAS_GRAPH:
                _, exact_score = alpha_max_subgraph_exact(g, alpha)
                _, peel_score = alpha_max_subgraph_peel(g, alpha)
                peel_cases += 1
                rel = abs(peel_score.score - exact_score.score)
                if rel > 1e-9 * max(1.0, exact_score.score):
                    bad.append(f"peel mismatch n={g.n} a={alpha}: "
                               f"{peel_score.score} vs {exact_score.score}")
                    break
            if bad:
                break
    details = (f"{sub_cases} subdivision hosts, {pipe_found} pipeline certs, "
               f"{peel_cases} peel-vs-exact scores, "
               f"contradictions={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(9, "oracle-equivalence", not bad, details, t0)


def _validate_sub3(g: SimpleGraph, cert) -> bool:
    from .rainbow import validate_subdivision
    return validate_subdivision(g, cert)


def criterion_10() -> CriterionResult:
    """Byte-identical artifacts across three runs of every randomized
    subcommand exercised here."""
    import tempfile
    from pathlib import Path

    from . import cli
    from .graphs import save_edge_list
    from .hypergraphs import save_hyperedge_list

    t0 = time.perf_counter()
    bad: list[str] = []
    with tempfile.TemporaryDirectory() as td:
        base = Path(td)
        k5 = base / "k5.colored"
        k5.write_text(save_edge_list(round_robin_coloring(5)))
        host = base / "host.hyper"
        host.write_text(save_hyperedge_list(_random_rgraph(12, 3, 0.7, 84)))
        commands: list[list[str]] = [
            ["construct", "3graph", "--n", "30", "--alpha", "0.34",
             "--seed", "5"],
            ["construct", "girth", "--n", "60", "--ell", "1", "--seed", "3"],
            ["mc", "neighborhood", "--instance", "matching-600",
             "--p", "0.5", "--lambda", "2", "--trials", "2000",
             "--seed", "9"],
            ["rainbow-cycle", "--input", str(k5), "--mode", "heuristic",
             "--seed", "11"],
            ["hcycle", "--input", str(host), "--ell", "5",
             "--mode", "pipeline", "--seed", "13"],
        ]
        for ci, argv in enumerate(commands):
            digests: list[str] = []
            for run_idx in range(3):
                outdir = base / f"cmd{ci}-run{run_idx}"
                outdir.mkdir()
                code = cli.main(argv + ["--output", str(outdir)])
                if code not in (0, 1):
                    bad.append(f"cmd#{ci} exit={code}")
                    break
                h = hashlib.sha256()
                for f in sorted(outdir.rglob("*")):
                    if f.is_file():
                        h.update(f.name.encode())
                        h.update(f.read_bytes())
                digests.append(h.hexdigest())
            if bad:
                break
            if len(set(digests)) != 1:
                bad.append(f"cmd#{ci} artifacts differ across runs")
                break
    details = (f"5 commands x 3 runs, mismatches={len(bad)}"
               + (f" first={bad[0]}" if bad else ""))
    return _result(10, "determinism", not bad, details, t0)


ACCEPTANCE_CRITERIA: tuple[tuple[int, Callable[[], CriterionResult]], ...] = (
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6),
    (7, criterion_7),
    (8, criterion_8),
    (9, criterion_9),
    (10, criterion_10),
)


def run_acceptance(numbers: Iterable[int] | None = None
                   ) -> list[CriterionResult]:
    wanted = set(numbers) if numbers is not None else None
    out = []
    for num, fn in ACCEPTANCE_CRITERIA:
        if wanted is None or num in wanted:
            out.append(fn())
    return out


def acceptance_csv(results: Sequence[CriterionResult]) -> str:
    lines = ["criterion,name,passed,details"]
    for r in results:
        details = r.details.replace(",", ";")
        lines.append(f"{r.number},{r.name},{int(r.passed)},{details}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Monte Carlo trend suite
# ---------------------------------------------------------------------------

def mc_trends(seed: int = 7) -> tuple[list[TrialReport], list[str]]:
    """Trend checks: reach success monotone in p; master failure rate
    non-increasing in lam; colored estimator reduces to the uncolored one
    at pc=1.  Returns the reports plus human-readable verdict lines.

    The reach host is a fixed random 3-graph sparse enough that the fan
    alone misses the face-count target, so the per-round vertex gate (and
    hence p) genuinely drives the success frequency.  The master instance
    runs at a stressed sampling rate where failures actually occur; its
    threshold shrinks with lam, so the rate is non-increasing."""
    verdicts: list[str] = []
    reports: list[TrialReport] = []

    host = _random_rgraph(18, 3, 0.55, 4007)
    grid = (0.2, 0.4, 0.7, 1.0)
    rates = []
    for p in grid:
        cfg = SampleConfig(p=p, pc=1.0, lam=2.0, ell=4, tau=0.25,
                           seed=seed)
        rep = estimate_reach(host, cfg, trials=300)
        reports.append(rep)
        rates.append(1.0 - rep.failure_rate)
    tol = 3.0 * math.sqrt(0.25 / 300) + 1e-3
    mono = all(rates[i + 1] >= rates[i] - tol for i in range(len(rates) - 1))
    verdicts.append(f"reach-monotone-p:{'pass' if mono else 'FAIL'}:"
                    + "/".join(f"{x:.3f}" for x in rates))

    big = round_robin_coloring(24)
    fail_rates = []
    for lam in (1.0, 2.0, 3.0):
        cfg = SampleConfig(p=0.4, pc=0.4, lam=lam, ell=3, tau=0.3, seed=seed)
        rep = estimate_master(big, range(6), 0.3, cfg, trials=400)
        reports.append(rep)
        fail_rates.append(rep.failure_rate)
    tol = 3.0 * math.sqrt(0.25 / 400) + 1e-3
    dec = all(fail_rates[i + 1] <= fail_rates[i] + tol
              for i in range(len(fail_rates) - 1))
    verdicts.append(f"master-lam-trend:{'pass' if dec else 'FAIL'}:"
                    + "/".join(f"{x:.3f}" for x in fail_rates))

    plain = estimate_neighborhood_sampling(matching_instance(800), 0.5, 2.0,
                                           4000, seed)
    colored = estimate_colored_sampling(colored_matching_instance(800), 0.5,
                                        1.0, 2.0, 4000, seed + 1)
    reports += [plain, colored]
    diff = abs(plain.failure_rate - colored.failure_rate)
    tol = 3.0 * math.sqrt(0.25 / 4000) + 1e-3
    verdicts.append(
        f"colored-reduction:{'pass' if diff <= tol else 'FAIL'}:{diff:.4f}")
    return reports, verdicts


def mc_trends_csv(seed: int = 7) -> str:
    reports, verdicts = mc_trends(seed)
    body = reports_to_csv(reports)
    tail = "".join(f"# {v}\n" for v in verdicts)
    return body + tail
