"""Command-line entry point.

One binary dispatches every operation: density extraction and verification
(graphs and r-graphs), rainbow cycle / subdivision search, face-cycle search
and classification, the explicit constructions, the Monte Carlo estimators,
and the acceptance / trend report suites.

Exit codes: 0 found or success, 1 nothing found (or a red report), 2 input
error, 3 indeterminate (search budget exhausted).  Artifacts are JSON with
sorted keys (plus fixed-column CSV), carry the seed that produced them, and
are byte-identical for identical (config, seed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .density import (
    EXACT_VERTEX_CAP,
    alpha_max_subgraph_exact,
    alpha_max_subgraph_peel,
)
from .graphs import (
    ColoredGraph,
    InputError,
    SimpleGraph,
    graph_digest,
    graph_from_document,
    graph_to_document,
    load_edge_list,
    round_robin_coloring,
    save_edge_list,
)
from .hypergraphs import (
    EXACT_EDGE_CAP,
    RGraph,
    alpha_max_rgraph,
    load_hyperedge_list,
    rgraph_digest,
    rgraph_from_document,
    rgraph_to_document,
    save_hyperedge_list,
    verify_hypmax,
)
from .montecarlo import (
    bounded_bipartite_instance,
    colored_matching_instance,
    colored_stars_instance,
    complete_bipartite_instance,
    disjoint_stars_instance,
    estimate_chernoff_lower,
    estimate_colored_sampling,
    estimate_master,
    estimate_neighborhood_sampling,
    estimate_reach,
    matching_instance,
    numeric_inequality_suite,
    reports_to_csv,
    reports_to_document,
    star_heavy_instance,
)
from .rainbow import (
    SampleConfig,
    cycle_to_document as rainbow_cycle_to_document,
    find_large_subdivision,
    find_rainbow_cycle,
    find_rainbow_cycle_exact,
    find_rainbow_subdivision,
    subdivision_from_document,
    subdivision_to_document,
    validate_rainbow_cycle,
    validate_subdivision,
)
from .simplicial import (
    cycle_from_document as face_cycle_from_document,
    cycle_to_document as face_cycle_to_document,
    classify_surface,
    euler_characteristic,
    find_face_cycle,
    is_three_partite,
)
from .constructions import (
    deletion_log_to_document,
    hypercube_colored,
    random_high_girth_graph,
    random_short_cycle_free_3graph,
)

__all__ = ["RunConfig", "run", "main", "DATA_DIR_ENV"]

DATA_DIR_ENV = "ALPHAMAX_DATA_DIR"
DEFAULT_SEED = 0


@dataclass
class RunConfig:
    """Parsed invocation: subcommand, verb (for construct/mc/report), paths,
    seed, and the numeric knobs of the target operation."""

    subcommand: str
    verb: str | None = None
    input: str | None = None
    output: str | None = None
    seed: int = DEFAULT_SEED
    alpha: float | None = None
    ell: int | None = None
    t: int | None = None
    p: float | None = None
    pc: float | None = None
    lam: float | None = None
    tau: float | None = None
    trials: int | None = None
    retries: int | None = None
    mode: str | None = None
    m: int | None = None
    n: int | None = None
    mu: int | None = None
    instance: str | None = None


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, "."))


def _out_dir(config: RunConfig) -> Path:
    out = Path(config.output) if config.output else _data_dir()
    out.mkdir(parents=True, exist_ok=True)
    return out


def _read_input(config: RunConfig) -> str:
    if not config.input:
        raise InputError("this subcommand requires --input")
    path = Path(config.input)
    if not path.exists():
        alt = _data_dir() / config.input
        if alt.exists():
            path = alt
        else:
            raise InputError(f"input file not found: {config.input}")
    return path.read_text()


def _write_json(outdir: Path, name: str, doc: dict) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    (outdir / name).write_text(text)


def _write_text(outdir: Path, name: str, text: str) -> None:
    (outdir / name).write_text(text)


def _load_graph(config: RunConfig) -> SimpleGraph | ColoredGraph:
    g, _ = load_edge_list(_read_input(config))
    return g


def _load_colored(config: RunConfig) -> ColoredGraph:
    g = _load_graph(config)
    if not isinstance(g, ColoredGraph):
        raise InputError("this subcommand needs a colored edge list "
                         "(three columns: u v color)")
    return g


def _load_rgraph(config: RunConfig) -> RGraph:
    g, _ = load_hyperedge_list(_read_input(config))
    return g


def _sample_config(config: RunConfig, **overrides) -> SampleConfig:
    kwargs = dict(seed=config.seed)
    if config.p is not None:
        kwargs["p"] = config.p
    if config.pc is not None:
        kwargs["pc"] = config.pc
    if config.lam is not None:
        kwargs["lam"] = config.lam
    if config.tau is not None:
        kwargs["tau"] = config.tau
    if config.ell is not None:
        kwargs["ell"] = config.ell
    kwargs.update(overrides)
    return SampleConfig(**kwargs)


def _fmt(x: float) -> str:
    return repr(round(float(x), 10))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_extract(config: RunConfig) -> int:
    g = _load_graph(config)
    plain = g.graph if isinstance(g, ColoredGraph) else g
    alpha = config.alpha if config.alpha is not None else 0.25
    mode = config.mode or "auto"
    if mode == "auto":
        mode = "exact" if plain.n <= EXACT_VERTEX_CAP else "peel"
    if mode == "exact":
        subset, score = alpha_max_subgraph_exact(plain, alpha)
    elif mode == "peel":
        subset, score = alpha_max_subgraph_peel(plain, alpha)
    else:
        raise InputError(f"unknown extract mode {mode!r}")
    doc = {
        "kind": "extraction",
        "format_version": 1,
        "alpha": alpha,
        "mode": mode,
        "subset": sorted(subset),
        "nvertices": score.nvertices,
        "nedges": score.nedges,
        "score": score.score,
        "c": score.c,
        "seed": config.seed,
        "host_digest": graph_digest(plain),
    }
    _write_json(_out_dir(config), "extract.json", doc)
    print(f"subset {sorted(subset)} score {_fmt(score.score)}")
    return 0


def _cmd_hextract(config: RunConfig) -> int:
    g = _load_rgraph(config)
    alpha = config.alpha if config.alpha is not None else 0.25
    mode = config.mode or "auto"
    if mode == "auto":
        mode = "exact" if g.num_edges() <= EXACT_EDGE_CAP else "peel"
    sub, score = alpha_max_rgraph(g, alpha, mode=mode)
    doc = {
        "kind": "hextraction",
        "format_version": 1,
        "alpha": alpha,
        "mode": mode,
        "edges": [list(e) for e in sub.edges],
        "num_faces": sub.num_faces(),
        "num_edges": sub.num_edges(),
        "score": score.score,
        "c": score.c,
        "seed": config.seed,
        "host_digest": rgraph_digest(g),
    }
    _write_json(_out_dir(config), "hextract.json", doc)
    print(f"{sub.num_edges()} edges on {sub.num_faces()} faces, "
          f"score {_fmt(score.score)}")
    return 0


def _cmd_hverify(config: RunConfig) -> int:
    g = _load_rgraph(config)
    alpha = config.alpha if config.alpha is not None else 0.25
    verdict = verify_hypmax(g, alpha, mode=config.mode or "auto",
                            samples=config.trials or 200, seed=config.seed)
    doc = {
        "kind": "hypmax_verdict",
        "format_version": 1,
        "alpha": alpha,
        "ok": verdict.ok,
        "c": verdict.c,
        "c_ok": verdict.c_ok,
        "degree_ok": verdict.degree_ok,
        "expansion_ok": verdict.expansion_ok,
        "checked_sets": verdict.checked_sets,
        "failures": [str(f) for f in verdict.failures],
        "seed": config.seed,
        "host_digest": rgraph_digest(g),
    }
    _write_json(_out_dir(config), "hverify.json", doc)
    print("maximal" if verdict.ok else f"not maximal: {verdict.failures[:1]}")
    return 0 if verdict.ok else 1


def _cmd_rainbow_cycle(config: RunConfig) -> int:
    cg = _load_colored(config)
    mode = config.mode or "heuristic"
    if mode == "exact":
        res = find_rainbow_cycle_exact(cg)
    elif mode == "heuristic":
        res = find_rainbow_cycle(cg, config=_sample_config(config),
                                 retries=config.retries or 32)
    else:
        raise InputError(f"unknown rainbow-cycle mode {mode!r}")
    doc = {
        "kind": "rainbow_cycle_search",
        "format_version": 1,
        "mode": mode,
        "status": res.status,
        "seed": config.seed,
        "notes": list(res.notes),
        "host_digest": graph_digest(cg.graph),
    }
    if res.status == "found":
        doc["bundle"] = {
            "host": graph_to_document(cg),
            "cert": rainbow_cycle_to_document(res.cycle, cg),
        }
    _write_json(_out_dir(config), "rainbow_cycle.json", doc)
    print(res.status if res.status != "found"
          else f"found cycle of length {len(res.cycle) - 1}")
    return {"found": 0, "none": 1, "indeterminate": 3}[res.status]


def _cmd_rainbow_subdivision(config: RunConfig) -> int:
    cg = _load_colored(config)
    t = config.t if config.t is not None else 3
    cert = find_rainbow_subdivision(cg, t, config=_sample_config(config),
                                    retries=config.retries or 8)
    doc = {
        "kind": "rainbow_subdivision_search",
        "format_version": 1,
        "t": t,
        "status": "found" if cert is not None else "none",
        "seed": config.seed,
        "host_digest": graph_digest(cg.graph),
    }
    if cert is not None:
        doc["bundle"] = {
            "host": graph_to_document(cg),
            "cert": subdivision_to_document(cert, cg),
            "rainbow": True,
        }
    _write_json(_out_dir(config), "rainbow_subdivision.json", doc)
    print(doc["status"])
    return 0 if cert is not None else 1


def _cmd_large_subdivision(config: RunConfig) -> int:
    cg = _load_colored(config)
    alpha = config.alpha if config.alpha is not None else 0.25
    ell = config.ell if config.ell is not None else 4
    t = config.t if config.t is not None else 3
    cert = find_large_subdivision(cg, alpha, ell, t,
                                  config=_sample_config(config),
                                  retries=config.retries or 8)
    doc = {
        "kind": "large_subdivision_search",
        "format_version": 1,
        "alpha": alpha,
        "ell": ell,
        "t": t,
        "status": "found" if cert is not None else "none",
        "seed": config.seed,
        "host_digest": graph_digest(cg.graph),
    }
    if cert is not None:
        doc["bundle"] = {
            "host": graph_to_document(cg),
            "cert": subdivision_to_document(cert, cg),
            "rainbow": True,
        }
    _write_json(_out_dir(config), "large_subdivision.json", doc)
    print(doc["status"])
    return 0 if cert is not None else 1


def _cmd_hcycle(config: RunConfig) -> int:
    g = _load_rgraph(config)
    if config.ell is None:
        raise InputError("hcycle requires --ell")
    mode = config.mode or "exact"
    res = find_face_cycle(g, config.ell, mode=mode, seed=config.seed,
                          retries=config.retries or 32)
    doc = {
        "kind": "face_cycle_search",
        "format_version": 1,
        "ell": config.ell,
        "mode": mode,
        "status": res.status,
        "seed": config.seed,
        "notes": list(res.notes),
        "host_digest": rgraph_digest(g),
    }
    if res.status == "found":
        doc["bundle"] = {
            "host": rgraph_to_document(g),
            "cert": face_cycle_to_document(res.cert, g),
        }
    _write_json(_out_dir(config), "face_cycle.json", doc)
    print(res.status)
    return {"found": 0, "none": 1, "indeterminate": 3}[res.status]


def _load_bundle(config: RunConfig) -> dict:
    try:
        doc = json.loads(_read_input(config))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("expected a JSON object")
    bundle = doc.get("bundle", doc)
    if not isinstance(bundle, dict) or "cert" not in bundle:
        raise InputError("document carries no certificate bundle")
    return bundle


def _cmd_validate(config: RunConfig) -> int:
    bundle = _load_bundle(config)
    cert_doc = bundle["cert"]
    kind = cert_doc.get("kind")
    host_doc = bundle.get("host")
    if host_doc is None:
        raise InputError("bundle carries no host")
    if kind == "face_cycle":
        host = rgraph_from_document(host_doc)
        face_cycle_from_document(cert_doc, host)   # raises InputError if bad
    elif kind == "rainbow_cycle":
        host = graph_from_document(host_doc)
        if not isinstance(host, ColoredGraph):
            raise InputError("rainbow cycle certificate needs a colored host")
        if cert_doc.get("host_digest") != graph_digest(host.graph):
            raise InputError("certificate host digest mismatch")
        cycle = [int(v) for v in cert_doc["vertices"]]
        if not validate_rainbow_cycle(host, cycle):
            raise InputError("rainbow cycle certificate does not validate")
    elif kind == "subdivision":
        host = graph_from_document(host_doc)
        cert = subdivision_from_document(cert_doc)
        plain = host.graph if isinstance(host, ColoredGraph) else host
        if cert_doc.get("host_digest") != graph_digest(plain):
            raise InputError("certificate host digest mismatch")
        if not validate_subdivision(host, cert,
                                    rainbow=bool(bundle.get("rainbow"))):
            raise InputError("subdivision certificate does not validate")
    else:
        raise InputError(f"unknown certificate kind {kind!r}")
    print("valid")
    return 0


def _cmd_classify(config: RunConfig) -> int:
    bundle = _load_bundle(config)
    cert_doc = bundle["cert"]
    if cert_doc.get("kind") != "face_cycle":
        raise InputError("classify expects a face_cycle certificate")
    host = (rgraph_from_document(bundle["host"])
            if bundle.get("host") else None)
    cert = face_cycle_from_document(cert_doc, host)
    partite = is_three_partite(cert)
    doc = {
        "kind": "surface_classification",
        "format_version": 1,
        "length": cert.length,
        "euler_characteristic": euler_characteristic(cert),
        "surface": classify_surface(cert),
        "three_partite": (None if partite is None
                          else [sorted(part) for part in partite]),
        "seed": config.seed,
    }
    _write_json(_out_dir(config), "classification.json", doc)
    print(doc["surface"])
    return 0


def _cmd_construct(config: RunConfig) -> int:
    outdir = _out_dir(config)
    if config.verb == "hypercube":
        m = config.m if config.m is not None else 3
        cg = hypercube_colored(m)
        _write_text(outdir, f"hypercube_{m}.edges", save_edge_list(cg))
        _write_json(outdir, f"hypercube_{m}.json", {
            "kind": "construct_hypercube", "format_version": 1,
            "m": m, "n": cg.graph.n, "edges": cg.graph.num_edges(),
            "seed": config.seed,
        })
        print(f"Q_{m}: {cg.graph.n} vertices, {cg.graph.num_edges()} edges")
        return 0
    if config.verb == "girth":
        n = config.n if config.n is not None else 50
        ell = config.ell if config.ell is not None else 1
        res = random_high_girth_graph(n, ell, config.seed)
        stem = f"girth_{n}_{ell}_{config.seed}"
        _write_text(outdir, stem + ".edges", save_edge_list(res.graph))
        log = deletion_log_to_document(res.deletion_log, "girth", {
            "n": n, "ell": ell, "seed": config.seed, "p": res.p,
            "expected_edges": res.expected_edges,
            "sampled_edges": res.sampled_edges,
            "girth_floor": res.girth_floor, "certified": res.certified,
        })
        _write_json(outdir, stem + ".log.json", log)
        print(f"{res.graph.num_edges()} edges, girth > {res.girth_floor}, "
              f"{len(res.deletion_log)} deletions")
        return 0
    if config.verb == "3graph":
        n = config.n if config.n is not None else 30
        alpha = config.alpha if config.alpha is not None else 0.3
        res = random_short_cycle_free_3graph(n, alpha, config.seed)
        stem = f"threegraph_{n}_{_fmt(alpha)}_{config.seed}"
        _write_text(outdir, stem + ".hyper",
                    save_hyperedge_list(res.rgraph))
        log = deletion_log_to_document(res.deletion_log, "threegraph", {
            "n": n, "alpha": alpha, "seed": config.seed, "p": res.p,
            "expected_edges": res.expected_edges,
            "sampled_edges": res.sampled_edges,
            "scan_max_vertices": res.scan_max_vertices,
            "certified": res.certified,
        })
        _write_json(outdir, stem + ".log.json", log)
        print(f"{res.rgraph.num_edges()} edges, "
              f"{len(res.deletion_log)} deletions, "
              f"certified={res.certified}")
        return 0
    raise InputError(f"unknown construct verb {config.verb!r}")


_INSTANCES = {
    "matching": lambda a: matching_instance(int(a[0])),
    "stars": lambda a: disjoint_stars_instance(int(a[0]), int(a[1])),
    "bounded": lambda a: bounded_bipartite_instance(
        int(a[0]), int(a[1]), int(a[2]), int(a[3])),
    "starheavy": lambda a: star_heavy_instance(int(a[0]), int(a[1])),
    "complete": lambda a: complete_bipartite_instance(int(a[0]), int(a[1])),
    "cmatching": lambda a: colored_matching_instance(int(a[0])),
    "cstars": lambda a: colored_stars_instance(int(a[0]), int(a[1])),
}


def _parse_instance(name: str | None):
    if not name:
        raise InputError("this estimator requires --instance "
                         f"(one of {sorted(_INSTANCES)}, dash-separated "
                         "sizes, e.g. matching-600 or stars-600-4)")
    head, *args = name.split("-")
    if head not in _INSTANCES:
        raise InputError(f"unknown instance family {head!r}")
    try:
        return _INSTANCES[head](args)
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad instance spec {name!r}: {exc}") from exc


def _sniff_faces(text: str) -> bool:
    for raw in text.splitlines():
        if raw.strip().startswith("# r:"):
            return True
        line = raw.split("#", 1)[0].strip()
        if line:
            return len(line.split()) > 3
    return False


def _cmd_mc(config: RunConfig) -> int:
    outdir = _out_dir(config)
    trials = config.trials or 1000
    p = config.p if config.p is not None else 0.5
    pc = config.pc if config.pc is not None else 0.5
    lam = config.lam if config.lam is not None else 2.0
    verb = config.verb
    if verb == "neighborhood":
        inst = _parse_instance(config.instance)
        rep = estimate_neighborhood_sampling(inst, p, lam, trials,
                                             config.seed)
    elif verb == "colored":
        inst = _parse_instance(config.instance)
        rep = estimate_colored_sampling(inst, p, pc, lam, trials,
                                        config.seed)
    elif verb == "master":
        n = config.n if config.n is not None else 24
        cg = round_robin_coloring(n)
        alpha = config.alpha if config.alpha is not None else 0.3
        cfg = _sample_config(config, p=p, pc=pc, lam=lam)
        rep = estimate_master(cg, range(max(2, n // 4)), alpha, cfg, trials)
    elif verb == "reach":
        text = _read_input(config)
        if (config.mode or ("faces" if _sniff_faces(text) else "colored")
                ) == "faces":
            host, _ = load_hyperedge_list(text)
        else:
            host, _ = load_edge_list(text)
            if not isinstance(host, ColoredGraph):
                raise InputError("reach on a graph needs a colored edge list")
        cfg = _sample_config(config, p=p, pc=pc, lam=lam)
        rep = estimate_reach(host, cfg, trials)
    elif verb == "chernoff":
        mu = config.mu if config.mu is not None else 8
        rep = estimate_chernoff_lower(mu, trials, config.seed)
    elif verb == "inequalities":
        results = numeric_inequality_suite()
        doc = {
            "kind": "inequality_suite",
            "format_version": 1,
            "results": [{
                "name": r.name, "checked": r.checked, "skipped": r.skipped,
                "passed": r.passed,
                "violations": [list(map(float, v)) for v in r.violations],
            } for r in results],
            "seed": config.seed,
        }
        _write_json(outdir, "mc_inequalities.json", doc)
        ok = all(r.passed for r in results)
        print("all inequalities hold" if ok else "violations found")
        return 0 if ok else 1
    else:
        raise InputError(f"unknown mc verb {verb!r}")
    stem = f"mc_{verb}"
    _write_json(outdir, stem + ".json",
                reports_to_document([rep], verb, config.seed))
    _write_text(outdir, stem + ".csv", reports_to_csv([rep]))
    print(f"{rep.name}: failure rate {_fmt(rep.failure_rate)} "
          f"(bound {_fmt(rep.bound)}, hypothesis_ok={rep.hypothesis_ok})")
    return 0


def _cmd_report(config: RunConfig) -> int:
    from . import acceptance

    outdir = _out_dir(config)
    if config.verb == "acceptance-primary":
        results = acceptance.run_acceptance()
        _write_text(outdir, "acceptance_primary.csv",
                    acceptance.acceptance_csv(results))
        _write_json(outdir, "acceptance_primary.json", {
            "kind": "acceptance_report", "format_version": 1,
            "seed": config.seed,
            "criteria": [{
                "number": r.number, "name": r.name, "passed": r.passed,
                "details": r.details,
            } for r in results],
        })
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.number:2d} "
                  f"{r.name}: {r.details}")
        return 0 if all(r.passed for r in results) else 1
    if config.verb == "mc-trends":
        csv_text = acceptance.mc_trends_csv(config.seed)
        _write_text(outdir, "mc_trends.csv", csv_text)
        verdict_lines = [line for line in csv_text.splitlines()
                         if line.startswith("# ")]
        for line in verdict_lines:
            print(line[2:])
        return 0 if all(":pass:" in line for line in verdict_lines) else 1
    raise InputError(f"unknown report suite {config.verb!r}")


_DISPATCH = {
    "extract": _cmd_extract,
    "hextract": _cmd_hextract,
    "hverify": _cmd_hverify,
    "rainbow-cycle": _cmd_rainbow_cycle,
    "rainbow-subdivision": _cmd_rainbow_subdivision,
    "large-subdivision": _cmd_large_subdivision,
    "hcycle": _cmd_hcycle,
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "construct": _cmd_construct,
    "mc": _cmd_mc,
    "report": _cmd_report,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed configuration; returns the exit status."""
    handler = _DISPATCH.get(config.subcommand)
    if handler is None:
        print(f"unknown subcommand {config.subcommand!r}", file=sys.stderr)
        return 2
    try:
        return handler(config)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input")
    common.add_argument("--output")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--alpha", type=float)
    common.add_argument("--ell", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--p", type=float)
    common.add_argument("--pc", type=float)
    common.add_argument("--lambda", dest="lam", type=float)
    common.add_argument("--tau", type=float)
    common.add_argument("--trials", type=int)
    common.add_argument("--retries", type=int)
    common.add_argument("--mode")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--mu", type=int)
    common.add_argument("--instance")

    parser = argparse.ArgumentParser(
        prog="alphamax",
        description="Density-maximal subgraph extraction, rainbow cycle and "
                    "subdivision search, face-cycle machinery, extremal "
                    "constructions, and Monte Carlo estimates.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("extract", "hextract", "hverify", "rainbow-cycle",
                 "rainbow-subdivision", "large-subdivision", "hcycle",
                 "validate", "classify"):
        sub.add_parser(name, parents=[common])
    p_construct = sub.add_parser("construct", parents=[common])
    p_construct.add_argument("verb", choices=("hypercube", "girth", "3graph"))
    p_mc = sub.add_parser("mc", parents=[common])
    p_mc.add_argument("verb", choices=("neighborhood", "colored", "master",
                                       "reach", "chernoff", "inequalities"))
    p_report = sub.add_parser("report", parents=[common])
    p_report.add_argument("verb", choices=("acceptance-primary", "mc-trends"))
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    config = RunConfig(**vars(ns))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
