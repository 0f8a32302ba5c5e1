"""Simple graphs, proper edge colorings, and restricted neighborhoods.

Vertices are dense integer ids 0..n-1.  Edges are unordered pairs stored twice:
as a sorted tuple of sorted pairs and as a per-vertex adjacency table.  The two
views are built together and must always agree; ``check_invariants`` verifies
that, and the test suite calls it liberally.

A colored graph carries a proper edge coloring (no two edges sharing a vertex
get the same color).  Improper colorings are rejected at load time unless the
caller explicitly downgrades the check to a warning.

A forbidden map assigns to each vertex a set of vertices and a set of colors
that extensions out of that vertex must avoid; it is the bookkeeping device the
reach iteration uses to keep witness paths rainbow and self-avoiding.
"""

from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "InputError",
    "ImproperColoringError",
    "SimpleGraph",
    "ColoredGraph",
    "ForbiddenMap",
    "check_proper_coloring",
    "load_edge_list",
    "save_edge_list",
    "graph_to_document",
    "graph_from_document",
    "graph_digest",
]


class InputError(ValueError):
    """Malformed input: bad vertex ids, loops, duplicate edges, bad files."""


class ImproperColoringError(InputError):
    """Edge coloring repeats a color at a shared vertex."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InputError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            e = _normalize_edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise InputError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    # -- basic counts ------------------------------------------------------

    def num_vertices(self) -> int:
        return self.n

    def num_edges(self) -> int:
        return len(self.edges)

    def average_degree(self) -> float:
        return 2.0 * len(self.edges) / self.n if self.n else 0.0

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.n else False

    def vertices(self) -> range:
        return range(self.n)

    # -- set operations ----------------------------------------------------

    def neighborhood(self, xs: Iterable[int]) -> set[int]:
        """N(X): vertices outside X adjacent to some vertex of X."""
        xset = set(xs)
        out: set[int] = set()
        for x in xset:
            out |= self._adj[x]
        return out - xset

    def edges_between(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        """Number of edges with one endpoint in X and the other in Y (X, Y disjoint)."""
        xset, yset = set(xs), set(ys)
        if xset & yset:
            raise InputError("edges_between expects disjoint sets")
        return sum(1 for u, v in self.edges if (u in xset) != (v in xset)
                   and (u in yset or v in yset))

    def induced_subgraph(self, vs: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on ``vs`` reindexed to 0..k-1.

        Returns the subgraph and the mapping: position i holds the original id
        of new vertex i (original ids in increasing order).
        """
        keep = sorted(set(vs))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise InputError("induced_subgraph: vertex out of range")
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges
                     if u in index and v in index]
        return SimpleGraph(len(keep), sub_edges), keep

    def check_invariants(self) -> None:
        """Edge list and adjacency must describe the same graph."""
        rebuilt: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            rebuilt[u].add(v)
            rebuilt[v].add(u)
        if tuple(frozenset(s) for s in rebuilt) != self._adj:
            raise AssertionError("adjacency/edge-list mismatch")
        if 2 * len(self.edges) != sum(len(a) for a in self._adj):
            raise AssertionError("handshake mismatch")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, e={len(self.edges)})"


class ColoredGraph:
    """Simple graph with a proper edge coloring (color ids are ints)."""

    __slots__ = ("graph", "colors")

    def __init__(self, graph: SimpleGraph,
                 colors: Mapping[tuple[int, int], int],
                 allow_improper: bool = False):
        self.graph = graph
        normalized = {}
        for (u, v), c in colors.items():
            e = _normalize_edge(u, v)
            if not graph.has_edge(*e):
                raise InputError(f"color assigned to non-edge {e}")
            normalized[e] = int(c)
        missing = set(graph.edges) - set(normalized)
        if missing:
            raise InputError(f"{len(missing)} edges missing a color")
        self.colors: dict[tuple[int, int], int] = normalized
        bad = check_proper_coloring(self)
        if bad is not None:
            if allow_improper:
                warnings.warn(f"improper coloring at vertex {bad[0]}: "
                              f"edges {bad[1]} and {bad[2]} share color")
            else:
                raise ImproperColoringError(
                    f"edges {bad[1]} and {bad[2]} at vertex {bad[0]} share a color")

    @property
    def n(self) -> int:
        return self.graph.n

    def color_of(self, u: int, v: int) -> int:
        return self.colors[_normalize_edge(u, v)]

    def color_set(self) -> set[int]:
        return set(self.colors.values())

    def num_colors(self) -> int:
        return len(self.color_set())

    def restricted_neighborhood(self, xs: Iterable[int], qs: Iterable[int],
                                phi: "ForbiddenMap | None" = None) -> set[int]:
        """N_{Q,phi}(X): y outside X joined to some x in X by an edge whose
        color lies in Q minus phi(x)'s colors, with y not forbidden by phi(x)."""
        xset = set(xs)
        qset = set(qs)
        out: set[int] = set()
        for x in xset:
            fv = phi.vertices_of(x) if phi is not None else frozenset()
            fc = phi.colors_of(x) if phi is not None else frozenset()
            for y in self.graph.neighbors(x):
                if y in xset or y in fv or y in out:
                    continue
                c = self.color_of(x, y)
                if c in qset and c not in fc:
                    out.add(y)
        return out

    def induced_subgraph(self, vs: Iterable[int]) -> tuple["ColoredGraph", list[int]]:
        sub, mapping = self.graph.induced_subgraph(vs)
        back = {orig: i for i, orig in enumerate(mapping)}
        colors = {(back[u], back[v]): self.colors[(u, v)]
                  for u, v in self.graph.edges if u in back and v in back}
        return ColoredGraph(sub, colors), mapping

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ColoredGraph)
                and self.graph == other.graph and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.graph, tuple(sorted(self.colors.items()))))

    def __repr__(self) -> str:
        return (f"ColoredGraph(n={self.n}, e={self.graph.num_edges()}, "
                f"colors={self.num_colors()})")


def check_proper_coloring(cg: ColoredGraph) -> tuple[int, tuple, tuple] | None:
    """Return None if proper, else (vertex, edge1, edge2) witnessing a clash."""
    at_vertex: dict[tuple[int, int], tuple[int, int]] = {}
    for (u, v), c in sorted(cg.colors.items()):
        for w in (u, v):
            key = (w, c)
            if key in at_vertex:
                return w, at_vertex[key], (u, v)
            at_vertex[key] = (u, v)
    return None


@dataclass(frozen=True)
class ForbiddenMap:
    """Per-vertex forbidden vertices and colors (the phi of restricted reach)."""

    forbidden_vertices: dict[int, frozenset[int]] = field(default_factory=dict)
    forbidden_colors: dict[int, frozenset[int]] = field(default_factory=dict)

    @staticmethod
    def empty() -> "ForbiddenMap":
        return ForbiddenMap()

    def vertices_of(self, v: int) -> frozenset[int]:
        return self.forbidden_vertices.get(v, frozenset())

    def colors_of(self, v: int) -> frozenset[int]:
        return self.forbidden_colors.get(v, frozenset())

    def size_at(self, v: int) -> int:
        """|phi(v)|: forbidden vertices plus forbidden colors at v."""
        return len(self.vertices_of(v)) + len(self.colors_of(v))

    def max_size(self) -> int:
        keys = set(self.forbidden_vertices) | set(self.forbidden_colors)
        return max((self.size_at(v) for v in keys), default=0)


# ---------------------------------------------------------------------------
# serialization: edge-list text and structured JSON documents
# ---------------------------------------------------------------------------

FORMAT_VERSION = 1


def load_edge_list(text: str, allow_improper: bool = False
                   ) -> tuple[SimpleGraph | ColoredGraph, dict[str, int]]:
    """Parse ``u v [color]`` lines ('#' starts a comment).

    Labels may be arbitrary tokens; they are remapped to dense ids in sorted
    order (numeric labels sort numerically) and the mapping is returned.
    Either every line has a color or none does.
    """
    rows: list[tuple[str, str, str | None]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2:
            rows.append((parts[0], parts[1], None))
        elif len(parts) == 3:
            rows.append((parts[0], parts[1], parts[2]))
        else:
            raise InputError(f"line {lineno}: expected 'u v [color]', got {raw!r}")
    has_color = [r[2] is not None for r in rows]
    if any(has_color) and not all(has_color):
        raise InputError("mixed colored and uncolored edge lines")

    labels = sorted({r[0] for r in rows} | {r[1] for r in rows}, key=_label_key)
    mapping = {lab: i for i, lab in enumerate(labels)}
    edges = [(mapping[a], mapping[b]) for a, b, _ in rows]
    graph = SimpleGraph(len(labels), edges)
    if rows and all(has_color):
        colors = {}
        for a, b, c in rows:
            try:
                colors[_normalize_edge(mapping[a], mapping[b])] = int(c)
            except ValueError as exc:
                raise InputError(f"bad color token {c!r}") from exc
        return ColoredGraph(graph, colors, allow_improper=allow_improper), mapping
    return graph, mapping


def _label_key(tok: str):
    try:
        return (0, int(tok), "")
    except ValueError:
        return (1, 0, tok)


def save_edge_list(g: SimpleGraph | ColoredGraph) -> str:
    """Canonical edge-list text: sorted edges, dense integer labels.

    ``load_edge_list(save_edge_list(g))`` reproduces ``g`` exactly, and saving
    the reloaded graph reproduces the text byte for byte.
    """
    if isinstance(g, ColoredGraph):
        lines = [f"{u} {v} {g.colors[(u, v)]}" for u, v in g.graph.edges]
        n = g.n
    else:
        lines = [f"{u} {v}" for u, v in g.edges]
        n = g.n
    header = f"# vertices: {n}"
    return "\n".join([header, *lines]) + "\n"


def graph_to_document(g: SimpleGraph | ColoredGraph) -> dict:
    """Structured JSON-ready document mirroring the type's fields."""
    if isinstance(g, ColoredGraph):
        return {
            "format_version": FORMAT_VERSION,
            "kind": "colored_graph",
            "n": g.n,
            "edges": [[u, v, g.colors[(u, v)]] for u, v in g.graph.edges],
        }
    return {
        "format_version": FORMAT_VERSION,
        "kind": "graph",
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_from_document(doc: Mapping, allow_improper: bool = False
                        ) -> SimpleGraph | ColoredGraph:
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {doc.get('format_version')!r}")
    kind = doc.get("kind")
    if kind == "graph":
        return SimpleGraph(int(doc["n"]), [tuple(e) for e in doc["edges"]])
    if kind == "colored_graph":
        edges = [(int(e[0]), int(e[1])) for e in doc["edges"]]
        colors = {(int(e[0]), int(e[1])): int(e[2]) for e in doc["edges"]}
        return ColoredGraph(SimpleGraph(int(doc["n"]), edges), colors,
                            allow_improper=allow_improper)
    raise InputError(f"unknown document kind {kind!r}")


def graph_digest(g: SimpleGraph | ColoredGraph) -> str:
    """Stable hex digest of the canonical serialization (for certificates)."""
    doc = graph_to_document(g)
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _sorted_pair(u: int, v: int) -> tuple[int, int]:
    return _normalize_edge(u, v)


def round_robin_coloring(n: int) -> "ColoredGraph":
    """Properly edge-colored K_n via the circle method.

    Uses n-1 colors for even n and n colors for odd n; handy for building
    dense properly colored test instances.
    """
    if n < 2:
        return ColoredGraph(SimpleGraph(n, []), {})
    points = list(range(n)) if n % 2 == 0 else list(range(n)) + [None]
    size = len(points)
    colors: dict[tuple[int, int], int] = {}
    arr = points[:]
    for rnd in range(size - 1):
        for i in range(size // 2):
            a, b = arr[i], arr[size - 1 - i]
            if a is not None and b is not None:
                colors[_normalize_edge(a, b)] = rnd
        arr = [arr[0]] + [arr[-1]] + arr[1:-1]
    assert len(colors) == n * (n - 1) // 2
    graph = SimpleGraph(n, list(colors))
    return ColoredGraph(graph, colors)
