"""Bipartite graphs, bipartition detection, and layered path/cycle products.

Vertices are integers 0..n-1.  A graph carries a 2-coloring (part labels 1
and 2) computed deterministically: components are explored by BFS from
their lowest-index vertex, which gets part 1.  Graphs are immutable after
construction and capped at 64 vertices so vertex subsets fit in one machine
word for the downstream counting DP.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph input (bad index, self-loop, duplicate edge, size)."""


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    part: tuple[int, ...]
    bipartite_ok: bool

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def part_sizes(self) -> tuple[int, int]:
        n1 = sum(1 for p in self.part if p == 1)
        return n1, self.n - n1


@dataclass(frozen=True)
class ProductSpec:
    """Base graph G, subset S of its vertices, and the path length m for
    the layered product: layer copies of G, with inter-layer edges only
    above vertices in S."""

    base: BipartiteGraph
    s_set: frozenset[int]
    path_len: int

    def __post_init__(self):
        if not all(0 <= v < self.base.n for v in self.s_set):
            raise GraphError("s_set contains a vertex outside the base graph")
        if self.path_len < 1:
            raise GraphError("path_len must be >= 1")


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]


def _check_edges(n: int, edges, allow_dup: bool = False) -> list[tuple[int, int]]:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
    norm = []
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            if allow_dup:
                continue
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        norm.append(e)
    return norm


def _two_color(n: int, edges: list[tuple[int, int]]) -> tuple[list[int], bool]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    part = [0] * n
    ok = True
    for root in range(n):
        if part[root]:
            continue
        part[root] = 1  # lowest index of each component gets part 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if part[w] == 0:
                    part[w] = 3 - part[u]
                    queue.append(w)
                elif part[w] == part[u]:
                    ok = False  # odd cycle; labels kept as computed so far
        # on conflict keep scanning so every vertex still gets a label
    return part, ok


def build_graph(n: int, edges) -> BipartiteGraph:
    """Validate the edge list and compute the canonical bipartition."""
    norm = _check_edges(n, edges)
    part, ok = _two_color(n, norm)
    return BipartiteGraph(n, tuple(norm), tuple(part), ok)


def build_digraph(n: int, arcs) -> Digraph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
    seen = set()
    out = []
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if (u, v) in seen:
            raise GraphError(f"duplicate arc ({u},{v})")
        seen.add((u, v))
        out.append((u, v))
    return Digraph(n, tuple(out))


def path_graph(n: int) -> BipartiteGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> BipartiteGraph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> BipartiteGraph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _layer_edges(spec: ProductSpec, wrap: bool) -> list[tuple[int, int]]:
    g, m = spec.base, spec.path_len
    n = g.n
    edges = []
    for i in range(m):
        off = i * n
        for u, v in g.edges:
            edges.append((off + u, off + v))
    for v in sorted(spec.s_set):
        for i in range(m - 1):
            edges.append((i * n + v, (i + 1) * n + v))
        if wrap and m > 1:
            edges.append(((m - 1) * n + v, v))
    return edges


def product_with_path(spec: ProductSpec) -> BipartiteGraph:
    """Layered product of the base graph with a path: vertex (v, i) gets
    index i*n + v; (v,i)-(v,i+1) edges exist only for v in s_set."""
    total = spec.base.n * spec.path_len
    if total > MAX_VERTICES:
        raise GraphError(f"product on {total} vertices exceeds cap {MAX_VERTICES}")
    return build_graph(total, _layer_edges(spec, wrap=False))


def product_with_cycle(spec: ProductSpec) -> BipartiteGraph:
    """Same as product_with_path plus the wrap-around layer edges.  For
    path_len = 2 the wrap edge duplicates the path edge and is dropped."""
    total = spec.base.n * spec.path_len
    if total > MAX_VERTICES:
        raise GraphError(f"product on {total} vertices exceeds cap {MAX_VERTICES}")
    edges = _check_edges(total, _layer_edges(spec, wrap=True), allow_dup=True)
    part, ok = _two_color(total, edges)
    return BipartiteGraph(total, tuple(edges), tuple(part), ok)


def comb_graph(m: int) -> BipartiteGraph:
    """Spine path of m vertices, one pendant tooth per spine vertex."""
    return product_with_path(ProductSpec(path_graph(2), frozenset({1}), m))


def grid2_graph(m: int) -> BipartiteGraph:
    """The 2-by-m grid (full Cartesian product of an edge with a path)."""
    return product_with_path(ProductSpec(path_graph(2), frozenset({0, 1}), m))


def disjoint_union(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    """Relabeled union: h's vertices are shifted by g.n; no cross edges."""
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return build_graph(g.n + h.n, edges)


def with_swapped_parts(g: BipartiteGraph) -> BipartiteGraph:
    """The same graph with part labels 1 and 2 exchanged (for invariance
    checks; build_graph itself always returns the canonical coloring)."""
    return BipartiteGraph(g.n, g.edges, tuple(3 - p for p in g.part), g.bipartite_ok)


def parse_graph_text(text: str) -> BipartiteGraph:
    """Plain-text graph format: first non-comment line is n, then one
    "u v" pair per line.  Lines starting with '#' are ignored."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def parse_s_list(text: str) -> frozenset[int]:
    """Comma-separated vertex indices; empty string means the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(","))
