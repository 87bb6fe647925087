"""Finite simple graphs: construction, I/O, canonical labeling and enumeration.

Vertices are the integers ``0..n-1``.  Edges are stored as a strictly sorted
tuple of pairs ``(i, j)`` with ``i < j``, which gives every graph a
deterministic identity.  Canonical labeling is done by equitable partition
refinement with backtracking over individualized vertices; automorphisms
found along the way prune the search tree.  It is meant for desk-scale
graphs (a dozen or so vertices), not as a competitor to nauty.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from graphlie.errors import (
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    OutOfBounds,
    VertexOutOfRange,
)

DEFAULT_MAX_VERTICES = 8
MAX_VERTICES_ENV = "GRAPHLIE_MAX_VERTICES"

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class Graph:
    """A finite simple graph on vertices ``0..n_vertices-1``.

    Use :func:`graph_from_edge_list` to build one from arbitrary pairs; the
    constructor itself only accepts already-normalized edges.
    """

    n_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n_vertices}")
        prev: Edge | None = None
        for i, j in self.edges:
            if i == j:
                raise LoopEdge(f"loop at vertex {i}")
            if not 0 <= i < j < self.n_vertices:
                raise VertexOutOfRange(f"edge ({i}, {j}) not normalized for n={self.n_vertices}")
            if prev is not None and (i, j) <= prev:
                raise ValueError("edge list must be strictly sorted")
            prev = (i, j)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks: bit ``j`` of entry ``i`` is set iff ``ij`` is an edge."""
        adj = [0] * self.n_vertices
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self._edge_set

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.n_vertices) if mask >> u & 1]

    def isolated_vertices(self) -> list[int]:
        return [v for v, mask in enumerate(self.adjacency) if mask == 0]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.n_vertices)):
            raise ValueError(f"{list(perm)} is not a permutation of {self.n_vertices} vertices")
        return graph_from_edge_list(self.n_vertices, [(perm[i], perm[j]) for i, j in self.edges])

    def complement(self) -> Graph:
        present = self._edge_set
        return Graph(
            self.n_vertices,
            tuple(p for p in combinations(range(self.n_vertices), 2) if p not in present),
        )

    def __str__(self) -> str:
        return f"Graph(n={self.n_vertices}, edges={list(self.edges)})"


def graph_from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Normalize unordered pairs into a :class:`Graph`.

    Duplicate pairs (in either orientation) collapse to one edge.  Loops and
    endpoints outside ``[0, n)`` raise.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges: set[Edge] = set()
    for pair in pairs:
        i, j = (int(x) for x in pair)
        if not (0 <= i < n and 0 <= j < n):
            raise VertexOutOfRange(f"edge ({i}, {j}) has an endpoint outside [0, {n})")
        if i == j:
            raise LoopEdge(f"loop at vertex {i}")
        edges.add((i, j) if i < j else (j, i))
    return Graph(n, tuple(sorted(edges)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    pairs: list[Edge] = []
    offset = 0
    for g in graphs:
        pairs.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n_vertices
    return graph_from_edge_list(offset, pairs)


# ---------------------------------------------------------------------------
# graph6 and edge-list I/O

_GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    n = g.n_vertices
    bits = [0] * (n * (n - 1) // 2)
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for i, j in g.edges:
        bits[j * (j - 1) // 2 + i] = 1
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_n(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string.  Surrounding whitespace and the optional header are ignored."""
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"byte out of range 63..126 in {s!r}")
    if codes[0] < 63:
        n, pos = codes[0], 1
    elif len(codes) >= 2 and codes[1] == 63:
        if len(codes) < 8:
            raise MalformedGraph6(f"truncated vertex count in {s!r}")
        n, pos = 0, 8
        for c in codes[2:8]:
            n = n << 6 | c
    else:
        if len(codes) < 4:
            raise MalformedGraph6(f"truncated vertex count in {s!r}")
        n, pos = 0, 4
        for c in codes[1:4]:
            n = n << 6 | c
    n_bits = n * (n - 1) // 2
    expected = pos + (n_bits + 5) // 6
    if len(codes) != expected:
        raise MalformedGraph6(f"expected {expected} bytes for n={n}, got {len(codes)}")
    edges: list[Edge] = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = codes[pos + k // 6]
            if c >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line ``n``, then one ``i j`` per line.

    Blank lines and ``#`` comments are skipped.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedEdgeList("missing vertex count")
    try:
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise MalformedEdgeList(f"expected 'i j', got {ln!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, MalformedEdgeList):
            raise
        raise MalformedEdgeList(str(exc)) from exc
    return graph_from_edge_list(n, pairs)


def to_edge_list(g: Graph) -> str:
    return "".join([f"{g.n_vertices}\n"] + [f"{i} {j}\n" for i, j in g.edges])


def degree_sequence(g: Graph) -> list[int]:
    return sorted((mask.bit_count() for mask in g.adjacency), reverse=True)


# ---------------------------------------------------------------------------
# Partition refinement


def _refine(adj: Sequence[int], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Refine an ordered partition to the coarsest equitable one below it.

    Each cell is split by the vector of neighbour counts into every current
    cell; sub-cells are ordered by that vector.  The returned trace records
    the split signatures and depends only on the isomorphism type of
    (graph, ordered partition), never on vertex names.
    """
    trace = []
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        round_trace = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            split = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
                round_trace.append((sig, len(groups[sig])))
        if not split:
            # quotient degrees of the final equitable partition
            trace.append((1, tuple((adj[c[0]] & m).bit_count() for c in cells for m in masks)))
            return cells, tuple(trace)
        trace.append((0, tuple(round_trace)))
        cells = new_cells


def _individualize(cells: list[list[int]], index: int, v: int) -> list[list[int]]:
    cell = cells[index]
    rest = [u for u in cell if u != v]
    return cells[:index] + [[v], rest] + cells[index + 1 :]


def _target_cell(cells: list[list[int]]) -> int:
    for k, cell in enumerate(cells):
        if len(cell) > 1:
            return k
    return -1


def _leaf_key(g: Graph, order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits (row-major, first pair most significant) after relabeling."""
    n = g.n_vertices
    pos = [0] * n
    for k, v in enumerate(order):
        pos[v] = k
    total = n * (n - 1) // 2
    key = 0
    for i, j in g.edges:
        a, b = pos[i], pos[j]
        if a > b:
            a, b = b, a
        idx = a * (2 * n - a - 1) // 2 + (b - a - 1)
        key |= 1 << (total - 1 - idx)
    return key


def _orbit_reps(n: int, generators: Iterable[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x in range(n):
            a, b = find(x), find(gen[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


@dataclass(frozen=True)
class CanonicalForm:
    """``relabeling[i]`` is the canonical label of input vertex ``i``."""

    relabeling: tuple[int, ...]
    canonical_graph: Graph


class _CanonSearch:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.adj = g.adjacency
        self.best: tuple[tuple, int] | None = None
        self.best_order: list[int] | None = None
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> list[int]:
        n = self.g.n_vertices
        if n == 0:
            return []
        self._search([list(range(n))], [], ())
        assert self.best_order is not None
        return self.best_order

    def _search(self, cells: list[list[int]], prefix: list[int], trace: tuple) -> None:
        cells, t = _refine(self.adj, cells)
        trace = trace + (t,)
        if self.best is not None:
            best_trace = self.best[0]
            common = min(len(trace), len(best_trace))
            if trace[:common] > best_trace[:common]:
                return
        k = _target_cell(cells)
        if k < 0:
            order = [c[0] for c in cells]
            cand = (trace, _leaf_key(self.g, order))
            if self.best is None or cand < self.best:
                self.best, self.best_order = cand, order
            elif cand == self.best:
                assert self.best_order is not None
                gen = [0] * len(order)
                for a, b in zip(self.best_order, order):
                    gen[a] = b
                self.generators.append(tuple(gen))
            return
        tried: list[int] = []
        for v in sorted(cells[k]):
            if tried:
                fixing = [gen for gen in self.generators if all(gen[p] == p for p in prefix)]
                if fixing:
                    reps = _orbit_reps(len(self.adj), fixing)
                    if any(reps[v] == reps[u] for u in tried):
                        continue
            self._search(_individualize(cells, k, v), prefix + [v], trace)
            tried.append(v)


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    """Relabel ``g`` into a representative shared by its whole isomorphism class."""
    order = _CanonSearch(g).run()
    relabeling = [0] * g.n_vertices
    for k, v in enumerate(order):
        relabeling[v] = k
    return CanonicalForm(tuple(relabeling), g.relabel(relabeling))


# ---------------------------------------------------------------------------
# Isomorphisms and automorphisms


@dataclass(frozen=True)
class GraphIso:
    """A vertex bijection ``vertex_map[i]`` from ``source`` onto ``target``."""

    source: Graph
    target: Graph
    vertex_map: tuple[int, ...]

    def problems(self) -> list[str]:
        """Describe every violated invariant; empty when ``self`` is a genuine isomorphism."""
        n = self.source.n_vertices
        if n != self.target.n_vertices:
            return [f"vertex counts differ ({n} vs {self.target.n_vertices})"]
        if sorted(self.vertex_map) != list(range(n)):
            return [f"vertex_map {list(self.vertex_map)} is not a bijection on {n} vertices"]
        issues = []
        mapped = {tuple(sorted((self.vertex_map[i], self.vertex_map[j]))) for i, j in self.source.edges}
        if mapped != set(self.target.edges):
            issues.append("vertex_map does not carry source edges onto target edges")
        return issues

    def is_valid(self) -> bool:
        return not self.problems()

    def inverse(self) -> GraphIso:
        inv = [0] * len(self.vertex_map)
        for i, j in enumerate(self.vertex_map):
            inv[j] = i
        return GraphIso(self.target, self.source, tuple(inv))

    def then(self, other: GraphIso) -> GraphIso:
        """Composite ``other ∘ self``."""
        if other.source != self.target:
            raise ValueError("isomorphisms are not composable")
        return GraphIso(self.source, other.target, tuple(other.vertex_map[i] for i in self.vertex_map))


def are_isomorphic(g1: Graph, g2: Graph) -> GraphIso | None:
    """Return a witness isomorphism ``g1 -> g2``, or ``None``."""
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return None
    if degree_sequence(g1) != degree_sequence(g2):
        return None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.canonical_graph != c2.canonical_graph:
        return None
    inv2 = [0] * g2.n_vertices
    for v, k in enumerate(c2.relabeling):
        inv2[k] = v
    return GraphIso(g1, g2, tuple(inv2[k] for k in c1.relabeling))


def _first_leaf(adj: Sequence[int], g: Graph, cells: list[list[int]]) -> tuple[tuple, int]:
    traces = []
    while True:
        cells, t = _refine(adj, cells)
        traces.append(t)
        k = _target_cell(cells)
        if k < 0:
            return tuple(traces), _leaf_key(g, [c[0] for c in cells])
        cells = _individualize(cells, k, min(cells[k]))


def _has_leaf(adj: Sequence[int], g: Graph, cells: list[list[int]], want: tuple[tuple, int], depth: int) -> bool:
    cells, t = _refine(adj, cells)
    if depth >= len(want[0]) or t != want[0][depth]:
        return False
    k = _target_cell(cells)
    if k < 0:
        return depth == len(want[0]) - 1 and _leaf_key(g, [c[0] for c in cells]) == want[1]
    return any(_has_leaf(adj, g, _individualize(cells, k, v), want, depth + 1) for v in sorted(cells[k]))


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, via orbit-stabilizer along the search tree."""
    adj = g.adjacency
    cells: list[list[int]] = [list(range(g.n_vertices))] if g.n_vertices else []
    order = 1
    while True:
        cells, _ = _refine(adj, cells)
        k = _target_cell(cells)
        if k < 0:
            return order
        v, *others = sorted(cells[k])
        child = _individualize(cells, k, v)
        # traces below are relative to the child node, so start matching at depth 0
        want = _first_leaf(adj, g, child)
        orbit = 1 + sum(_has_leaf(adj, g, _individualize(cells, k, w), want, 0) for w in others)
        order *= orbit
        cells = child


def brute_force_isomorphisms(g1: Graph, g2: Graph) -> list[GraphIso]:
    """All isomorphisms found by trying every bijection; independent of the refinement code."""
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return []
    target = set(g2.edges)
    found = []
    for perm in permutations(range(g1.n_vertices)):
        if all(((perm[i], perm[j]) if perm[i] < perm[j] else (perm[j], perm[i])) in target for i, j in g1.edges):
            found.append(GraphIso(g1, g2, perm))
    return found


# ---------------------------------------------------------------------------
# Enumeration


def max_vertices_bound(override: int | None = None) -> int:
    """The enumeration vertex bound: explicit override, else the environment, else the default."""
    if override is not None:
        return override
    env = os.environ.get(MAX_VERTICES_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise OutOfBounds(f"{MAX_VERTICES_ENV}={env!r} is not an integer") from exc
    return DEFAULT_MAX_VERTICES


@lru_cache(maxsize=None)
def _layer(n: int, e: int) -> tuple[Graph, ...]:
    """Sorted canonical representatives on ``n`` vertices with ``e`` edges.

    Built by adding one edge to every class with ``e - 1`` edges; the upper
    half of the edge range is obtained by complementation.
    """
    total = n * (n - 1) // 2
    if e == 0:
        return (canonical_form(Graph(n)).canonical_graph,)
    if 2 * e > total:
        return tuple(sorted({canonical_form(g.complement()).canonical_graph for g in _layer(n, total - e)}))
    seen: set[Graph] = set()
    for g in _layer(n, e - 1):
        present = set(g.edges)
        for pair in combinations(range(n), 2):
            if pair not in present:
                seen.add(canonical_form(Graph(n, tuple(sorted(present | {pair})))).canonical_graph)
    return tuple(sorted(seen))


def enumerate_graphs(n_vertices: int, n_edges: int, *, max_vertices: int | None = None) -> list[Graph]:
    """One canonical representative per isomorphism class with the given vertex and edge counts."""
    bound = max_vertices_bound(max_vertices)
    if n_vertices < 0:
        raise OutOfBounds(f"negative vertex count {n_vertices}")
    if n_vertices > bound:
        raise OutOfBounds(f"{n_vertices} vertices exceeds the enumeration bound {bound}")
    total = n_vertices * (n_vertices - 1) // 2
    if not 0 <= n_edges <= total:
        raise OutOfBounds(f"{n_edges} edges impossible on {n_vertices} vertices")
    return list(_layer(n_vertices, n_edges))


def count_graph_classes(n_vertices: int, *, max_vertices: int | None = None) -> int:
    total = n_vertices * (n_vertices - 1) // 2
    return sum(len(enumerate_graphs(n_vertices, e, max_vertices=max_vertices)) for e in range(total + 1))


def all_labeled_graphs(n: int) -> Iterable[Graph]:
    """Every labeled graph on ``n`` vertices (``2 ** C(n, 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
