"""Catalogs of graph Lie algebras by dimension."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from graphlie.algebra import GraphLieAlgebra, algebra_from_dict, build_algebra
from graphlie.errors import OutOfBounds
from graphlie.graphs import Graph, enumerate_graphs, max_vertices_bound, parse_graph6, to_graph6
from graphlie.invariants import InvariantVector, invariant_vector


@dataclass(frozen=True)
class CatalogEntry:
    graph: Graph
    algebra: GraphLieAlgebra
    invariants: InvariantVector

    def to_dict(self) -> dict:
        return {
            "graph": to_graph6(self.graph),
            "invariants": self.invariants.to_dict(),
            "algebra": self.algebra.to_dict(),
        }


@dataclass(frozen=True)
class DimensionCatalog:
    dimension: int
    include_abelian: bool
    entries: tuple[CatalogEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def graphs(self) -> list[Graph]:
        return [e.graph for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "include_abelian": self.include_abelian,
            "count": len(self.entries),
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def catalog_from_dict(data: Mapping) -> DimensionCatalog:
    entries = []
    for item in data["entries"]:
        graph = parse_graph6(item["graph"])
        algebra = algebra_from_dict(item["algebra"])
        if algebra.source_graph != graph:
            raise ValueError("catalog entry algebra does not match its graph")
        entries.append(CatalogEntry(graph, algebra, InvariantVector.from_dict(item["invariants"])))
    return DimensionCatalog(int(data["dimension"]), bool(data["include_abelian"]), tuple(entries))


def catalog_from_json(text: str) -> DimensionCatalog:
    return catalog_from_dict(json.loads(text))


def dimension_cells(n: int, include_abelian: bool = True) -> list[tuple[int, int]]:
    """All (vertices, edges) with ``vertices + edges = n`` that a simple graph can realize."""
    cells = []
    for v in range(n + 1):
        e = n - v
        if e > v * (v - 1) // 2 or (e == 0 and not include_abelian):
            continue
        cells.append((v, e))
    return cells


def _cell_entries(cell: tuple[int, int], bound: int) -> list[CatalogEntry]:
    v, e = cell
    entries = []
    for g in enumerate_graphs(v, e, max_vertices=bound):
        a = build_algebra(g)
        entries.append(CatalogEntry(g, a, invariant_vector(a)))
    return entries


def classify_dimension(
    n: int,
    include_abelian: bool = True,
    *,
    max_vertices: int | None = None,
    jobs: int = 1,
) -> DimensionCatalog:
    """One entry per isomorphism class of graph algebras of dimension ``n``.

    Every graph with ``v + e = n`` has at most ``n`` vertices, so the catalog
    is complete only when ``n`` is within the vertex bound; larger ``n``
    raises :class:`OutOfBounds`.
    """
    bound = max_vertices_bound(max_vertices)
    if n < 1:
        raise OutOfBounds(f"dimension must be positive, got {n}")
    if n > bound:
        raise OutOfBounds(f"dimension {n} needs graphs on up to {n} vertices; bound is {bound}")
    cells = dimension_cells(n, include_abelian)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_cell_entries, cells, [bound] * len(cells)))
    else:
        parts = [_cell_entries(cell, bound) for cell in cells]
    entries = sorted((e for part in parts for e in part), key=lambda e: e.graph)
    return DimensionCatalog(n, include_abelian, tuple(entries))


def catalog_counts(max_n: int, include_abelian: bool = True, *, max_vertices: int | None = None) -> list[int]:
    return [len(classify_dimension(n, include_abelian, max_vertices=max_vertices)) for n in range(1, max_n + 1)]
