"""Exact linear-algebra invariants of graph Lie algebras."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Mapping

from graphlie import linalg
from graphlie.algebra import BasisLabel, GraphLieAlgebra, Vertex, nilpotency_class


@dataclass(frozen=True)
class InvariantVector:
    dim: int
    dim_derived: int
    dim_center: int
    nilpotency_class: int
    ad_rank_multiset: tuple[int, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ad_rank_multiset"] = list(self.ad_rank_multiset)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> InvariantVector:
        return cls(
            dim=int(data["dim"]),
            dim_derived=int(data["dim_derived"]),
            dim_center=int(data["dim_center"]),
            nilpotency_class=int(data["nilpotency_class"]),
            ad_rank_multiset=tuple(int(x) for x in data["ad_rank_multiset"]),
        )

    def first_difference(self, other: InvariantVector) -> tuple[str, object, object] | None:
        """Name and values of the first field (in declaration order) where the vectors differ."""
        for f in fields(self):
            left, right = getattr(self, f.name), getattr(other, f.name)
            if left != right:
                return f.name, left, right
        return None


def derived_subalgebra_dim(a: GraphLieAlgebra) -> int:
    rows = []
    for k, x in enumerate(a.basis):
        for y in a.basis[k + 1 :]:
            vec = [Fraction(0)] * a.dim
            for c, coeff in a.bracket_basis(x, y):
                vec[a.index[c]] += coeff
            rows.append(vec)
    return linalg.rank(rows, a.dim)


def _stacked_ad_rows(a: GraphLieAlgebra) -> list[list[Fraction]]:
    # row (b, r), column c: coefficient of basis r in [basis[c], b]
    ad = a.ad_matrices
    rows = []
    for b_idx in range(a.dim):
        for r in range(a.dim):
            rows.append([ad[c][r][b_idx] for c in range(a.dim)])
    return rows


def center_basis(a: GraphLieAlgebra) -> list[list[Fraction]]:
    return linalg.nullspace(_stacked_ad_rows(a), a.dim)


def center_dim(a: GraphLieAlgebra) -> int:
    """Dimension of ``{x : [x, y] = 0 for all y}`` as a nullspace dimension."""
    if a.dim == 0:
        return 0
    return a.dim - linalg.rank(_stacked_ad_rows(a), a.dim)


def center_dim_from_graph(a: GraphLieAlgebra) -> int:
    """Edge count plus isolated vertices: the center read off the graph, no linear algebra."""
    g = a.source_graph
    return g.n_edges + len(g.isolated_vertices())


def ad_rank(a: GraphLieAlgebra, b: BasisLabel) -> int:
    a.check_label(b)
    return linalg.rank(a.ad_matrices[a.index[b]], a.dim)


def invariant_vector(a: GraphLieAlgebra) -> InvariantVector:
    ranks = sorted((ad_rank(a, Vertex(i)) for i in range(a.source_graph.n_vertices)), reverse=True)
    return InvariantVector(
        dim=a.dim,
        dim_derived=derived_subalgebra_dim(a),
        dim_center=center_dim(a),
        nilpotency_class=nilpotency_class(a),
        ad_rank_multiset=tuple(ranks),
    )
