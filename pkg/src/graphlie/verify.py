"""Structural self-checks for one graph algebra, used by ``graphlie verify``."""

from __future__ import annotations

from itertools import product

from graphlie.algebra import GraphLieAlgebra, Vertex, bracket, jacobi_defect, nilpotency_class
from graphlie.invariants import ad_rank, center_dim, center_dim_from_graph, derived_subalgebra_dim


def verification_report(a: GraphLieAlgebra) -> dict[str, bool]:
    """Run every basis-level check; each value is True when the check holds."""
    g = a.source_graph
    basis = [a.basis_element(b) for b in a.basis]
    edge_elems = [a.basis_element(b) for b in a.edge_labels]
    report = {
        "dimension_formula": a.dim == g.n_vertices + g.n_edges,
        "derived_dimension": derived_subalgebra_dim(a) == g.n_edges,
        "antisymmetry": all((bracket(x, y) + bracket(y, x)).is_zero() for x, y in product(basis, repeat=2)),
        "jacobi": all(jacobi_defect(x, y, z).is_zero() for x, y, z in product(basis, repeat=3)),
        "edge_generators_central": all(bracket(x, w).is_zero() for x in basis for w in edge_elems),
        "center_dimension": center_dim(a) == center_dim_from_graph(a),
        "ad_rank_equals_degree": all(ad_rank(a, Vertex(v)) == g.degree(v) for v in range(g.n_vertices)),
    }
    try:
        cls = nilpotency_class(a)
        report["nilpotency_class"] = cls == (0 if a.dim == 0 else 1 if g.n_edges == 0 else 2)
    except AssertionError:
        report["nilpotency_class"] = False
    return report
