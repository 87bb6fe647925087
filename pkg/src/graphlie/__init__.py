"""2-step nilpotent Lie algebras built from finite simple graphs."""

from graphlie.algebra import (
    EdgeWedge,
    GraphLieAlgebra,
    LieElement,
    Vertex,
    bracket,
    build_algebra,
    jacobi_defect,
    nilpotency_class,
)
from graphlie.enumerate import DimensionCatalog, catalog_counts, classify_dimension
from graphlie.graphs import (
    CanonicalForm,
    Graph,
    GraphIso,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    degree_sequence,
    enumerate_graphs,
    graph_from_edge_list,
    parse_graph6,
    to_graph6,
)
from graphlie.invariants import InvariantVector, ad_rank, center_dim, derived_subalgebra_dim, invariant_vector
from graphlie.morphisms import IsoCertificate, LieMorphism, algebras_isomorphic, induce_lie_iso, verify_morphism

__version__ = "0.1.0"
