"""The 2-step nilpotent Lie algebra attached to a simple graph.

For a graph on vertices ``0..n-1`` the algebra has one generator ``v_i`` per
vertex and one generator ``w_ij`` (``i < j``) per edge.  The only nonzero
brackets are ``[v_i, v_j] = w_ij`` and ``[v_j, v_i] = -w_ij`` for edges
``ij`` with ``i < j``; every ``w_ij`` is central.  Coefficients are
:class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Union

from graphlie import linalg
from graphlie.errors import AlgebraMismatch, UnknownBasisLabel
from graphlie.graphs import Graph, parse_graph6, to_graph6

Scalar = Union[Fraction, int]


@dataclass(frozen=True, order=True)
class Vertex:
    index: int

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True, order=True)
class EdgeWedge:
    i: int
    j: int

    def __post_init__(self) -> None:
        if not self.i < self.j:
            raise ValueError(f"edge generator needs i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"w{self.i}-{self.j}"


BasisLabel = Union[Vertex, EdgeWedge]


def parse_label(text: str) -> BasisLabel:
    """Inverse of ``str`` on basis labels: ``"v3"`` or ``"w1-4"``."""
    try:
        if text.startswith("v"):
            return Vertex(int(text[1:]))
        if text.startswith("w"):
            i, j = text[1:].split("-")
            return EdgeWedge(int(i), int(j))
    except ValueError:
        pass
    raise UnknownBasisLabel(f"cannot parse basis label {text!r}")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class GraphLieAlgebra:
    """Basis, structure constants and element factory for one graph's algebra.

    Two instances compare equal exactly when they were built from the same
    graph.
    """

    def __init__(self, graph: Graph) -> None:
        self.source_graph = graph
        self.basis: tuple[BasisLabel, ...] = tuple(Vertex(i) for i in range(graph.n_vertices)) + tuple(
            EdgeWedge(i, j) for i, j in graph.edges
        )
        self.index: dict[BasisLabel, int] = {b: k for k, b in enumerate(self.basis)}
        constants: dict[tuple[BasisLabel, BasisLabel], tuple[tuple[BasisLabel, Fraction], ...]] = {}
        for i, j in graph.edges:
            w = EdgeWedge(i, j)
            constants[Vertex(i), Vertex(j)] = ((w, Fraction(1)),)
            constants[Vertex(j), Vertex(i)] = ((w, Fraction(-1)),)
        self.structure_constants = constants

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_labels(self) -> tuple[BasisLabel, ...]:
        return self.basis[: self.source_graph.n_vertices]

    @property
    def edge_labels(self) -> tuple[BasisLabel, ...]:
        return self.basis[self.source_graph.n_vertices :]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphLieAlgebra) and other.source_graph == self.source_graph

    def __hash__(self) -> int:
        return hash(("GraphLieAlgebra", self.source_graph))

    def __repr__(self) -> str:
        return f"GraphLieAlgebra({self.source_graph})"

    def check_label(self, label: BasisLabel) -> BasisLabel:
        if label not in self.index:
            raise UnknownBasisLabel(f"{label} is not a basis label of {self!r}")
        return label

    def bracket_basis(self, a: BasisLabel, b: BasisLabel) -> tuple[tuple[BasisLabel, Fraction], ...]:
        return self.structure_constants.get((a, b), ())

    # element construction

    def element(self, coords: Mapping[BasisLabel, Scalar] | None = None) -> LieElement:
        return LieElement(self, coords or {})

    def zero(self) -> LieElement:
        return LieElement(self, {})

    def basis_element(self, label: BasisLabel) -> LieElement:
        return LieElement(self, {label: Fraction(1)})

    def v(self, i: int) -> LieElement:
        return self.basis_element(Vertex(i))

    def w(self, i: int, j: int) -> LieElement:
        if i > j:
            return -self.basis_element(EdgeWedge(j, i))
        return self.basis_element(EdgeWedge(i, j))

    def from_vector(self, vector: Iterable[Scalar]) -> LieElement:
        values = list(vector)
        if len(values) != self.dim:
            raise AlgebraMismatch(f"vector of length {len(values)} for a {self.dim}-dimensional algebra")
        return LieElement(self, dict(zip(self.basis, values)))

    @cached_property
    def ad_matrices(self) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
        """``ad_matrices[k][r][c]`` is the coefficient of basis ``r`` in ``[basis[k], basis[c]]``."""
        mats = []
        for a in self.basis:
            m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for c, b in enumerate(self.basis):
                for label, coeff in self.bracket_basis(a, b):
                    m[self.index[label]][c] += coeff
            mats.append(tuple(tuple(row) for row in m))
        return tuple(mats)

    def to_dict(self) -> dict:
        brackets = []
        for a_idx, a in enumerate(self.basis):
            for b_idx in range(a_idx + 1, self.dim):
                for c, coeff in self.bracket_basis(a, self.basis[b_idx]):
                    if coeff:
                        brackets.append([a_idx, b_idx, self.index[c], format_fraction(coeff)])
        return {
            "graph": to_graph6(self.source_graph),
            "dim": self.dim,
            "basis": [str(b) for b in self.basis],
            "brackets": brackets,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def build_algebra(g: Graph) -> GraphLieAlgebra:
    return GraphLieAlgebra(g)


def algebra_from_dict(data: Mapping) -> GraphLieAlgebra:
    """Rebuild an algebra from its JSON form, checking the stored table against the graph."""
    algebra = build_algebra(parse_graph6(data["graph"]))
    if data.get("dim") != algebra.dim or [str(b) for b in algebra.basis] != list(data.get("basis", [])):
        raise ValueError("basis in JSON does not match the graph")
    if algebra.to_dict()["brackets"] != [list(row) for row in data.get("brackets", [])]:
        raise ValueError("bracket table in JSON does not match the graph")
    return algebra


def algebra_from_json(text: str) -> GraphLieAlgebra:
    return algebra_from_dict(json.loads(text))


class LieElement:
    """Sparse exact coordinates over an algebra's basis; zero coefficients are never stored."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: GraphLieAlgebra, coords: Mapping[BasisLabel, Scalar]) -> None:
        self.algebra = algebra
        clean: dict[BasisLabel, Fraction] = {}
        for label, value in coords.items():
            algebra.check_label(label)
            q = Fraction(value)
            if q:
                clean[label] = q
        self.coords = clean

    def _same(self, other: LieElement) -> None:
        if other.algebra != self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other: LieElement) -> LieElement:
        self._same(other)
        out = dict(self.coords)
        for label, q in other.coords.items():
            out[label] = out.get(label, 0) + q
        return LieElement(self.algebra, out)

    def __neg__(self) -> LieElement:
        return LieElement(self.algebra, {k: -q for k, q in self.coords.items()})

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> LieElement:
        return LieElement(self.algebra, {k: q * scalar for k, q in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.coords.items())))

    def is_zero(self) -> bool:
        return not self.coords

    def to_vector(self) -> list[Fraction]:
        vec = [Fraction(0)] * self.algebra.dim
        for label, q in self.coords.items():
            vec[self.algebra.index[label]] = q
        return vec

    def __repr__(self) -> str:
        if not self.coords:
            return "0"
        terms = sorted(self.coords.items(), key=lambda kv: self.algebra.index[kv[0]])
        return " + ".join(f"{q}*{label}" for label, q in terms)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of the structure constants."""
    x._same(y)
    algebra = x.algebra
    out: dict[BasisLabel, Fraction] = {}
    for a, qa in x.coords.items():
        for b, qb in y.coords.items():
            for c, coeff in algebra.bracket_basis(a, b):
                out[c] = out.get(c, 0) + qa * qb * coeff
    return LieElement(algebra, out)


def jacobi_defect(x: LieElement, y: LieElement, z: LieElement) -> LieElement:
    x._same(y)
    x._same(z)
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def lower_central_series_dims(a: GraphLieAlgebra) -> list[int]:
    """Dimensions of ``n = C1 ⊇ C2 ⊇ ...`` with ``C(k+1) = [n, Ck]``, ending at the first zero term."""
    current = [a.basis_element(b).to_vector() for b in a.basis]
    dims = [linalg.rank(current, a.dim)]
    while dims[-1] and len(dims) <= a.dim + 1:
        spanning = [a.from_vector(v) for v in current]
        nxt = []
        for b in a.basis:
            x = a.basis_element(b)
            for y in spanning:
                z = bracket(x, y)
                if not z.is_zero():
                    nxt.append(z.to_vector())
        current = nxt
        dims.append(linalg.rank(current, a.dim))
    return dims


def nilpotency_class(a: GraphLieAlgebra) -> int:
    """Smallest ``k`` with ``C(k+1) = 0``; the zero algebra has class 0."""
    dims = lower_central_series_dims(a)
    if dims[0] == 0:
        return 0
    k = dims.index(0)
    expected = 1 if a.source_graph.n_edges == 0 else 2
    assert k == expected, f"lower central series gives class {k}, edge count predicts {expected}"
    return k
