"""Lie algebra morphisms induced by graph isomorphisms, and the isomorphism decision.

Deciding whether two graph algebras are isomorphic reduces to deciding
whether their graphs are.  A positive answer comes with an explicit matrix
that is checked against the bracket; a negative one names an invariant (or
the canonical graph forms) telling the two apart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from graphlie import linalg
from graphlie.algebra import (
    EdgeWedge,
    GraphLieAlgebra,
    LieElement,
    Vertex,
    build_algebra,
    format_fraction,
    parse_fraction,
)
from graphlie.errors import AlgebraMismatch, InvalidGraphIso
from graphlie.graphs import GraphIso, are_isomorphic, canonical_form, parse_graph6, to_graph6
from graphlie.invariants import invariant_vector

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"


class LieMorphism:
    """A linear map given by its matrix: column ``k`` holds the image of ``source.basis[k]``."""

    def __init__(self, source: GraphLieAlgebra, target: GraphLieAlgebra, matrix: Sequence[Sequence]) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(rows) != target.dim or any(len(row) != source.dim for row in rows):
            raise AlgebraMismatch(f"matrix shape must be {target.dim} x {source.dim}")
        self.source = source
        self.target = target
        self.matrix = rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieMorphism):
            return NotImplemented
        return (self.source, self.target, self.matrix) == (other.source, other.target, other.matrix)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix))

    def __repr__(self) -> str:
        return f"LieMorphism({self.source!r} -> {self.target!r})"

    def column(self, k: int) -> LieElement:
        return self.target.from_vector(row[k] for row in self.matrix)

    def __call__(self, x: LieElement) -> LieElement:
        if x.algebra != self.source:
            raise AlgebraMismatch("element is not in the source algebra")
        return self.target.from_vector(linalg.mat_vec(self.matrix, x.to_vector()))

    def __matmul__(self, other: LieMorphism) -> LieMorphism:
        """Composite ``self ∘ other``."""
        if other.target != self.source:
            raise AlgebraMismatch("morphisms are not composable")
        return LieMorphism(other.source, self.target, linalg.mat_mul(self.matrix, other.matrix))

    def _sparse_columns(self) -> list[dict[int, Fraction]]:
        return [
            {r: row[k] for r, row in enumerate(self.matrix) if row[k]} for k in range(self.source.dim)
        ]

    def is_homomorphism(self) -> bool:
        """``M [a, b] == [M a, M b]`` for every ordered pair of source basis elements."""
        src, dst = self.source, self.target
        cols = self._sparse_columns()
        for a_idx, a in enumerate(src.basis):
            for b_idx, b in enumerate(src.basis):
                lhs: dict[int, Fraction] = {}
                for c, coeff in src.bracket_basis(a, b):
                    for r, q in cols[src.index[c]].items():
                        lhs[r] = lhs.get(r, 0) + coeff * q
                rhs: dict[int, Fraction] = {}
                for r, qa in cols[a_idx].items():
                    x = dst.basis[r]
                    for s, qb in cols[b_idx].items():
                        for c, coeff in dst.bracket_basis(x, dst.basis[s]):
                            k = dst.index[c]
                            rhs[k] = rhs.get(k, 0) + qa * qb * coeff
                if {k: q for k, q in lhs.items() if q} != {k: q for k, q in rhs.items() if q}:
                    return False
        return True

    def is_invertible(self) -> bool:
        return self.source.dim == self.target.dim and linalg.rank(self.matrix, self.source.dim) == self.source.dim

    def to_dict(self) -> dict:
        return {
            "source": to_graph6(self.source.source_graph),
            "target": to_graph6(self.target.source_graph),
            "matrix": [[format_fraction(x) for x in row] for row in self.matrix],
        }


def verify_morphism(m: LieMorphism, *, as_isomorphism: bool = True) -> bool:
    """Check the bracket law on every ordered pair of source basis elements.

    With ``as_isomorphism`` the matrix must also be square and invertible.
    """
    if not m.is_homomorphism():
        return False
    if as_isomorphism:
        return m.is_invertible()
    return True


def induce_lie_iso(sigma: GraphIso) -> LieMorphism:
    """Transport a graph isomorphism to the algebras.

    ``v_i`` goes to ``v_σ(i)`` and ``w_ij`` to ``±w`` on the image edge, with
    a minus sign when ``σ`` reverses the order of ``i < j``.
    """
    problems = sigma.problems()
    if problems:
        raise InvalidGraphIso("; ".join(problems))
    src, dst = build_algebra(sigma.source), build_algebra(sigma.target)
    matrix = [[Fraction(0)] * src.dim for _ in range(dst.dim)]
    for k, label in enumerate(src.basis):
        if isinstance(label, Vertex):
            matrix[dst.index[Vertex(sigma.vertex_map[label.index])]][k] = Fraction(1)
        else:
            si, sj = sigma.vertex_map[label.i], sigma.vertex_map[label.j]
            sign = 1 if si < sj else -1
            matrix[dst.index[EdgeWedge(min(si, sj), max(si, sj))]][k] = Fraction(sign)
    return LieMorphism(src, dst, matrix)


@dataclass(frozen=True)
class Separator:
    invariant: str
    left: object
    right: object

    def to_dict(self) -> dict:
        def plain(v: object) -> object:
            return list(v) if isinstance(v, tuple) else v

        return {"invariant": self.invariant, "left": plain(self.left), "right": plain(self.right)}


@dataclass(frozen=True)
class IsoCertificate:
    verdict: str
    source: GraphLieAlgebra
    target: GraphLieAlgebra
    sigma: GraphIso | None = None
    tau: LieMorphism | None = None
    separator: Separator | None = None

    @property
    def isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC

    def is_sound(self) -> bool:
        """Re-check the certificate from scratch."""
        if self.isomorphic:
            return (
                self.sigma is not None
                and self.tau is not None
                and self.sigma.is_valid()
                and self.tau.source == self.source
                and self.tau.target == self.target
                and verify_morphism(self.tau)
            )
        if self.separator is None:
            return False
        left, right = _separator_values(self.source, self.target, self.separator.invariant)
        return (left, right) == (self.separator.left, self.separator.right) and left != right

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "source": to_graph6(self.source.source_graph),
            "target": to_graph6(self.target.source_graph),
            "sigma": list(self.sigma.vertex_map) if self.sigma else None,
            "tau": [[format_fraction(x) for x in row] for row in self.tau.matrix] if self.tau else None,
            "separator": self.separator.to_dict() if self.separator else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _separator_values(a1: GraphLieAlgebra, a2: GraphLieAlgebra, name: str) -> tuple[object, object]:
    if name == "canonical_form":
        return (
            to_graph6(canonical_form(a1.source_graph).canonical_graph),
            to_graph6(canonical_form(a2.source_graph).canonical_graph),
        )
    return getattr(invariant_vector(a1), name), getattr(invariant_vector(a2), name)


def certificate_from_dict(data: Mapping) -> IsoCertificate:
    source = build_algebra(parse_graph6(data["source"]))
    target = build_algebra(parse_graph6(data["target"]))
    sigma = tau = separator = None
    if data.get("sigma") is not None:
        sigma = GraphIso(source.source_graph, target.source_graph, tuple(int(x) for x in data["sigma"]))
    if data.get("tau") is not None:
        tau = LieMorphism(source, target, [[parse_fraction(x) for x in row] for row in data["tau"]])
    if data.get("separator") is not None:
        sep = data["separator"]
        left, right = sep["left"], sep["right"]
        if isinstance(left, list):
            left, right = tuple(left), tuple(right)
        separator = Separator(sep["invariant"], left, right)
    return IsoCertificate(data["verdict"], source, target, sigma, tau, separator)


def certificate_from_json(text: str) -> IsoCertificate:
    return certificate_from_dict(json.loads(text))


def algebras_isomorphic(a1: GraphLieAlgebra, a2: GraphLieAlgebra) -> IsoCertificate:
    sigma = are_isomorphic(a1.source_graph, a2.source_graph)
    if sigma is not None:
        tau = induce_lie_iso(sigma)
        if not verify_morphism(tau):
            raise AssertionError(f"induced map for {sigma.vertex_map} failed verification")
        return IsoCertificate(ISOMORPHIC, a1, a2, sigma=sigma, tau=tau)
    diff = invariant_vector(a1).first_difference(invariant_vector(a2))
    if diff is None:
        left, right = _separator_values(a1, a2, "canonical_form")
        diff = ("canonical_form", left, right)
    return IsoCertificate(NOT_ISOMORPHIC, a1, a2, separator=Separator(*diff))
