"""Cartesian products of graphs with row-major flat indexing."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class ProductGraph:
    """The Cartesian product of two graphs.

    Flat ids are row-major: (i, j) maps to i * |V(factor2)| + j, so the
    first coordinate is the major index.  (u1,v1) ~ (u2,v2) in `flat`
    iff the pairs agree in one coordinate and are adjacent in the other.
    """

    factor1: Graph
    factor2: Graph
    flat: Graph

    def flat_of(self, i: int, j: int) -> int:
        return i * self.factor2.vertex_count + j

    def pair_of(self, fid: int) -> tuple[int, int]:
        return divmod(fid, self.factor2.vertex_count)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    n1, n2 = g.vertex_count, h.vertex_count
    adjacency = []
    for i in range(n1):
        for j in range(n2):
            nbrs = [k * n2 + j for k in g.adjacency[i]]
            nbrs.extend(i * n2 + l for l in h.adjacency[j])
            adjacency.append(tuple(sorted(nbrs)))
    # Valid by construction: factors are simple and connected, so the
    # product is too.
    flat = Graph(n1 * n2, tuple(adjacency))
    return ProductGraph(factor1=g, factor2=h, flat=flat)
