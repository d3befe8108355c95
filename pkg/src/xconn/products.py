"""Strong and Cartesian products with layer and projection helpers.

Product vertex ``(x, y)`` has id ``x * n2 + y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError

STRONG = "strong"
CARTESIAN = "cartesian"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    factor1: Graph
    factor2: Graph
    kind: str

    @property
    def n1(self) -> int:
        return self.factor1.n

    @property
    def n2(self) -> int:
        return self.factor2.n

    @property
    def factor_names(self) -> tuple[str, str]:
        return self.factor1.name, self.factor2.name

    def vertex(self, x: int, y: int) -> int:
        if not (0 <= x < self.n1 and 0 <= y < self.n2):
            raise GraphError(f"factor pair ({x}, {y}) out of range")
        return x * self.n2 + y

    def pair(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.graph.n:
            raise GraphError(f"vertex {v} out of range")
        return divmod(v, self.n2)

    def numbering_comment(self) -> str:
        a, b = self.factor_names
        return f"{self.kind}({a},{b}) n1={self.n1} n2={self.n2} vertex(x,y)=x*{self.n2}+y"


def _product_name(kind, G1, G2):
    return f"{kind}({G1.name or '?'},{G2.name or '?'})"


def _check_factors(G1: Graph, G2: Graph) -> None:
    if G1.n == 0 or G2.n == 0:
        raise GraphError("product factors must be nonempty")


def strong_product(G1: Graph, G2: Graph) -> ProductGraph:
    _check_factors(G1, G2)
    n2 = G2.n
    edges = []
    for x in range(G1.n):
        edges.extend((x * n2 + a, x * n2 + b) for a, b in G2.edges())
    for y in range(n2):
        edges.extend((a * n2 + y, b * n2 + y) for a, b in G1.edges())
    for x1, x2 in G1.edges():
        for y1, y2 in G2.edges():
            edges.append((x1 * n2 + y1, x2 * n2 + y2))
            edges.append((x1 * n2 + y2, x2 * n2 + y1))
    G = Graph(G1.n * n2, edges, name=_product_name(STRONG, G1, G2))
    return ProductGraph(G, G1, G2, STRONG)


def cartesian_product(G1: Graph, G2: Graph) -> ProductGraph:
    _check_factors(G1, G2)
    n2 = G2.n
    edges = []
    for x in range(G1.n):
        edges.extend((x * n2 + a, x * n2 + b) for a, b in G2.edges())
    for y in range(n2):
        edges.extend((a * n2 + y, b * n2 + y) for a, b in G1.edges())
    G = Graph(G1.n * n2, edges, name=_product_name(CARTESIAN, G1, G2))
    return ProductGraph(G, G1, G2, CARTESIAN)


def layer_G1(P: ProductGraph, y: int) -> frozenset[int]:
    """The G1-layer ``{(u, y) : u in V(G1)}``."""
    if not 0 <= y < P.n2:
        raise GraphError(f"G2 vertex {y} out of range")
    return frozenset(u * P.n2 + y for u in range(P.n1))


def layer_G2(P: ProductGraph, x: int) -> frozenset[int]:
    """The G2-layer ``{(x, v) : v in V(G2)}``."""
    if not 0 <= x < P.n1:
        raise GraphError(f"G1 vertex {x} out of range")
    return frozenset(range(x * P.n2, (x + 1) * P.n2))


def project(P: ProductGraph, S: Iterable[int], axis: int) -> frozenset[int]:
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis}")
    return frozenset(P.pair(v)[axis - 1] for v in S)


def slice_by_G1_vertex(P: ProductGraph, S: Iterable[int], x: int) -> frozenset[int]:
    """S intersected with the G2-layer at ``x``."""
    return frozenset(S) & layer_G2(P, x)


def slice_by_G2_vertex(P: ProductGraph, S: Iterable[int], y: int) -> frozenset[int]:
    """S intersected with the G1-layer at ``y``."""
    return frozenset(S) & layer_G1(P, y)
