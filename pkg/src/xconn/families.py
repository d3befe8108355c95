"""Family DSL: ``cycle:5``, ``petersen``, ``strong(cycle:5,mcgee)`` and so on."""

from __future__ import annotations

from .graph import Graph, GraphError, complete, cycle, path
from .named import NAMES, named_graph
from .products import CARTESIAN, STRONG, ProductGraph, cartesian_product, strong_product

_SIZED = {"cycle": cycle, "path": path, "complete": complete}
_PRODUCTS = {STRONG: strong_product, CARTESIAN: cartesian_product}


def _split_args(body: str, spec: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                break
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1:]
    raise GraphError(f"product needs two comma-separated factors: {spec!r}")


def build(spec: str) -> Graph | ProductGraph:
    """Parse a family spec; products come back as :class:`ProductGraph`."""
    s = spec.strip()
    head, sep, rest = s.partition("(")
    if sep:
        kind = head.strip()
        if kind not in _PRODUCTS or not rest.endswith(")"):
            raise GraphError(f"unknown family {spec!r}")
        a, b = _split_args(rest[:-1], spec)
        return _PRODUCTS[kind](generate(a), generate(b))
    if s in NAMES:
        return named_graph(s)
    fam, sep, arg = s.partition(":")
    if fam not in _SIZED or not sep:
        raise GraphError(f"unknown family {spec!r}")
    try:
        m = int(arg)
    except ValueError:
        raise GraphError(f"bad size parameter in {spec!r}") from None
    return _SIZED[fam](m)


def generate(spec: str) -> Graph:
    obj = build(spec)
    return obj.graph if isinstance(obj, ProductGraph) else obj
