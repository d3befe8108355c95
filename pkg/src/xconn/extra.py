"""Exact g-extra connectivity.

Two independent routes:

* :func:`kappa_g_oracle` tries every vertex set S by increasing size.
* :func:`kappa_g_search` enumerates connected candidate components A and
  scores the cheapest cut built around each.

Why the second route is exhaustive: fix a component H of G - S for a
minimum g-extra cut S.  Every component of G - N[H] either contains a
component of G - S (so has more than g vertices) or lies inside S - N(H).
Given A = H, the cheapest cut having A as a component is therefore

    N(A)  plus every component of G - N[A] with at most g vertices,

since small pieces must go and large ones can stay; its size is at most
|S|.  Taking H to be the smallest component, ``|H| <= (n - |S|) / 2 <=
(n - kappa(G)) / 2``, so enumerating connected A up to that size meets the
optimum.  When no vertex of S has all its neighbours inside S (the case in
the products of interest) the completion is empty and ``S = N(H)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, boundary_mask, component_masks, from_mask, is_connected, to_mask
from .invariants import INF, vertex_connectivity
from .products import ProductGraph, layer_G1, layer_G2

FINITE = "finite"
INFINITE = "infinite"
UNKNOWN_ABOVE_CAP = "unknown-above-cap"
UNKNOWN_ABOVE_BUDGET = "unknown-above-budget"

ORACLE = "oracle"
BRANCH_AND_BOUND = "branch_and_bound"


class WorkLimitExceeded(RuntimeError):
    """The oracle refused a subset level that would exceed its work guard."""


@dataclass(frozen=True)
class CutCertificate:
    S: frozenset[int]
    g: int
    components: tuple[frozenset[int], ...]
    valid: bool

    @property
    def component_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.components))

    def smallest_component(self) -> frozenset[int]:
        return min(self.components, key=lambda c: (len(c), sorted(c)))

    def to_text(self) -> str:
        lines = [
            f"g {self.g}",
            f"size {len(self.S)}",
            f"valid {str(self.valid).lower()}",
            "S " + " ".join(map(str, sorted(self.S))),
        ]
        lines.extend("C " + " ".join(map(str, sorted(c))) for c in self.components)
        return "\n".join(lines) + "\n"


@dataclass
class ExtraConnResult:
    status: str
    g: int
    method: str
    value: int | float | None = None
    witness: CutCertificate | None = None
    witness_component: frozenset[int] | None = None
    upper_bound: int | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def known(self) -> bool:
        return self.status in (FINITE, INFINITE)

    def display_value(self) -> str:
        if self.status == FINITE:
            return str(self.value)
        if self.status == INFINITE:
            return "inf"
        return "unknown"


def _certificate(G: Graph, s_mask: int, g: int) -> CutCertificate:
    comps = component_masks(G, s_mask)
    valid = len(comps) >= 2 and all(c.bit_count() > g for c in comps)
    return CutCertificate(
        frozenset(from_mask(s_mask)), g, tuple(frozenset(from_mask(c)) for c in comps), valid
    )


def is_g_extra_cut(G: Graph, S, g: int) -> CutCertificate:
    return _certificate(G, to_mask(G.check_set(S)), g)


class _ExpandTable:
    """Byte-indexed neighbourhood unions: ``expand(X)`` is the union of N(v), v in X."""

    def __init__(self, G: Graph):
        self.tables = []
        for base in range(0, G.n, 8):
            chunk = [G.masks[v] if v < G.n else 0 for v in range(base, base + 8)]
            t = [0] * 256
            for b in range(1, 256):
                low = b & -b
                t[b] = t[b ^ low] | chunk[low.bit_length() - 1]
            self.tables.append(t)

    def expand(self, x: int) -> int:
        r = 0
        for t in self.tables:
            r |= t[x & 255]
            x >>= 8
        return r


def kappa_g_oracle(G: Graph, g: int, size_cap: int | None = None,
                   max_work: int = 50_000_000) -> ExtraConnResult:
    """Brute-force kappa_g: first size s at which some s-subset is a g-extra cut.

    Subsets are visited in lexicographic order, so the witness is the
    lexicographically smallest minimum cut.  ``max_work`` bounds the number
    of subsets touched; a level that would cross it raises
    :class:`WorkLimitExceeded` before any of it is enumerated.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    t0 = time.perf_counter()
    n = G.n
    # no g-extra cut can exceed n - 2(g + 1): two components of > g vertices survive
    full_cap = n - 2 * (g + 1)
    cap = full_cap if size_cap is None else min(size_cap, full_cap)
    table = _ExpandTable(G)
    everything = G.all_mask()
    bits = [1 << v for v in range(n)]
    work = 0
    for s in range(0, cap + 1):
        level = comb(n, s)
        if work + level > max_work:
            raise WorkLimitExceeded(
                f"oracle level |S|={s} needs {level} subsets; {work} done, guard is {max_work}")
        work += level
        for combo in combinations(bits, s):
            S = sum(combo)
            rest = everything & ~S
            comp = rest & -rest
            frontier = comp
            while frontier:
                frontier = table.expand(frontier) & rest & ~comp
                comp |= frontier
            if comp == rest:
                continue
            cert = _certificate(G, S, g)
            if cert.valid:
                return ExtraConnResult(
                    FINITE, g, ORACLE, value=s, witness=cert,
                    witness_component=cert.smallest_component(), upper_bound=s,
                    nodes_explored=work, elapsed=time.perf_counter() - t0)
    status = INFINITE if cap >= full_cap else UNKNOWN_ABOVE_CAP
    return ExtraConnResult(status, g, ORACLE, value=INF if status == INFINITE else None,
                           nodes_explored=work, elapsed=time.perf_counter() - t0,
                           stats={"size_cap": cap})


def _greedy_incumbent(G: Graph, g: int, cap: int):
    """Cheap upper bound: grow A from every vertex, always adding the vertex
    that keeps N(A) smallest, and test N(A) once |A| > g."""
    masks = G.masks
    best = None
    for root in range(G.n):
        a = 1 << root
        closed = masks[root] | a
        for size in range(1, cap + 1):
            if size > g:
                s = closed & ~a
                if best is None or s.bit_count() < best[0]:
                    t = _completion(G, a, s, g)
                    if t is not None and (best is None or (s | t).bit_count() < best[0]):
                        best = ((s | t).bit_count(), a, s | t)
            if size == cap:
                break
            options = closed & ~a
            if not options:
                break
            pick = None
            for v in from_mask(options):
                c = closed | masks[v]
                key = ((c & ~(a | (1 << v))).bit_count(), v)
                if pick is None or key < pick[0]:
                    pick = (key, v)
            v = pick[1]
            a |= 1 << v
            closed |= masks[v]
    return best


def _completion(G: Graph, a: int, s: int, g: int) -> int | None:
    """Vertices to add to ``s = N(A)`` so that every other component exceeds g.

    Returns the mask of the small components of ``G - N[A]``, or ``None``
    when no component of more than g vertices would remain.
    """
    small = 0
    big = False
    for c in component_masks(G, a | s):
        if c.bit_count() > g:
            big = True
        else:
            small |= c
    return small if big else None


def kappa_g_search(G: Graph, g: int, budget_nodes: int | None = None,
                   timeout: float | None = None, kappa: int | None = None) -> ExtraConnResult:
    """Exact kappa_g by branch-and-bound over connected candidate components.

    Each candidate A is scored with the cut ``N(A)`` plus the small
    components of ``G - N[A]`` (see the module docstring).  Every connected
    A is generated once from its least vertex ``r`` by
    include/exclude branching on undecided boundary vertices; vertices below
    ``r`` start out excluded.  An excluded boundary vertex stays in N(A) for
    good, and each undecided one either joins A (using one unit of the size
    allowance) or stays in the boundary, so

        |N(final A)| >= |excluded boundary| + max(0, |undecided| - room)

    is a sound bound.  Ties are kept so the reported witness component is
    the lexicographically smallest among minimum cuts with a component of
    at most ``(n - kappa) // 2`` vertices.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    if not is_connected(G):
        raise GraphError("kappa_g_search needs a connected graph")
    t0 = time.perf_counter()
    n = G.n
    masks = G.masks
    if kappa is None:
        kappa = vertex_connectivity(G)
    cap = (n - kappa) // 2
    stats = {"size_cap": cap, "kappa": kappa}
    if cap < g + 1:
        return ExtraConnResult(INFINITE, g, BRANCH_AND_BOUND, value=INF,
                               elapsed=time.perf_counter() - t0, stats=stats)

    seed = _greedy_incumbent(G, g, cap)
    best_value = seed[0] if seed else INF
    stats["greedy_bound"] = best_value
    best_a = None     # witness component mask from the exhaustive pass
    best_key = None   # its sorted vertex tuple
    best_root = n     # least vertex of best_a
    best_s = 0

    deadline = None if timeout is None else t0 + timeout
    nodes = 0
    out_of_budget = False
    g1 = g + 1

    class _Stop(Exception):
        pass

    def visit(root, a, closed, x, size):
        nonlocal nodes, best_value, best_a, best_key, best_root, best_s
        nodes += 1
        if budget_nodes is not None and nodes > budget_nodes:
            raise _Stop
        if deadline is not None and not nodes & 1023 and time.perf_counter() > deadline:
            raise _Stop
        bnd = closed & ~a
        und = bnd & ~x
        room = cap - size
        fixed = (bnd & x).bit_count()
        if not und or not room:
            if size < g1:
                return
            value = bnd.bit_count()
            if value > best_value or (value == best_value and best_root < root):
                return
            extra_cut = _completion(G, a, bnd, g)
            if extra_cut is None:
                return
            value += extra_cut.bit_count()
            if value > best_value or (value == best_value and best_root < root):
                return
            key = tuple(from_mask(a))
            if value < best_value or best_key is None or key < best_key:
                best_value, best_a, best_key, best_root = value, a, key, root
                best_s = bnd | extra_cut
            return
        extra = und.bit_count() - room
        lb = fixed + extra if extra > 0 else fixed
        if lb > best_value or (lb == best_value and best_root < root):
            return
        v = (und & -und).bit_length() - 1
        bit = 1 << v
        visit(root, a | bit, closed | masks[v], x, size + 1)
        visit(root, a, closed, x | bit, size)

    try:
        for root in range(n):
            below = (1 << root) - 1
            visit(root, 1 << root, masks[root] | (1 << root), below, 1)
    except _Stop:
        out_of_budget = True

    elapsed = time.perf_counter() - t0
    if out_of_budget:
        ub = None if best_value == INF else int(best_value)
        return ExtraConnResult(UNKNOWN_ABOVE_BUDGET, g, BRANCH_AND_BOUND, upper_bound=ub,
                               nodes_explored=nodes, elapsed=elapsed, stats=stats)
    if best_a is None:
        if seed is not None:
            raise AssertionError("exhaustive pass missed the greedy incumbent")
        return ExtraConnResult(INFINITE, g, BRANCH_AND_BOUND, value=INF,
                               nodes_explored=nodes, elapsed=elapsed, stats=stats)
    cert = _certificate(G, best_s, g)
    assert cert.valid and len(cert.S) == best_value
    return ExtraConnResult(FINITE, g, BRANCH_AND_BOUND, value=int(best_value), witness=cert,
                           witness_component=frozenset(from_mask(best_a)),
                           upper_bound=int(best_value), nodes_explored=nodes,
                           elapsed=elapsed, stats=stats)


# -- constructive upper bounds for products ---------------------------------

def _factor_path(F: Graph, length: int, start: int = 0) -> tuple[int, ...] | None:
    """First simple path with ``length`` vertices from ``start`` in DFS order by id."""
    def dfs(p):
        if len(p) == length:
            return p
        for w in F.adj[p[-1]]:
            if w not in p:
                r = dfs(p + (w,))
                if r:
                    return r
        return None
    return dfs((start,))


def build_layer_path_cut(P: ProductGraph, g: int, axis: int = 1,
                         anchor: tuple[tuple[int, ...], int] | None = None) -> CutCertificate:
    """Certificate for N(A), A a (g+1)-vertex path inside one layer.

    ``axis=1`` puts the path in a G1-layer (first coordinate varies),
    ``axis=2`` in a G2-layer.  ``anchor = (path, fixed)`` gives the factor
    path and the index of the fixed coordinate; by default the first DFS
    path from vertex 0 and fixed coordinate 0.
    """
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis}")
    factor = P.factor1 if axis == 1 else P.factor2
    if anchor is None:
        fpath = _factor_path(factor, g + 1)
        if fpath is None:
            raise GraphError(f"factor has no path on {g + 1} vertices")
        fixed = 0
    else:
        fpath, fixed = tuple(anchor[0]), anchor[1]
    if len(fpath) != g + 1 or len(set(fpath)) != len(fpath):
        raise GraphError(f"anchor path must have {g + 1} distinct vertices")
    for a, b in zip(fpath, fpath[1:]):
        if not factor.has_edge(a, b):
            raise GraphError(f"anchor path step {a}-{b} is not an edge of the factor")
    if axis == 1:
        A = [P.vertex(x, fixed) for x in fpath]
    else:
        A = [P.vertex(fixed, y) for y in fpath]
    a = to_mask(A)
    return _certificate(P.graph, boundary_mask(P.graph, a), g)


def build_block_cut(P: ProductGraph, anchor: tuple[tuple[int, int], tuple[int, int]] | None = None,
                    g: int = 3) -> CutCertificate:
    """Certificate for N(A), A = {x1, x2} x {y1, y2} over an edge of each factor."""
    if anchor is None:
        e1 = next(P.factor1.edges(), None)
        e2 = next(P.factor2.edges(), None)
        if e1 is None or e2 is None:
            raise GraphError("both factors need an edge")
        anchor = (e1, e2)
    (x1, x2), (y1, y2) = anchor
    if not P.factor1.has_edge(x1, x2):
        raise GraphError(f"{x1}-{x2} is not an edge of the first factor")
    if not P.factor2.has_edge(y1, y2):
        raise GraphError(f"{y1}-{y2} is not an edge of the second factor")
    a = to_mask(P.vertex(x, y) for x in (x1, x2) for y in (y1, y2))
    return _certificate(P.graph, boundary_mask(P.graph, a), g)


def minimal_component_property(G: Graph, cert: CutCertificate) -> bool:
    """True iff S equals the open boundary of every component (holds for minimum cuts)."""
    s = to_mask(cert.S)
    return all(boundary_mask(G, to_mask(c)) == s for c in cert.components)


def check_layer_slice_property(P: ProductGraph, result: ExtraConnResult,
                               kappa1: int | None = None, kappa2: int | None = None) -> bool:
    """Every nonempty layer slice of the witness cut has at least factor-kappa vertices.

    ``xS`` (cut inside the G2-layer at x) must reach kappa(G2) and ``S_y``
    (cut inside the G1-layer at y) must reach kappa(G1).
    """
    if result.status != FINITE or result.witness is None:
        raise ValueError("need a finite result with a witness")
    S = result.witness.S
    if kappa1 is None:
        kappa1 = vertex_connectivity(P.factor1)
    if kappa2 is None:
        kappa2 = vertex_connectivity(P.factor2)
    return slices_meet(P, S, kappa1, kappa2)


def slices_meet(P: ProductGraph, S, kappa1: int, kappa2: int) -> bool:
    S = frozenset(S)
    for x in range(P.n1):
        part = S & layer_G2(P, x)
        if part and len(part) < kappa2:
            return False
    for y in range(P.n2):
        part = S & layer_G1(P, y)
        if part and len(part) < kappa1:
            return False
    return True
